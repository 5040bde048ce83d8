#include "tcl/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace tcl {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else if (c != '\r') {
            cell.push_back(c);
        }
    }
    cells.push_back(cell);
    return cells;
}

std::string trimmed(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

double parse_cell(const std::string& raw, std::size_t row, const std::string& col) {
    std::string s = trimmed(raw);
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || s.empty()) {
        throw validation_error("non-numeric cell at row " + std::to_string(row) + ", column " +
                               col + ": '" + raw + "'");
    }
    return value;
}

void format_value(std::string& out, double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
    (void)ec;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const std::string& treatment_col,
                 const std::string& outcome_col) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw validation_error("empty file: " + path.string());
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);

    std::vector<std::string> header = split_line(line);
    for (auto& name : header) name = trimmed(name);

    Index treatment_idx = -1, outcome_idx = -1;
    std::vector<Index> covariate_cols;
    std::vector<std::string> covariate_names;
    for (Index j = 0; j < static_cast<Index>(header.size()); ++j) {
        const std::string& name = header[static_cast<std::size_t>(j)];
        if (name == treatment_col) {
            if (treatment_idx >= 0) throw validation_error("duplicate treatment column: " + name);
            treatment_idx = j;
        } else if (name == outcome_col) {
            if (outcome_idx >= 0) throw validation_error("duplicate outcome column: " + name);
            outcome_idx = j;
        } else {
            covariate_cols.push_back(j);
            covariate_names.push_back(name);
        }
    }
    if (treatment_idx < 0) throw validation_error("missing treatment column: " + treatment_col);
    if (outcome_idx < 0) throw validation_error("missing outcome column: " + outcome_col);
    if (covariate_cols.empty()) throw validation_error("no covariate columns in " + path.string());

    std::vector<std::vector<double>> x_rows;
    std::vector<double> z_values, y_values;
    std::size_t row = 1;  // header is row 1
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        std::vector<std::string> cells = split_line(line);
        if (cells.size() != header.size()) {
            throw validation_error("row " + std::to_string(row) + " has " +
                                   std::to_string(cells.size()) + " cells, expected " +
                                   std::to_string(header.size()));
        }
        double z = parse_cell(cells[static_cast<std::size_t>(treatment_idx)], row, treatment_col);
        if (z != 0.0 && z != 1.0) {
            throw validation_error("treatment not binary at row " + std::to_string(row));
        }
        double y = parse_cell(cells[static_cast<std::size_t>(outcome_idx)], row, outcome_col);
        if (!std::isfinite(y)) {
            throw validation_error("non-finite outcome at row " + std::to_string(row) +
                                   ", column " + outcome_col);
        }
        std::vector<double> x_row;
        x_row.reserve(covariate_cols.size());
        for (std::size_t k = 0; k < covariate_cols.size(); ++k) {
            double v = parse_cell(cells[static_cast<std::size_t>(covariate_cols[k])], row,
                                  covariate_names[k]);
            if (!std::isfinite(v)) {
                throw validation_error("non-finite covariate at row " + std::to_string(row) +
                                       ", column " + covariate_names[k]);
            }
            x_row.push_back(v);
        }
        x_rows.push_back(std::move(x_row));
        z_values.push_back(z);
        y_values.push_back(y);
    }
    if (x_rows.empty()) throw validation_error("no data rows in " + path.string());

    const Index n = static_cast<Index>(x_rows.size());
    const Index d = static_cast<Index>(covariate_cols.size());
    Matrixd x(n, d);
    Vectord z(n), y(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < d; ++j) {
            x(i, j) = x_rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        z[i] = z_values[static_cast<std::size_t>(i)];
        y[i] = y_values[static_cast<std::size_t>(i)];
    }
    return Dataset(std::move(x), std::move(z), std::move(y), std::move(covariate_names),
                   treatment_col, outcome_col);
}

void save_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write file: " + path.string());

    std::string buffer;
    for (const auto& name : data.covariate_names()) {
        buffer += name;
        buffer += ',';
    }
    buffer += data.treatment_name();
    buffer += ',';
    buffer += data.outcome_name();
    buffer += '\n';

    for (Index i = 0; i < data.rows(); ++i) {
        for (Index j = 0; j < data.cols(); ++j) {
            format_value(buffer, data.covariates()(i, j));
            buffer += ',';
        }
        format_value(buffer, data.treatment()[i]);
        buffer += ',';
        format_value(buffer, data.outcome()[i]);
        buffer += '\n';
    }
    out << buffer;
    if (!out) throw validation_error("write failed: " + path.string());
}

}  // namespace tcl
