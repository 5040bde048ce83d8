#include "tcl/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace tcl {

namespace {

std::vector<std::string> default_names(Index d) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(d));
    for (Index j = 0; j < d; ++j) names.push_back("x" + std::to_string(j + 1));
    return names;
}

}  // namespace

Dataset::Dataset(Matrixd covariates, Vectord treatment, Vectord outcome,
                 std::vector<std::string> covariate_names,
                 std::string treatment_name, std::string outcome_name)
    : covariates_(std::move(covariates)),
      treatment_(std::move(treatment)),
      outcome_(std::move(outcome)),
      covariate_names_(std::move(covariate_names)),
      treatment_name_(std::move(treatment_name)),
      outcome_name_(std::move(outcome_name)) {
    const Index n = covariates_.rows();
    const Index d = covariates_.cols();
    if (n < 1 || d < 1) {
        throw validation_error("dataset requires at least one row and one covariate column");
    }
    if (treatment_.size() != n || outcome_.size() != n) {
        std::ostringstream msg;
        msg << "row count mismatch: covariates " << n << ", treatment " << treatment_.size()
            << ", outcome " << outcome_.size();
        throw validation_error(msg.str());
    }
    if (covariate_names_.empty()) {
        covariate_names_ = default_names(d);
    } else if (static_cast<Index>(covariate_names_.size()) != d) {
        throw validation_error("covariate name count does not match column count");
    }
    for (Index i = 0; i < n; ++i) {
        if (treatment_[i] != 0.0 && treatment_[i] != 1.0) {
            throw validation_error("treatment not binary at row " + std::to_string(i + 1));
        }
        if (!std::isfinite(outcome_[i])) {
            throw validation_error("non-finite outcome at row " + std::to_string(i + 1));
        }
        for (Index j = 0; j < d; ++j) {
            if (!std::isfinite(covariates_(i, j))) {
                throw validation_error("non-finite covariate at row " + std::to_string(i + 1) +
                                       ", column " + covariate_names_[static_cast<std::size_t>(j)]);
            }
        }
    }
}

Dataset Dataset::select_rows(std::span<const Index> indices) const {
    const Index m = static_cast<Index>(indices.size());
    if (m == 0) throw validation_error("row selection is empty");
    Matrixd x(m, cols());
    Vectord z(m), y(m);
    for (Index i = 0; i < m; ++i) {
        const Index r = indices[static_cast<std::size_t>(i)];
        if (r < 0 || r >= rows()) throw validation_error("row index out of range");
        x.row(i) = covariates_.row(r);
        z[i] = treatment_[r];
        y[i] = outcome_[r];
    }
    return Dataset(std::move(x), std::move(z), std::move(y), covariate_names_, treatment_name_,
                   outcome_name_);
}

GroupCounts group_counts(const Dataset& data) {
    GroupCounts counts;
    for (Index i = 0; i < data.rows(); ++i) {
        if (data.treatment()[i] == 1.0) {
            ++counts.treated;
        } else {
            ++counts.control;
        }
    }
    return counts;
}

std::vector<Index> arm_indices(const Dataset& data, double arm) {
    std::vector<Index> indices;
    for (Index i = 0; i < data.rows(); ++i) {
        if (data.treatment()[i] == arm) indices.push_back(i);
    }
    return indices;
}

DomainPair::DomainPair(Dataset target_in, Dataset source_in)
    : target(std::move(target_in)), source(std::move(source_in)) {
    if (target.cols() != source.cols()) {
        std::ostringstream msg;
        msg << "covariate dimension mismatch between domains: target " << target.cols()
            << ", source " << source.cols();
        throw validation_error(msg.str());
    }
}

Dataset concat_rows(const Dataset& first, const Dataset& second) {
    if (first.cols() != second.cols()) {
        throw validation_error("cannot concatenate datasets with different covariate dimensions");
    }
    const Index n = first.rows() + second.rows();
    Matrixd x(n, first.cols());
    Vectord z(n), y(n);
    x.topRows(first.rows()) = first.covariates();
    x.bottomRows(second.rows()) = second.covariates();
    z.head(first.rows()) = first.treatment();
    z.tail(second.rows()) = second.treatment();
    y.head(first.rows()) = first.outcome();
    y.tail(second.rows()) = second.outcome();
    return Dataset(std::move(x), std::move(z), std::move(y), first.covariate_names(),
                   first.treatment_name(), first.outcome_name());
}

DomainPair split_by_covariate(const Dataset& data, Index col_index, double target_label,
                              bool keep_column) {
    if (col_index < 0 || col_index >= data.cols()) {
        throw validation_error("partition column index out of range");
    }
    std::set<double> labels;
    for (Index i = 0; i < data.rows(); ++i) labels.insert(data.covariates()(i, col_index));
    if (labels.size() != 2) {
        throw validation_error("degenerate partition: column takes " +
                               std::to_string(labels.size()) + " distinct values, expected 2");
    }
    if (labels.count(target_label) == 0) {
        throw validation_error("target label not present in partition column");
    }

    std::vector<Index> target_rows, source_rows;
    for (Index i = 0; i < data.rows(); ++i) {
        if (data.covariates()(i, col_index) == target_label) {
            target_rows.push_back(i);
        } else {
            source_rows.push_back(i);
        }
    }
    if (target_rows.empty() || source_rows.empty()) {
        throw validation_error("degenerate partition: one side is empty");
    }

    Dataset target = data.select_rows(target_rows);
    Dataset source = data.select_rows(source_rows);
    if (!keep_column) {
        auto drop = [col_index](const Dataset& side) {
            const Index d = side.cols();
            if (d < 2) throw validation_error("cannot drop the only covariate column");
            Matrixd x(side.rows(), d - 1);
            std::vector<std::string> names;
            Index out = 0;
            for (Index j = 0; j < d; ++j) {
                if (j == col_index) continue;
                x.col(out++) = side.covariates().col(j);
                names.push_back(side.covariate_names()[static_cast<std::size_t>(j)]);
            }
            return Dataset(std::move(x), side.treatment(), side.outcome(), std::move(names),
                           side.treatment_name(), side.outcome_name());
        };
        return DomainPair(drop(target), drop(source));
    }
    return DomainPair(std::move(target), std::move(source));
}

}  // namespace tcl
