#pragma once

#include <span>
#include <string>
#include <vector>

#include "tcl/common.hpp"

namespace tcl {

// One domain's observations: an n-by-d covariate matrix, a binary treatment
// indicator, and a real outcome per row. Validated on construction and
// immutable afterwards, so instances can be shared freely across threads.
class Dataset {
public:
    Dataset(Matrixd covariates, Vectord treatment, Vectord outcome,
            std::vector<std::string> covariate_names = {},
            std::string treatment_name = "z", std::string outcome_name = "y");

    Index rows() const { return covariates_.rows(); }
    Index cols() const { return covariates_.cols(); }

    const Matrixd& covariates() const { return covariates_; }
    const Vectord& treatment() const { return treatment_; }
    const Vectord& outcome() const { return outcome_; }

    const std::vector<std::string>& covariate_names() const { return covariate_names_; }
    const std::string& treatment_name() const { return treatment_name_; }
    const std::string& outcome_name() const { return outcome_name_; }

    // New Dataset holding the given rows, in the given order. Indices may
    // repeat (resampling) but must be in range.
    Dataset select_rows(std::span<const Index> indices) const;

private:
    Matrixd covariates_;
    Vectord treatment_;
    Vectord outcome_;
    std::vector<std::string> covariate_names_;
    std::string treatment_name_;
    std::string outcome_name_;
};

struct GroupCounts {
    Index treated = 0;
    Index control = 0;
};

GroupCounts group_counts(const Dataset& data);

// Row indices of one treatment arm, in row order.
std::vector<Index> arm_indices(const Dataset& data, double arm);

// Target and source observations over the same covariate space.
struct DomainPair {
    Dataset target;
    Dataset source;

    DomainPair(Dataset target_in, Dataset source_in);
};

// Row-concatenation of two datasets with matching covariate dimension;
// `first` rows come before `second` rows.
Dataset concat_rows(const Dataset& first, const Dataset& second);

// Partitions `data` on a binary column: rows whose column `col_index` equals
// `target_label` become the target domain, the rest the source domain. Row
// order is preserved within each side. The partitioning column is kept (it is
// constant per domain) unless `keep_column` is false.
DomainPair split_by_covariate(const Dataset& data, Index col_index, double target_label,
                              bool keep_column = true);

}  // namespace tcl
