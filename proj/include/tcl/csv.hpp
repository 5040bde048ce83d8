#pragma once

#include <filesystem>
#include <string>

#include "tcl/dataset.hpp"

namespace tcl {

// Reads a UTF-8 comma-separated file with a header row. The named treatment
// and outcome columns are extracted; every other column becomes a covariate,
// in file order. Parsing is locale-independent.
Dataset load_csv(const std::filesystem::path& path, const std::string& treatment_col,
                 const std::string& outcome_col);

// Writes covariates (in recorded order), then treatment, then outcome.
// Values use the shortest representation that round-trips exactly, so
// save/load reproduces a Dataset bit-for-bit.
void save_csv(const Dataset& data, const std::filesystem::path& path);

}  // namespace tcl
