#pragma once

#include <string>

#include "orthopath/lattice_path.hpp"
#include "orthopath/series.hpp"

namespace orthopath {

// CSV: one knot per row, d comma-separated columns, no header.
LatticePath load_path_csv(const std::string& filename);
void save_path_csv(const LatticePath& path, const std::string& filename);

// JSON: array of arrays. Both loaders validate rectangularity.
LatticePath load_path_json(const std::string& filename);
void save_path_json(const LatticePath& path, const std::string& filename);

// CSV with header "index,re,im".
CoefficientSeq load_coeffs_csv(const std::string& filename);
void save_coeffs_csv(const CoefficientSeq& c, const std::string& filename);

// Shortest round-trip decimal form (std::to_chars); deterministic.
std::string format_double(double v);

}  // namespace orthopath
