#ifndef ROTKIT_IO_HPP
#define ROTKIT_IO_HPP

#include <filesystem>
#include <string>

#include "rotkit/measures.hpp"

namespace rotkit {

/**
 * @file io.hpp
 * @brief CSV ingestion and serialization.
 *
 * Measure files carry a header row with coordinate columns `x0..x{d-1}` and
 * the optional columns `weight`, `label`, `pair_id` (any order). Transform
 * and coupling files are headerless numeric grids. All floating-point output
 * uses 17 significant digits so that save -> load round-trips are bit exact.
 */

struct LoadReport {
    bool weights_renormalized = false; ///< true when the raw sum differed from 1 beyond 1e-12
    double raw_weight_sum = 1.0;
    bool had_weight_column = false;
};

DiscreteMeasure load_measure(const std::filesystem::path& path, LoadReport* report = nullptr);
void save_measure(const std::filesystem::path& path, const DiscreteMeasure& measure);

Matrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const Matrix& m);

/// Shortest exact decimal form, 17 significant digits.
std::string format_double(double value);

/// Strict full-token double parse; throws ParseError otherwise.
double parse_double(const std::string& token, Index line_number);

} // namespace rotkit

#endif
