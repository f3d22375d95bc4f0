// Copyright 2026 The ria Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace ria {

/// Strictly increasing, non-negative quantization levels. A codebook with a
/// negative first level is shifted up so that q_0 == 0; the offset is kept in
/// shift_applied(). Both channel distortions are invariant under the shift.
class Codebook {
 public:
    std::size_t size() const noexcept { return levels_.size(); }
    std::span<const double> levels() const noexcept { return levels_; }
    double operator[](std::size_t i) const noexcept { return levels_[i]; }
    double shift_applied() const noexcept { return shift_; }

    friend Codebook validate_codebook(std::vector<double> levels);

 private:
    Codebook(std::vector<double> levels, double shift) : levels_(std::move(levels)), shift_(shift) {}

    std::vector<double> levels_;
    double shift_ = 0.0;
};

/// Throws ValidationError: "empty", "non_finite", "not_increasing".
Codebook validate_codebook(std::vector<double> levels);

struct UniformSource {
    double a = 0.0;
    double b = 1.0;
};

struct GaussianSource {
    double mean = 0.0;
    double stddev = 1.0;
};

/// Quantiles Q(k/K), k = 0..K, of a distribution; linear interpolation
/// between them defines the quantile function (a piecewise-uniform density).
struct QuantileTable {
    std::vector<double> quantiles;
};

using SourceSpec = std::variant<UniformSource, GaussianSource, QuantileTable>;

/// Throws ValidationError("degenerate_source") for zero-width or otherwise
/// invalid parameters and ("table_not_increasing") for bad tables.
void validate_source(const SourceSpec& source);

/// Inverse CDF at u in [0, 1]; may be +-infinity at the ends for unbounded
/// sources.
double source_quantile(const SourceSpec& source, double u);

/// Q(i/M) for i = 0..M: the M equal-probability cell edges.
std::vector<double> cell_boundaries(const SourceSpec& source, std::size_t size);

enum class LevelRule {
    centroid,       ///< conditional mean of the source within the cell
    cell_midpoint,  ///< Q((i + 1/2) / M), the probability midpoint of the cell
};

/// Maximum-entropy (equiprobable-cell) codebook with M levels.
/// Throws ValidationError("degenerate_source"), ("table_too_coarse") when a
/// quantile table has fewer intervals than M, std::invalid_argument for M == 0.
Codebook max_entropy_codebook(const SourceSpec& source, std::size_t size,
                              LevelRule rule = LevelRule::centroid);

}  // namespace ria
