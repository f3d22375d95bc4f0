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
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "ria/channel.hpp"
#include "ria/permutation.hpp"
#include "ria/quantizer.hpp"

namespace ria {

/// Index assignment: constellation symbol s_k carries level q_{perm[k]}.
struct Assignment {
    Permutation perm;

    std::size_t size() const noexcept { return perm.size(); }
    std::size_t operator[](std::size_t k) const noexcept { return perm[k]; }

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.perm <=> b.perm; }
};

enum class Decoder { ml, mmse };

std::string_view to_string(Decoder d) noexcept;

struct DistortionReport {
    Assignment assignment;
    Decoder decoder = Decoder::ml;
    /// Channel mean-squared distortion from the direct double sum.
    double msd = 0.0;
    /// The same quantity from the fixed-term-minus-correlation expansion.
    double expanded_msd = 0.0;
    /// Permutation-independent part of the expansion: (2/M) sum q^2 for ML,
    /// (1/M) sum q^2 for MMSE.
    double fixed_term = 0.0;
    /// MMSE reconstruction levels y_j; empty for ML.
    std::vector<double> reconstructions;
};

/// [0, 1, 3, 5, ..., 6, 4, 2]: odd levels ascending after q_0, then even
/// levels descending.
Assignment zigzag(std::size_t size);

/// Organ-pipe assignment, the optimum read directly off the centrality order:
/// odd M: [0, 2, ..., M-1, M-2, ..., 1]; even M: [1, 3, ..., M-1, M-2, ..., 0].
Assignment organ_pipe(std::size_t size);

/// [pi_{M-1}, pi_0, ..., pi_{M-2}].
Assignment rotate(const Assignment& a);

/// [pi_0, pi_{M-1}, ..., pi_1].
Assignment reflect(const Assignment& a);

/// Lexicographically smallest member of the orbit of `a` under rotate and
/// reflect (2M elements).
Assignment canonicalize(const Assignment& a);

/// Relative tolerance, scaled by the fixed term, for agreement between the
/// direct and expanded distortion formulas.
inline constexpr double kFormulaAgreementTolerance = 1e-12;

/// ML-decoding distortion (1/M) sum_{i,j} P(s_j|s_i) (q_{pi_i} - q_{pi_j})^2.
/// Throws std::invalid_argument on size mismatch and std::logic_error if the
/// direct and expanded evaluations disagree.
DistortionReport msd_ml(const Codebook& cb, const Assignment& a, const ChannelModel& ch);

/// y_j = E(q | s_j detected). Throws ValidationError("zero_denominator") when
/// a column of the channel has zero mass.
std::vector<double> mmse_reconstruction(const Codebook& cb, const Assignment& a,
                                        const ChannelModel& ch);

/// MMSE-decoding distortion (1/M) sum_{i,j} P(s_j|s_i) (q_{pi_i} - y_j)^2,
/// cross-checked against its closed form.
DistortionReport msd_mmse(const Codebook& cb, const Assignment& a, const ChannelModel& ch);

DistortionReport channel_msd(const Codebook& cb, const Assignment& a, const ChannelModel& ch,
                             Decoder decoder);

struct SearchOptions {
    std::size_t threads = 0;
    std::size_t limit = 8;
    /// Distortions within this relative distance of the minimum count as ties.
    double tie_tolerance = 1e-12;
};

struct MinPartial {
    struct Candidate {
        double value;
        std::uint64_t rank;
    };
    double best = std::numeric_limits<double>::infinity();
    std::vector<Candidate> candidates;
};

struct BestAssignments {
    double best_msd = 0.0;
    /// All minimizers in lexicographic order.
    std::vector<Assignment> minimizers;
};

/// Exhaustive minimum of the channel distortion over all M! assignments.
/// Throws OracleLimitError for M above options.limit.
BestAssignments brute_force_best(const Codebook& cb, const ChannelModel& ch, Decoder decoder,
                                 const SearchOptions& options = {});

/// Ranks [rank_begin, rank_end) only.
MinPartial brute_force_best_range(const Codebook& cb, const ChannelModel& ch, Decoder decoder,
                                  std::uint64_t rank_begin, std::uint64_t rank_end,
                                  const SearchOptions& options = {});

MinPartial merge(MinPartial a, const MinPartial& b, double tie_tolerance = 1e-12);

}  // namespace ria
