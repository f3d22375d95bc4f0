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
#include <span>
#include <utility>
#include <vector>

#include "ria/kernel.hpp"
#include "ria/permutation.hpp"

namespace ria {

/// Non-empty sequence of finite, non-negative reals.
class ValueVector {
 public:
    /// Throws std::invalid_argument when empty, ValidationError when an entry
    /// is negative or non-finite.
    explicit ValueVector(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const ValueVector&, const ValueVector&) = default;

 private:
    std::vector<double> values_;
};

/// Values laid out on the shifted window -n..n (odd M) or -n..n+1 (even M),
/// n = floor((M-1)/2). Slot i of `slots` is shifted position i - n.
struct Arrangement {
    std::vector<double> slots;

    std::size_t size() const noexcept { return slots.size(); }
    bool odd() const noexcept { return slots.size() % 2 == 1; }
    long long offset() const noexcept { return (static_cast<long long>(slots.size()) - 1) / 2; }
    long long low() const noexcept { return -offset(); }
    long long high() const noexcept { return static_cast<long long>(slots.size()) - 1 - offset(); }
    double at(long long position) const { return slots.at(static_cast<std::size_t>(position + offset())); }
};

/// Shifted positions ordered from most to least central:
/// 0, 1, -1, 2, -2, ..., n, -n (and n+1 last for even M).
std::vector<long long> centrality_order(std::size_t size);

/// True when position a must hold a value at least as large as position b:
/// |a| < |b|, or |a| == |b| and a > 0.
bool more_central(long long a, long long b) noexcept;

/// Descending values placed along centrality_order; ties keep ascending
/// source index.
Arrangement optimal_arrangement(const ValueVector& v);

/// Permutation pi with v[pi[i]] == a.slots[i]. Equal values are matched
/// slot-ascending to source-index-ascending. Throws ValidationError
/// ("multiset_mismatch") when a is not a rearrangement of v.
Permutation to_permutation(const Arrangement& a, const ValueVector& v);

/// sum_{i,j} x_i y_j k(i - j), compensated. Throws std::invalid_argument on
/// size mismatch.
double bilinear_sum(std::span<const double> x, std::span<const double> y, const Kernel& k);

/// True when the slot-ordered values satisfy the centrality condition:
/// every more-central position holds a value >= every less-central one.
bool is_centrally_ordered(std::span<const double> slots);

enum class Pairing {
    centered,  ///< reflection through position p: (p - i, p + i)
    offset,    ///< reflection through p + 1/2: (p - i, p + i + 1)
};

struct SwapResult {
    std::vector<double> x;
    std::vector<double> y;
    bool swapped = false;
};

/// Two-point rearrangement of x and y about the reflection axis selected by
/// (p, pairing). Positions are taken modulo M on the ring, so every slot not
/// on the axis has exactly one partner. Every pair whose more-central member
/// holds the strictly smaller value is swapped, all at once, independently in
/// x and y. The bilinear sum never decreases under this operation.
SwapResult two_point_swap(std::span<const double> x, std::span<const double> y, long long p,
                          Pairing pairing);

struct ImproveResult {
    std::vector<double> x;
    std::vector<double> y;
    std::size_t sweeps = 0;
    std::size_t swaps = 0;
    /// Objective after each swap that changed something, preceded by the
    /// starting value.
    std::vector<double> trace;
};

/// Applies two_point_swap for p in [-n-1, n+1] and both pairings until a full
/// sweep changes nothing. The result is centrally ordered. Throws
/// std::logic_error if M^2 (floor(M/2)+1) sweeps pass without convergence.
ImproveResult improve_until_fixed(std::span<const double> x, std::span<const double> y,
                                  const Kernel& k);

enum class TiePolicy { all, first };

struct BruteForceOptions {
    /// Constrain pi_r == pi_s (the index-assignment case).
    bool same_permutation = false;
    /// 0 selects default_thread_count().
    std::size_t threads = 0;
    /// 0 selects 6 (two free permutations) or 8 (same_permutation).
    std::size_t limit = 0;
    /// Values within this relative distance of the maximum count as ties.
    double tie_tolerance = 1e-12;
};

/// Partial result over a contiguous range of outer permutation ranks.
/// Candidates are kept sorted by (r_rank, s_rank).
struct MaxPartial {
    struct Candidate {
        double value;
        std::uint64_t r_rank;
        std::uint64_t s_rank;
    };
    double best = -1.0;
    std::vector<Candidate> candidates;
};

struct MaxResult {
    double best_value = 0.0;
    /// (pi_r, pi_s) pairs in lexicographic order.
    std::vector<std::pair<Permutation, Permutation>> maximizers;
};

/// Exhaustive search for max_{pi_r, pi_s} sum_{i,j} r[pi_r(i)] s[pi_s(j)] k(i-j).
/// Throws OracleLimitError when M exceeds the configured limit.
MaxResult brute_force_max(const ValueVector& r, const ValueVector& s, const Kernel& k,
                          TiePolicy policy = TiePolicy::all, const BruteForceOptions& options = {});

/// Evaluates outer ranks [rank_begin, rank_end) only.
MaxPartial brute_force_max_range(const ValueVector& r, const ValueVector& s, const Kernel& k,
                                 std::uint64_t rank_begin, std::uint64_t rank_end,
                                 const BruteForceOptions& options = {});

/// Associative, order-independent reduction of partial results.
MaxPartial merge(MaxPartial a, const MaxPartial& b, double tie_tolerance = 1e-12);

MaxResult finalize(const MaxPartial& partial, std::size_t size, TiePolicy policy,
                   bool same_permutation);

}  // namespace ria
