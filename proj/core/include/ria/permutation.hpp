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
#include <initializer_list>
#include <span>
#include <vector>

namespace ria {

/// Bijection on {0, ..., M-1}. Construction validates; the stored map is
/// always a permutation.
class Permutation {
 public:
    Permutation() = default;
    /// Throws ValidationError("not_a_permutation") on repeats or
    /// out-of-range entries.
    explicit Permutation(std::vector<std::size_t> map);
    Permutation(std::initializer_list<std::size_t> map)
        : Permutation(std::vector<std::size_t>(map)) {}

    static Permutation identity(std::size_t size);

    std::size_t size() const noexcept { return map_.size(); }
    std::size_t operator[](std::size_t i) const noexcept { return map_[i]; }
    std::span<const std::size_t> map() const noexcept { return map_; }

    Permutation inverse() const;

    /// Values reordered so that slot i holds values[map[i]].
    std::vector<double> apply(std::span<const double> values) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.map_ <=> b.map_;
    }

 private:
    std::vector<std::size_t> map_;
};

/// n! as an unsigned 64-bit value; throws std::overflow_error past 20!.
std::uint64_t factorial(std::size_t n);

/// The permutation of rank `rank` in lexicographic order (rank 0 = identity).
Permutation nth_permutation(std::size_t size, std::uint64_t rank);

/// Lexicographic rank of a permutation; inverse of nth_permutation.
std::uint64_t permutation_rank(const Permutation& p);

/// Every permutation of {0..size-1} in lexicographic order, flattened row by
/// row into size * size! entries. Intended for the small sizes the oracles
/// handle.
std::vector<std::uint8_t> all_permutations_flat(std::size_t size);

/// Splits [0, total) into `parts` contiguous ranges of near-equal length.
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_range(std::uint64_t total,
                                                                     std::size_t parts);

/// Worker count used by the partitioned oracles when the caller passes 0.
std::size_t default_thread_count();

}  // namespace ria
