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

#include "ria/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "ria/error.hpp"

namespace ria {

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (std::size_t i = 0; i < map_.size(); ++i) {
        const std::size_t v = map_[i];
        if (v >= map_.size() || seen[v]) {
            throw ValidationError("not_a_permutation",
                                  "Permutation: entry " + std::to_string(v) + " at slot " +
                                      std::to_string(i) + " is out of range or repeated",
                                  std::pair{i, v});
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t size) {
    std::vector<std::size_t> map(size);
    std::iota(map.begin(), map.end(), std::size_t{0});
    return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return Permutation(std::move(inv));
}

std::vector<double> Permutation::apply(std::span<const double> values) const {
    if (values.size() != map_.size())
        throw std::invalid_argument("Permutation::apply: size mismatch");
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < map_.size(); ++i) out[i] = values[map_[i]];
    return out;
}

std::uint64_t factorial(std::size_t n) {
    if (n > 20) throw std::overflow_error("factorial: " + std::to_string(n) + "! overflows 64 bits");
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

Permutation nth_permutation(std::size_t size, std::uint64_t rank) {
    if (rank >= factorial(size)) throw std::out_of_range("nth_permutation: rank out of range");
    std::vector<std::size_t> pool(size);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::vector<std::size_t> out;
    out.reserve(size);
    for (std::size_t k = size; k > 0; --k) {
        const std::uint64_t block = factorial(k - 1);
        const auto idx = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(out));
}

std::uint64_t permutation_rank(const Permutation& p) {
    const std::size_t n = p.size();
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return rank;
}

std::vector<std::uint8_t> all_permutations_flat(std::size_t size) {
    if (size > 12) throw std::length_error("all_permutations_flat: size too large");
    std::vector<std::uint8_t> current(size);
    std::iota(current.begin(), current.end(), std::uint8_t{0});
    std::vector<std::uint8_t> out;
    out.reserve(size * factorial(size));
    do {
        out.insert(out.end(), current.begin(), current.end());
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_range(std::uint64_t total,
                                                                     std::size_t parts) {
    parts = std::max<std::size_t>(1, parts);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    const std::uint64_t base = total / parts;
    const std::uint64_t extra = total % parts;
    std::uint64_t begin = 0;
    for (std::size_t k = 0; k < parts; ++k) {
        const std::uint64_t len = base + (k < extra ? 1 : 0);
        if (len == 0) continue;
        ranges.emplace_back(begin, begin + len);
        begin += len;
    }
    return ranges;
}

std::size_t default_thread_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min<std::size_t>(hw, 16);
}

}  // namespace ria
