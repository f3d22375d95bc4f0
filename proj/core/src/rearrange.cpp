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

#include "ria/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "ria/error.hpp"
#include "ria/numeric.hpp"

namespace ria {

ValueVector::ValueVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("ValueVector: empty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw ValidationError("non_finite", "ValueVector: non-finite entry " + std::to_string(i),
                                  std::pair{i, i});
        if (values_[i] < 0.0)
            throw ValidationError("negative_value",
                                  "ValueVector: negative entry " + std::to_string(i),
                                  std::pair{i, i});
    }
}

std::vector<long long> centrality_order(std::size_t size) {
    std::vector<long long> order;
    order.reserve(size);
    if (size == 0) return order;
    const auto n = (static_cast<long long>(size) - 1) / 2;
    order.push_back(0);
    for (long long k = 1; k <= n; ++k) {
        order.push_back(k);
        order.push_back(-k);
    }
    if (size % 2 == 0) order.push_back(n + 1);
    return order;
}

bool more_central(long long a, long long b) noexcept {
    const long long aa = a < 0 ? -a : a;
    const long long ab = b < 0 ? -b : b;
    if (aa != ab) return aa < ab;
    return a > b;
}

Arrangement optimal_arrangement(const ValueVector& v) {
    const std::size_t m = v.size();
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });

    Arrangement out;
    out.slots.assign(m, 0.0);
    const auto order = centrality_order(m);
    for (std::size_t rank = 0; rank < m; ++rank) {
        out.slots[static_cast<std::size_t>(order[rank] + out.offset())] = v[idx[rank]];
    }
    return out;
}

Permutation to_permutation(const Arrangement& a, const ValueVector& v) {
    if (a.size() != v.size()) {
        throw ValidationError("multiset_mismatch", "to_permutation: arrangement has " +
                                                       std::to_string(a.size()) + " slots, vector has " +
                                                       std::to_string(v.size()));
    }
    const std::size_t m = v.size();
    // Stable sorts by value pair up equal values slot-ascending with
    // source-index-ascending.
    std::vector<std::size_t> src(m), dst(m);
    std::iota(src.begin(), src.end(), std::size_t{0});
    std::iota(dst.begin(), dst.end(), std::size_t{0});
    std::stable_sort(src.begin(), src.end(), [&](std::size_t i, std::size_t j) { return v[i] < v[j]; });
    std::stable_sort(dst.begin(), dst.end(),
                     [&](std::size_t i, std::size_t j) { return a.slots[i] < a.slots[j]; });
    std::vector<std::size_t> map(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (v[src[k]] != a.slots[dst[k]]) {
            throw ValidationError("multiset_mismatch",
                                  "to_permutation: arrangement is not a rearrangement of the vector",
                                  std::pair{dst[k], src[k]});
        }
        map[dst[k]] = src[k];
    }
    return Permutation(std::move(map));
}

double bilinear_sum(std::span<const double> x, std::span<const double> y, const Kernel& k) {
    if (x.size() != k.size() || y.size() != k.size()) {
        throw std::invalid_argument("bilinear_sum: size mismatch (x " + std::to_string(x.size()) +
                                    ", y " + std::to_string(y.size()) + ", kernel " +
                                    std::to_string(k.size()) + ")");
    }
    CompensatedSum acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * y[j] * k.at(i, j);
    }
    return acc.value();
}

bool is_centrally_ordered(std::span<const double> slots) {
    const auto order = centrality_order(slots.size());
    const auto n = (static_cast<long long>(slots.size()) - 1) / 2;
    for (std::size_t r = 1; r < order.size(); ++r) {
        if (slots[static_cast<std::size_t>(order[r - 1] + n)] < slots[static_cast<std::size_t>(order[r] + n)])
            return false;
    }
    return true;
}

namespace {

struct Window {
    long long n;
    long long m;

    long long wrap(long long position) const noexcept {
        long long r = (position + n) % m;
        if (r < 0) r += m;
        return r - n;
    }
    std::size_t slot(long long position) const noexcept { return static_cast<std::size_t>(position + n); }
};

// Unordered pairs (more central, less central) for the reflection fixed by
// (p, pairing).
std::vector<std::pair<std::size_t, std::size_t>> reflection_pairs(std::size_t size, long long p,
                                                                  Pairing pairing) {
    const Window w{(static_cast<long long>(size) - 1) / 2, static_cast<long long>(size)};
    const long long axis = 2 * p + (pairing == Pairing::offset ? 1 : 0);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (long long a = -w.n; a < -w.n + w.m; ++a) {
        const long long b = w.wrap(axis - a);
        if (b <= a) continue;
        if (more_central(a, b))
            pairs.emplace_back(w.slot(a), w.slot(b));
        else
            pairs.emplace_back(w.slot(b), w.slot(a));
    }
    return pairs;
}

bool swap_violations(std::vector<double>& v, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    bool any = false;
    for (const auto& [good, bad] : pairs) {
        if (v[good] < v[bad]) {
            std::swap(v[good], v[bad]);
            any = true;
        }
    }
    return any;
}

}  // namespace

SwapResult two_point_swap(std::span<const double> x, std::span<const double> y, long long p,
                          Pairing pairing) {
    if (x.size() != y.size()) throw std::invalid_argument("two_point_swap: size mismatch");
    SwapResult out{std::vector<double>(x.begin(), x.end()), std::vector<double>(y.begin(), y.end()), false};
    if (x.empty()) return out;
    const auto pairs = reflection_pairs(x.size(), p, pairing);
    const bool sx = swap_violations(out.x, pairs);
    const bool sy = swap_violations(out.y, pairs);
    out.swapped = sx || sy;
    return out;
}

ImproveResult improve_until_fixed(std::span<const double> x, std::span<const double> y,
                                  const Kernel& k) {
    if (x.size() != k.size() || y.size() != k.size())
        throw std::invalid_argument("improve_until_fixed: size mismatch");
    const std::size_t m = k.size();
    const auto n = (static_cast<long long>(m) - 1) / 2;
    const std::size_t cap = m * m * (m / 2 + 1);

    ImproveResult out{std::vector<double>(x.begin(), x.end()), std::vector<double>(y.begin(), y.end()), 0, 0, {}};
    out.trace.push_back(bilinear_sum(out.x, out.y, k));
    while (true) {
        if (out.sweeps == cap) {
            throw std::logic_error("improve_until_fixed: no fixed point after " + std::to_string(cap) +
                                   " sweeps");
        }
        ++out.sweeps;
        bool changed = false;
        for (long long p = -n - 1; p <= n + 1; ++p) {
            for (Pairing pairing : {Pairing::centered, Pairing::offset}) {
                auto step = two_point_swap(out.x, out.y, p, pairing);
                if (!step.swapped) continue;
                out.x = std::move(step.x);
                out.y = std::move(step.y);
                ++out.swaps;
                out.trace.push_back(bilinear_sum(out.x, out.y, k));
                changed = true;
            }
        }
        if (!changed) break;
    }
    return out;
}

namespace {

std::size_t effective_limit(const BruteForceOptions& options) {
    if (options.limit != 0) return options.limit;
    return options.same_permutation ? 8 : 6;
}

void prune(MaxPartial& part, double tol) {
    const double threshold = part.best - tol * std::abs(part.best);
    std::erase_if(part.candidates, [&](const MaxPartial::Candidate& c) { return c.value < threshold; });
}

}  // namespace

MaxPartial brute_force_max_range(const ValueVector& r, const ValueVector& s, const Kernel& k,
                                 std::uint64_t rank_begin, std::uint64_t rank_end,
                                 const BruteForceOptions& options) {
    const std::size_t m = k.size();
    if (r.size() != m || s.size() != m) throw std::invalid_argument("brute_force_max: size mismatch");
    if (m > effective_limit(options)) throw OracleLimitError(m, effective_limit(options));

    const auto perms = all_permutations_flat(m);
    const std::uint64_t count = factorial(m);
    rank_end = std::min(rank_end, count);
    const DenseMatrix kd = k.dense();
    const double tol = options.tie_tolerance;

    MaxPartial part;
    std::vector<double> x(m), z(m);
    for (std::uint64_t ir = rank_begin; ir < rank_end; ++ir) {
        const std::uint8_t* pr = &perms[ir * m];
        for (std::size_t i = 0; i < m; ++i) x[i] = r[pr[i]];
        for (std::size_t j = 0; j < m; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) acc += x[i] * kd(i, j);
            z[j] = acc;
        }
        const std::uint64_t s_begin = options.same_permutation ? ir : 0;
        const std::uint64_t s_end = options.same_permutation ? ir + 1 : count;
        for (std::uint64_t is = s_begin; is < s_end; ++is) {
            const std::uint8_t* ps = &perms[is * m];
            double value = 0.0;
            for (std::size_t j = 0; j < m; ++j) value += s[ps[j]] * z[j];
            if (value > part.best) {
                part.best = value;
                prune(part, tol);
            }
            if (value >= part.best - tol * std::abs(part.best))
                part.candidates.push_back({value, ir, is});
        }
    }
    prune(part, tol);
    return part;
}

MaxPartial merge(MaxPartial a, const MaxPartial& b, double tie_tolerance) {
    a.best = std::max(a.best, b.best);
    a.candidates.insert(a.candidates.end(), b.candidates.begin(), b.candidates.end());
    prune(a, tie_tolerance);
    std::sort(a.candidates.begin(), a.candidates.end(), [](const auto& c1, const auto& c2) {
        return std::pair{c1.r_rank, c1.s_rank} < std::pair{c2.r_rank, c2.s_rank};
    });
    return a;
}

MaxResult finalize(const MaxPartial& partial, std::size_t size, TiePolicy policy,
                   bool same_permutation) {
    MaxResult out;
    out.best_value = partial.best;
    for (const auto& c : partial.candidates) {
        Permutation pr = nth_permutation(size, c.r_rank);
        Permutation ps = same_permutation ? pr : nth_permutation(size, c.s_rank);
        out.maximizers.emplace_back(std::move(pr), std::move(ps));
        if (policy == TiePolicy::first) break;
    }
    return out;
}

MaxResult brute_force_max(const ValueVector& r, const ValueVector& s, const Kernel& k,
                          TiePolicy policy, const BruteForceOptions& options) {
    const std::size_t m = k.size();
    if (r.size() != m || s.size() != m) throw std::invalid_argument("brute_force_max: size mismatch");
    if (m > effective_limit(options)) throw OracleLimitError(m, effective_limit(options));

    const std::uint64_t count = factorial(m);
    const std::size_t threads = options.threads == 0 ? default_thread_count() : options.threads;
    const auto ranges = partition_range(count, std::min<std::uint64_t>(threads, count));

    std::vector<MaxPartial> parts(ranges.size());
    if (ranges.size() == 1) {
        parts[0] = brute_force_max_range(r, s, k, ranges[0].first, ranges[0].second, options);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(ranges.size());
        for (std::size_t t = 0; t < ranges.size(); ++t) {
            workers.emplace_back([&, t] {
                parts[t] = brute_force_max_range(r, s, k, ranges[t].first, ranges[t].second, options);
            });
        }
    }
    MaxPartial total;
    for (const auto& p : parts) total = merge(std::move(total), p, options.tie_tolerance);
    return finalize(total, m, policy, options.same_permutation);
}

}  // namespace ria
