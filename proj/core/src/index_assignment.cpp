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

#include "ria/index_assignment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "ria/error.hpp"
#include "ria/numeric.hpp"

namespace ria {

std::string_view to_string(Decoder d) noexcept { return d == Decoder::ml ? "ml" : "mmse"; }

Assignment zigzag(std::size_t size) {
    std::vector<std::size_t> map;
    map.reserve(size);
    if (size == 0) return {Permutation{}};
    map.push_back(0);
    for (std::size_t k = 1; k < size; k += 2) map.push_back(k);
    const std::size_t top_even = (size - 1) % 2 == 0 ? size - 1 : size - 2;
    for (std::size_t k = top_even; k >= 2 && k < size; k -= 2) map.push_back(k);
    return {Permutation(std::move(map))};
}

Assignment organ_pipe(std::size_t size) {
    std::vector<std::size_t> map;
    map.reserve(size);
    if (size == 0) return {Permutation{}};
    // Levels with the parity of M-1 climb to the top, the rest come back down.
    const std::size_t first = (size - 1) % 2;
    for (std::size_t k = first; k < size; k += 2) map.push_back(k);
    for (std::size_t k = size - 1; k-- > 0;) {
        if (k % 2 != first) map.push_back(k);
    }
    return {Permutation(std::move(map))};
}

Assignment rotate(const Assignment& a) {
    const std::size_t m = a.size();
    if (m <= 1) return a;
    std::vector<std::size_t> map(m);
    map[0] = a[m - 1];
    for (std::size_t k = 1; k < m; ++k) map[k] = a[k - 1];
    return {Permutation(std::move(map))};
}

Assignment reflect(const Assignment& a) {
    const std::size_t m = a.size();
    if (m <= 1) return a;
    std::vector<std::size_t> map(m);
    map[0] = a[0];
    for (std::size_t k = 1; k < m; ++k) map[k] = a[m - k];
    return {Permutation(std::move(map))};
}

Assignment canonicalize(const Assignment& a) {
    Assignment best = a;
    Assignment r = a;
    Assignment f = reflect(a);
    for (std::size_t k = 0; k < std::max<std::size_t>(a.size(), 1); ++k) {
        best = std::min({best, r, f});
        r = rotate(r);
        f = rotate(f);
    }
    return best;
}

namespace {

void check_sizes(const Codebook& cb, const Assignment& a, const ChannelModel& ch, const char* who) {
    if (cb.size() != a.size() || cb.size() != ch.size()) {
        throw std::invalid_argument(std::string(who) + ": size mismatch (codebook " +
                                    std::to_string(cb.size()) + ", assignment " +
                                    std::to_string(a.size()) + ", channel " + std::to_string(ch.size()) +
                                    ")");
    }
}

double sum_of_squares(const Codebook& cb) {
    CompensatedSum acc;
    for (double q : cb.levels()) acc += q * q;
    return acc.value();
}

std::vector<double> column_mass(const ChannelModel& ch) {
    const std::size_t m = ch.size();
    std::vector<double> w(m);
    for (std::size_t j = 0; j < m; ++j) {
        CompensatedSum acc;
        for (std::size_t k = 0; k < m; ++k) acc += ch.probability(k, j);
        w[j] = acc.value();
        if (!(w[j] > 0.0)) {
            throw ValidationError("zero_denominator",
                                  "mmse: no probability mass reaches symbol " + std::to_string(j),
                                  std::pair{j, j});
        }
    }
    return w;
}

// q_{pi_j} - y_j, evaluated without forming y_j to avoid cancellation.
std::vector<double> reconstruction_offsets(std::span<const double> qa, const ChannelModel& ch,
                                           std::span<const double> mass) {
    const std::size_t m = qa.size();
    std::vector<double> e(m);
    for (std::size_t j = 0; j < m; ++j) {
        CompensatedSum acc;
        for (std::size_t k = 0; k < m; ++k) acc += ch.probability(k, j) * (qa[j] - qa[k]);
        e[j] = acc.value() / mass[j];
    }
    return e;
}

void check_agreement(double direct, double expanded, double scale, const char* who) {
    if (std::abs(direct - expanded) > kFormulaAgreementTolerance * std::max(scale, std::abs(direct))) {
        throw std::logic_error(std::string(who) + ": direct and expanded distortion disagree (" +
                               std::to_string(direct) + " vs " + std::to_string(expanded) + ")");
    }
}

}  // namespace

DistortionReport msd_ml(const Codebook& cb, const Assignment& a, const ChannelModel& ch) {
    check_sizes(cb, a, ch, "msd_ml");
    const std::size_t m = cb.size();
    const double inv_m = 1.0 / static_cast<double>(m);
    const auto qa = a.perm.apply(cb.levels());

    CompensatedSum direct, correlation;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double p = ch.probability(i, j);
            const double d = qa[i] - qa[j];
            direct += p * d * d;
            correlation += qa[i] * qa[j] * p;
        }
    }
    DistortionReport report;
    report.assignment = a;
    report.decoder = Decoder::ml;
    report.msd = inv_m * direct.value();
    report.fixed_term = 2.0 * inv_m * sum_of_squares(cb);
    report.expanded_msd = report.fixed_term - 2.0 * inv_m * correlation.value();
    check_agreement(report.msd, report.expanded_msd, report.fixed_term, "msd_ml");
    return report;
}

std::vector<double> mmse_reconstruction(const Codebook& cb, const Assignment& a,
                                        const ChannelModel& ch) {
    check_sizes(cb, a, ch, "mmse_reconstruction");
    const std::size_t m = cb.size();
    const auto qa = a.perm.apply(cb.levels());
    const auto mass = column_mass(ch);
    std::vector<double> y(m);
    for (std::size_t j = 0; j < m; ++j) {
        CompensatedSum acc;
        for (std::size_t k = 0; k < m; ++k) acc += qa[k] * ch.probability(k, j);
        y[j] = acc.value() / mass[j];
    }
    return y;
}

DistortionReport msd_mmse(const Codebook& cb, const Assignment& a, const ChannelModel& ch) {
    check_sizes(cb, a, ch, "msd_mmse");
    const std::size_t m = cb.size();
    const double inv_m = 1.0 / static_cast<double>(m);
    const auto qa = a.perm.apply(cb.levels());
    const auto mass = column_mass(ch);
    const auto offsets = reconstruction_offsets(qa, ch, mass);

    DistortionReport report;
    report.assignment = a;
    report.decoder = Decoder::mmse;
    report.reconstructions = mmse_reconstruction(cb, a, ch);

    CompensatedSum direct;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double d = (qa[i] - qa[j]) + offsets[j];
            direct += ch.probability(i, j) * d * d;
        }
    }
    report.msd = inv_m * direct.value();

    CompensatedSum energy;
    for (std::size_t j = 0; j < m; ++j) {
        CompensatedSum num;
        for (std::size_t k = 0; k < m; ++k) num += qa[k] * ch.probability(k, j);
        energy += num.value() * num.value() / mass[j];
    }
    report.fixed_term = inv_m * sum_of_squares(cb);
    report.expanded_msd = report.fixed_term - inv_m * energy.value();
    check_agreement(report.msd, report.expanded_msd, report.fixed_term, "msd_mmse");
    return report;
}

DistortionReport channel_msd(const Codebook& cb, const Assignment& a, const ChannelModel& ch,
                             Decoder decoder) {
    return decoder == Decoder::ml ? msd_ml(cb, a, ch) : msd_mmse(cb, a, ch);
}

namespace {

void prune(MinPartial& part, double tol) {
    const double threshold = part.best + tol * std::abs(part.best);
    std::erase_if(part.candidates, [&](const MinPartial::Candidate& c) { return c.value > threshold; });
}

}  // namespace

MinPartial brute_force_best_range(const Codebook& cb, const ChannelModel& ch, Decoder decoder,
                                  std::uint64_t rank_begin, std::uint64_t rank_end,
                                  const SearchOptions& options) {
    const std::size_t m = cb.size();
    if (ch.size() != m) throw std::invalid_argument("brute_force_best: size mismatch");
    if (m > options.limit) throw OracleLimitError(m, options.limit);

    const auto perms = all_permutations_flat(m);
    rank_end = std::min<std::uint64_t>(rank_end, factorial(m));
    const DenseMatrix p = ch.transition().dense();
    const auto mass = decoder == Decoder::mmse ? column_mass(ch) : std::vector<double>{};
    const double inv_m = 1.0 / static_cast<double>(m);
    const double tol = options.tie_tolerance;

    MinPartial part;
    std::vector<double> qa(m), offset(m, 0.0);
    for (std::uint64_t rank = rank_begin; rank < rank_end; ++rank) {
        const std::uint8_t* perm = &perms[rank * m];
        for (std::size_t i = 0; i < m; ++i) qa[i] = cb[perm[i]];
        if (decoder == Decoder::mmse) {
            for (std::size_t j = 0; j < m; ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < m; ++k) acc += p(k, j) * (qa[j] - qa[k]);
                offset[j] = acc / mass[j];
            }
        }
        double total = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const double d = (qa[i] - qa[j]) + offset[j];
                total += p(i, j) * d * d;
            }
        }
        const double value = inv_m * total;
        if (value < part.best) {
            part.best = value;
            prune(part, tol);
        }
        if (value <= part.best + tol * std::abs(part.best)) part.candidates.push_back({value, rank});
    }
    prune(part, tol);
    return part;
}

MinPartial merge(MinPartial a, const MinPartial& b, double tie_tolerance) {
    a.best = std::min(a.best, b.best);
    a.candidates.insert(a.candidates.end(), b.candidates.begin(), b.candidates.end());
    prune(a, tie_tolerance);
    std::sort(a.candidates.begin(), a.candidates.end(),
              [](const auto& c1, const auto& c2) { return c1.rank < c2.rank; });
    return a;
}

BestAssignments brute_force_best(const Codebook& cb, const ChannelModel& ch, Decoder decoder,
                                 const SearchOptions& options) {
    const std::size_t m = cb.size();
    if (ch.size() != m) throw std::invalid_argument("brute_force_best: size mismatch");
    if (m > options.limit) throw OracleLimitError(m, options.limit);

    const std::uint64_t count = factorial(m);
    const std::size_t threads = options.threads == 0 ? default_thread_count() : options.threads;
    const auto ranges = partition_range(count, std::min<std::uint64_t>(threads, count));

    std::vector<MinPartial> parts(ranges.size());
    if (ranges.size() == 1) {
        parts[0] = brute_force_best_range(cb, ch, decoder, ranges[0].first, ranges[0].second, options);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(ranges.size());
        for (std::size_t t = 0; t < ranges.size(); ++t) {
            workers.emplace_back([&, t] {
                parts[t] = brute_force_best_range(cb, ch, decoder, ranges[t].first, ranges[t].second, options);
            });
        }
    }
    MinPartial total;
    for (const auto& part : parts) total = merge(std::move(total), part, options.tie_tolerance);

    BestAssignments out;
    out.best_msd = total.best;
    out.minimizers.reserve(total.candidates.size());
    for (const auto& c : total.candidates) out.minimizers.push_back({nth_permutation(m, c.rank)});
    return out;
}

}  // namespace ria
