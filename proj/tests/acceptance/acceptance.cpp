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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ria/channel.hpp"
#include "ria/index_assignment.hpp"
#include "ria/kernel.hpp"
#include "ria/quantizer.hpp"
#include "ria/rearrange.hpp"
#include "support/oracles.hpp"

namespace {

using namespace ria;
using testing::Rng;

struct Outcome {
    bool pass = true;
    std::string detail;
};

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

std::string fmt(const char* pattern, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, x);
    return buf;
}

Assignment random_assignment(std::size_t m, Rng& rng) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return Assignment{Permutation(perm)};
}

// 1
Outcome rearrangement_certification() {
    Rng rng(1001);
    Outcome o;
    double worst = 0.0;
    std::size_t cases = 0;
    for (std::size_t m = 2; m <= 6; ++m) {
        for (int kernel_trial = 0; kernel_trial < 25; ++kernel_trial) {
            const Kernel k = testing::random_kernel(m, rng);
            for (int pair_trial = 0; pair_trial < 25; ++pair_trial) {
                const ValueVector r(testing::random_values(m, rng));
                const ValueVector s(testing::random_values(m, rng));
                const double oracle = brute_force_max(r, s, k, TiePolicy::first).best_value;
                const double closed =
                    bilinear_sum(optimal_arrangement(r).slots, optimal_arrangement(s).slots, k);
                const double rel = std::abs(oracle - closed) / std::max(std::abs(oracle), 1e-300);
                worst = std::max(worst, rel);
                if (!close_rel(oracle, closed, 1e-12)) o.pass = false;
                ++cases;
            }
        }
    }
    o.detail = std::to_string(cases) + " cases, worst rel " + fmt("%.2e", worst);
    return o;
}

// 2
Outcome swap_monotonicity() {
    Rng rng(1002);
    Outcome o;
    std::size_t cases = 0, swapped = 0;
    double worst = 0.0;
    for (std::size_t m = 2; m <= 8; ++m) {
        const long long span = static_cast<long long>(m) + 1;
        for (int trial = 0; trial < 100; ++trial) {
            const Kernel k = testing::random_kernel(m, rng);
            const auto x = testing::random_values(m, rng);
            const auto y = testing::random_values(m, rng);
            const long long p = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
            const Pairing pairing = rng() % 2 ? Pairing::centered : Pairing::offset;
            const double before = bilinear_sum(x, y, k);
            const auto r = two_point_swap(x, y, p, pairing);
            const double increment = bilinear_sum(r.x, r.y, k) - before;
            if (increment < -1e-12 * std::abs(before)) o.pass = false;
            worst = std::min(worst, increment);
            swapped += r.swapped;
            ++cases;
        }
    }
    o.detail = std::to_string(cases) + " tuples, " + std::to_string(swapped) + " with swaps, min increment " +
               fmt("%.2e", worst);
    return o;
}

// 3
Outcome fixed_point_equivalence() {
    Rng rng(1003);
    Outcome o;
    std::size_t max_sweeps = 0;
    for (std::size_t m = 2; m <= 6; ++m) {
        for (int trial = 0; trial < 50; ++trial) {
            const Kernel k = testing::random_kernel(m, rng);
            const auto x = testing::random_values(m, rng);
            const auto y = testing::random_values(m, rng);
            try {
                const auto r = improve_until_fixed(x, y, k);
                const double target = bilinear_sum(optimal_arrangement(ValueVector(x)).slots,
                                                   optimal_arrangement(ValueVector(y)).slots, k);
                if (!close_rel(bilinear_sum(r.x, r.y, k), target, 1e-12)) o.pass = false;
                max_sweeps = std::max(max_sweeps, r.sweeps);
            } catch (const std::logic_error&) {
                o.pass = false;
            }
        }
    }
    o.detail = "250 starts, max sweeps " + std::to_string(max_sweeps);
    return o;
}

// 4 and 5
Outcome zigzag_optimality(Decoder decoder, std::size_t max_m, std::uint64_t seed) {
    Rng rng(seed);
    Outcome o;
    std::size_t cases = 0, missing = 0;
    double worst = 0.0;
    for (std::size_t m = 2; m <= max_m; ++m) {
        const Assignment zz_canonical = canonicalize(zigzag(m));
        for (double snr : {1.0, std::pow(10.0, 0.5), 10.0, 100.0}) {
            const ChannelModel ch = awgn_transition(m, snr);
            for (int trial = 0; trial < 10; ++trial) {
                const Codebook cb = validate_codebook(testing::random_levels(m, rng));
                const auto best = brute_force_best(cb, ch, decoder);
                const double zz = channel_msd(cb, zigzag(m), ch, decoder).msd;
                worst = std::max(worst, std::abs(zz - best.best_msd) / best.best_msd);
                if (!close_rel(zz, best.best_msd, 1e-10)) o.pass = false;
                const bool member = std::any_of(best.minimizers.begin(), best.minimizers.end(),
                                                 [&](const Assignment& a) { return canonicalize(a) == zz_canonical; });
                if (!member) {
                    o.pass = false;
                    ++missing;
                }
                ++cases;
            }
        }
    }
    o.detail = std::to_string(cases) + " cases, worst rel " + fmt("%.2e", worst) + ", zigzag class missing in " +
               std::to_string(missing);
    return o;
}

// 6
Outcome product_closure() {
    Rng rng(1006);
    Outcome o;
    double worst = 0.0;
    for (std::size_t m = 2; m <= 16; ++m) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto qh = testing::random_half_sequence(m, rng);
            const auto rh = testing::random_half_sequence(m, rng);
            const Kernel product = kernel_product(Kernel::from_half_sequence(m, qh), Kernel::from_half_sequence(m, rh));
            const DenseMatrix q = testing::circulant(m, qh);
            const DenseMatrix r = testing::circulant(m, rh);
            try {
                validate_kernel(product.dense());
            } catch (const std::exception&) {
                o.pass = false;
            }
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    long double dense = 0.0L;
                    for (std::size_t l = 0; l < m; ++l) dense += static_cast<long double>(q(i, l)) * r(l, j);
                    const double diff = std::abs(product.at(i, j) - static_cast<double>(dense));
                    worst = std::max(worst, diff);
                    if (diff > 1e-12) o.pass = false;
                }
            }
        }
    }
    o.detail = "3000 pairs, worst abs " + fmt("%.2e", worst);
    return o;
}

// 7
Outcome transform_invariance() {
    Rng rng(1007);
    Outcome o;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + rng() % 11;
        const Codebook cb = validate_codebook(testing::random_levels(m, rng));
        const ChannelModel ch = awgn_transition(m, db_to_linear(-5.0 + 25.0 * testing::uniform01(rng)));
        const Assignment a = random_assignment(m, rng);
        for (Decoder d : {Decoder::ml, Decoder::mmse}) {
            const double base = channel_msd(cb, a, ch, d).msd;
            for (const Assignment& t : {rotate(a), reflect(a)}) {
                const double moved = channel_msd(cb, t, ch, d).msd;
                worst = std::max(worst, std::abs(moved - base) / base);
                if (!close_rel(moved, base, 1e-12)) o.pass = false;
            }
        }
    }
    std::size_t canonical_mismatch = 0;
    for (std::size_t m = 2; m <= 12; ++m) canonical_mismatch += canonicalize(zigzag(m)) != canonicalize(organ_pipe(m));
    if (canonical_mismatch) o.pass = false;
    o.detail = "100 triples, worst rel " + fmt("%.2e", worst) + ", canonical mismatches " +
               std::to_string(canonical_mismatch);
    return o;
}

// 8
Outcome channel_construction() {
    Outcome o;
    double worst_sum = 0.0;
    for (std::size_t m : {2u, 4u, 8u, 16u}) {
        for (double snr : {0.1, 1.0, 10.0, 100.0}) {
            const ChannelModel ch = awgn_transition(m, snr);
            const DenseMatrix p = ch.transition().dense();
            try {
                validate_kernel(p);
            } catch (const std::exception&) {
                o.pass = false;
            }
            for (std::size_t i = 0; i < m; ++i) {
                long double row = 0, col = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    row += p(i, j);
                    col += p(j, i);
                }
                worst_sum = std::max({worst_sum, std::abs(static_cast<double>(row) - 1.0),
                                      std::abs(static_cast<double>(col) - 1.0)});
            }
        }
    }
    if (worst_sum > 1e-9) o.pass = false;

    const std::uint64_t samples = 10'000'000;
    const auto mc = testing::monte_carlo_row(8, 10.0, samples, 1008);
    const ChannelModel ch = awgn_transition(8, 10.0);
    double worst_z = 0.0;
    for (std::size_t j = 0; j < 8; ++j) {
        const double p = ch.probability(0, j);
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
        const double z = std::abs(mc[j] - p) / se;
        worst_z = std::max(worst_z, z);
        if (z > 4.0) o.pass = false;
    }
    o.detail = "worst |sum - 1| " + fmt("%.2e", worst_sum) + ", Monte Carlo worst " + fmt("%.2f", worst_z) + " SE";
    return o;
}

// 9
Outcome formula_consistency() {
    Rng rng(1009);
    Outcome o;
    double worst_scaled = 0.0, worst_plain = 0.0;
    std::size_t order_violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 2 + rng() % 15;
        const Codebook cb = validate_codebook(testing::random_levels(m, rng));
        const ChannelModel ch = awgn_transition(m, db_to_linear(-5.0 + 25.0 * testing::uniform01(rng)));
        const Assignment a = random_assignment(m, rng);
        try {
            const auto ml = msd_ml(cb, a, ch);
            const auto mmse = msd_mmse(cb, a, ch);
            for (const auto* r : {&ml, &mmse}) {
                const double diff = std::abs(r->msd - r->expanded_msd);
                const double scaled = diff / std::max(r->fixed_term, std::abs(r->msd));
                worst_scaled = std::max(worst_scaled, scaled);
                worst_plain = std::max(worst_plain, diff / r->msd);
                if (scaled > 1e-12) o.pass = false;
            }
            if (mmse.msd > ml.msd) {
                o.pass = false;
                ++order_violations;
            }
        } catch (const std::logic_error&) {
            o.pass = false;
        }
    }
    o.detail = "100 instances, worst rel (fixed-term scale) " + fmt("%.2e", worst_scaled) + ", (msd scale) " +
               fmt("%.2e", worst_plain) + ", mmse > ml in " + std::to_string(order_violations);
    return o;
}

// 10
Outcome cli_integration() {
    Outcome o;
    std::ostringstream vout, verr;
    const int verify_code = ria::cli::run({"verify"}, vout, verr);
    if (verify_code != 0) o.pass = false;

    const std::vector<std::string> sweep{"sweep", "--M", "8", "--snr-db", "0:2:20", "--assignment",
                                         "zigzag,identity,random", "--decoder", "both", "--seed", "7"};
    std::ostringstream a, b, err;
    const int first = ria::cli::run(sweep, a, err);
    const int second = ria::cli::run(sweep, b, err);
    const bool identical = first == 0 && second == 0 && !a.str().empty() && a.str() == b.str();
    if (!identical) o.pass = false;
    o.detail = "verify exit " + std::to_string(verify_code) + ", sweep " +
               (identical ? "byte-identical" : "differs") + " (" + std::to_string(a.str().size()) + " bytes)";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {"optimal arrangement certification (M 2-6, 1e-12)", rearrangement_certification},
        {"two-point swap monotonicity (M 2-8)", swap_monotonicity},
        {"fixed point reaches optimum (M 2-6, 1e-12)", fixed_point_equivalence},
        {"zigzag ML optimality (M 2-8, 1e-10)", [] { return zigzag_optimality(Decoder::ml, 8, 1004); }},
        {"zigzag MMSE optimality (M 2-7, 1e-10)", [] { return zigzag_optimality(Decoder::mmse, 7, 1005); }},
        {"kernel product closure (M 2-16, 1e-12)", product_closure},
        {"rotate/reflect invariance and canonical forms (1e-12)", transform_invariance},
        {"AWGN channel construction and Monte Carlo (4 SE)", channel_construction},
        {"direct vs expanded distortion and mmse <= ml (1e-12)", formula_consistency},
        {"CLI verify and deterministic sweep", cli_integration},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures ? 1 : 0;
}
