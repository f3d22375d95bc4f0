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

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the code path it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "ria/kernel.hpp"

namespace ria::testing {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

/// Random non-increasing half-sequence; about a third of the draws are
/// rounded to one decimal to exercise ties and zeros.
inline std::vector<double> random_half_sequence(std::size_t size, Rng& rng) {
    std::vector<double> half(size / 2 + 1);
    const bool coarse = uniform01(rng) < 0.3;
    for (double& c : half) {
        c = uniform01(rng);
        if (coarse) c = std::round(c * 10.0) / 10.0;
    }
    std::sort(half.begin(), half.end(), std::greater<>());
    return half;
}

inline Kernel random_kernel(std::size_t size, Rng& rng) {
    return Kernel::from_half_sequence(size, random_half_sequence(size, rng));
}

inline std::vector<double> random_values(std::size_t size, Rng& rng) {
    std::vector<double> v(size);
    for (double& x : v) x = uniform01(rng);
    return v;
}

/// Strictly increasing non-negative levels.
inline std::vector<double> random_levels(std::size_t size, Rng& rng) {
    auto v = random_values(size, rng);
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = std::max(v[i], v[i - 1] + 1e-3);
    return v;
}

/// x^T P y with P given densely.
inline double dense_bilinear(const std::vector<double>& x, const std::vector<double>& y,
                             const DenseMatrix& p) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < p.n; ++i)
        for (std::size_t j = 0; j < p.n; ++j) acc += static_cast<long double>(x[i]) * y[j] * p(i, j);
    return static_cast<double>(acc);
}

/// Circulant matrix p_{i,j} = half[d(i,j)] assembled without the Kernel class.
inline DenseMatrix circulant(std::size_t size, const std::vector<double>& half) {
    DenseMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            const std::size_t diff = i > j ? i - j : j - i;
            m(i, j) = half[std::min(diff, size - diff)];
        }
    }
    return m;
}

/// Composite 10-point Gauss-Legendre rule on `panels` equal sub-intervals.
inline double gauss_legendre(const std::function<double(double)>& f, double a, double b,
                             int panels = 400) {
    static constexpr double x[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                                    0.8650633666889845, 0.9739065285171717};
    static constexpr double w[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                    0.1494513491505806, 0.0666713443086881};
    const double h = (b - a) / panels;
    long double total = 0.0L;
    for (int k = 0; k < panels; ++k) {
        const double mid = a + (k + 0.5) * h;
        const double half = 0.5 * h;
        for (int i = 0; i < 5; ++i) {
            total += w[i] * half * (f(mid - half * x[i]) + f(mid + half * x[i]));
        }
    }
    return static_cast<double>(total);
}

inline double normal_pdf(double x, double mean, double sd) {
    const double z = (x - mean) / sd;
    return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * std::numbers::pi));
}

/// Q-function via erfc.
inline double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

/// Sector-count estimate of P(detect j | sent 0) for M-PSK over AWGN with
/// Es/N0 = snr, from `samples` draws of 2D Gaussian noise.
inline std::vector<double> monte_carlo_row(std::size_t size, double snr, std::uint64_t samples,
                                           std::uint64_t seed) {
    Rng rng(seed);
    std::normal_distribution<double> noise(0.0, std::sqrt(1.0 / (2.0 * snr)));
    std::vector<std::uint64_t> counts(size, 0);
    const double sector = 2.0 * std::numbers::pi / static_cast<double>(size);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const double re = 1.0 + noise(rng);
        const double im = noise(rng);
        double theta = std::atan2(im, re) + 0.5 * sector;
        if (theta < 0.0) theta += 2.0 * std::numbers::pi;
        auto j = static_cast<std::size_t>(theta / sector);
        if (j >= size) j = 0;
        ++counts[j];
    }
    std::vector<double> row(size);
    for (std::size_t j = 0; j < size; ++j) row[j] = static_cast<double>(counts[j]) / static_cast<double>(samples);
    return row;
}

}  // namespace ria::testing
