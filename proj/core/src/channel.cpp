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

#include "ria/channel.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ria/error.hpp"
#include "ria/numeric.hpp"

namespace ria {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
constexpr double kQuadratureRelTol = 1e-13;

// 1 - sqrt(pi) u erfcx(u) for u >= 0. For large u the direct form cancels, so
// use the Laplace continued fraction erfcx(u) = (1/sqrt(pi)) / (u + R),
// R = (1/2)/(u + 1/(u + (3/2)/(u + ...))), which gives R / (u + R).
double tail_factor(double u) {
    if (u < 3.0) return 1.0 - std::sqrt(kPi) * u * std::exp(u * u) * std::erfc(u);
    double r = 0.0;
    for (int k = 400; k >= 1; --k) r = (0.5 * k) / (u + r);
    return r / (u + r);
}

}  // namespace

ChannelModel ChannelModel::from_kernel(Kernel transition, std::optional<double> snr) {
    const double sum = transition.row_sum();
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
        throw ValidationError("row_sum", "channel: transition rows sum to " + std::to_string(sum) +
                                             ", expected 1");
    }
    return ChannelModel(std::move(transition), snr);
}

std::optional<double> ChannelModel::snr_db() const {
    if (!snr_) return std::nullopt;
    return 10.0 * std::log10(*snr_);
}

std::vector<double> mpsk_phases(std::size_t size) {
    if (size < 2) throw std::invalid_argument("mpsk_phases: M must be at least 2");
    std::vector<double> phases(size);
    for (std::size_t k = 0; k < size; ++k)
        phases[k] = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(size);
    return phases;
}

double received_phase_density(double theta, double snr) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double base = std::exp(-snr) / (2.0 * kPi);
    const double v = std::sqrt(snr) * c;
    if (v >= 0.0) {
        return base + 0.5 * std::sqrt(snr / kPi) * c * std::exp(-snr * s * s) * std::erfc(-v);
    }
    return base * tail_factor(-v);
}

ChannelModel awgn_transition(std::size_t size, double snr) {
    if (size < 2) throw std::invalid_argument("awgn_transition: M must be at least 2");
    if (!std::isfinite(snr) || snr < 0.0)
        throw std::invalid_argument("awgn_transition: snr must be finite and non-negative");

    const double m = static_cast<double>(size);
    const double half_width = kPi / m;
    auto density = [snr](double theta) { return received_phase_density(theta, snr); };

    auto integrate = [&](double a, double b) {
        CompensatedSum total;
        // Split where the density switches branch.
        const double edges[] = {a, std::clamp(kPi / 2.0, a, b), b};
        for (int piece = 0; piece < 2; ++piece) {
            const double lo = edges[piece];
            const double hi = edges[piece + 1];
            if (hi <= lo) continue;
            double error = 0.0;
            double l1 = 0.0;
            const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                density, lo, hi, 20, kQuadratureRelTol, &error, &l1);
            if (!(error <= 1e-12 || error <= 1e-10 * l1)) {
                throw std::runtime_error("awgn_transition: quadrature error " + std::to_string(error) +
                                         " on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            }
            total += value;
        }
        return total.value();
    };

    std::vector<double> half(size / 2 + 1);
    half[0] = 2.0 * integrate(0.0, half_width);
    for (std::size_t t = 1; t < half.size(); ++t) {
        const double center = 2.0 * kPi * static_cast<double>(t) / m;
        if (2 * t == size)
            half[t] = 2.0 * integrate(kPi - half_width, kPi);
        else
            half[t] = integrate(center - half_width, center + half_width);
    }

    CompensatedSum row;
    for (std::size_t j = 0; j < size; ++j) {
        const std::size_t d = std::min(j, size - j);
        row += half[d];
    }
    const double sum = row.value();
    if (std::abs(sum - 1.0) >= kStochasticTolerance) {
        throw std::runtime_error("awgn_transition: row sum " + std::to_string(sum) +
                                 " deviates from 1 beyond tolerance");
    }
    for (double& c : half) c /= sum;
    return ChannelModel::from_kernel(Kernel::from_half_sequence(size, std::move(half)), snr);
}

ChannelModel load_symmetric_channel(const DenseMatrix& matrix) {
    Kernel k = validate_kernel(matrix);
    const std::size_t m = matrix.n;
    for (std::size_t i = 0; i < m; ++i) {
        CompensatedSum row, col;
        for (std::size_t j = 0; j < m; ++j) {
            row += matrix(i, j);
            col += matrix(j, i);
        }
        if (std::abs(row.value() - 1.0) > kStochasticTolerance)
            throw ValidationError("row_sum", "channel: row " + std::to_string(i) + " sums to " +
                                                 std::to_string(row.value()),
                                  std::pair{i, i});
        if (std::abs(col.value() - 1.0) > kStochasticTolerance)
            throw ValidationError("column_sum", "channel: column " + std::to_string(i) + " sums to " +
                                                    std::to_string(col.value()),
                                  std::pair{i, i});
    }
    return ChannelModel::from_kernel(std::move(k));
}

}  // namespace ria
