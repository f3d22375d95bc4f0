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

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ria/kernel.hpp"

namespace ria {

/// Row-sum tolerance for transition matrices.
inline constexpr double kStochasticTolerance = 1e-9;

/// M-PSK symmetric memoryless channel: P(s_j | s_i) = transition.at(i, j).
/// The transition kernel is doubly stochastic to within kStochasticTolerance.
class ChannelModel {
 public:
    /// Throws ValidationError("row_sum") when the kernel is not stochastic.
    static ChannelModel from_kernel(Kernel transition, std::optional<double> snr = std::nullopt);

    std::size_t size() const noexcept { return transition_.size(); }
    /// Es/N0, linear. Empty for channels loaded from a matrix.
    std::optional<double> snr() const noexcept { return snr_; }
    std::optional<double> snr_db() const;
    const Kernel& transition() const noexcept { return transition_; }
    double probability(std::size_t sent, std::size_t detected) const noexcept {
        return transition_.at(sent, detected);
    }

 private:
    ChannelModel(Kernel transition, std::optional<double> snr)
        : transition_(std::move(transition)), snr_(snr) {}

    Kernel transition_;
    std::optional<double> snr_;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// 2 pi k / M for k = 0..M-1. Throws std::invalid_argument for M < 2.
std::vector<double> mpsk_phases(std::size_t size);

/// Density of the received phase theta when the unit-energy symbol at phase 0
/// is sent through complex AWGN with Es/N0 = snr.
double received_phase_density(double theta, double snr);

/// ML sector-detection transition probabilities of M-PSK over AWGN, by
/// adaptive Gauss-Kronrod quadrature of received_phase_density over each
/// decision sector. Throws std::invalid_argument for M < 2 or a negative or
/// non-finite snr, std::runtime_error when quadrature misses its tolerance.
ChannelModel awgn_transition(std::size_t size, double snr);

/// Wraps a user-supplied matrix after checking the circulant
/// symmetric-decreasing conditions and row and column sums. Throws
/// ValidationError naming the violated condition.
ChannelModel load_symmetric_channel(const DenseMatrix& matrix);

}  // namespace ria
