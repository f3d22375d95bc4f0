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
#include <span>
#include <utility>
#include <vector>

namespace ria {

/// Absolute tolerance used when checking externally supplied matrices for the
/// equal-at-equal-distance and monotonicity conditions.
inline constexpr double kKernelEqualityTolerance = 1e-9;

/// Row-major square matrix. Only used at the boundaries (validation, tests,
/// CSV); the library itself works on half-sequences.
struct DenseMatrix {
    std::size_t n = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t size, double fill = 0.0) : n(size), data(size * size, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }

    static DenseMatrix identity(std::size_t size);
    DenseMatrix operator*(const DenseMatrix& rhs) const;
    DenseMatrix transposed() const;
};

/// min(|i - j|, M - |i - j|). Throws std::out_of_range for indices outside
/// [0, M) and std::invalid_argument for M == 0.
std::size_t circular_distance(std::size_t i, std::size_t j, std::size_t size);

/// Circulant, even, symmetric-decreasing M x M non-negative matrix, stored as
/// c_0 >= c_1 >= ... >= c_{floor(M/2)} >= 0 with p_{i,j} = c_{d(i,j)}.
class Kernel {
 public:
    /// Validates non-negativity and monotonicity (with kKernelEqualityTolerance
    /// slack, after which the sequence is projected to be exactly
    /// non-increasing). Throws ValidationError.
    static Kernel from_half_sequence(std::size_t size, std::vector<double> half_seq);

    static Kernel identity(std::size_t size);
    static Kernel uniform(std::size_t size, double value);

    std::size_t size() const noexcept { return size_; }
    std::span<const double> half_sequence() const noexcept { return half_; }

    /// Even, M-periodic extension: c_{d(t mod M, 0)} for any integer t.
    double entry(long long t) const noexcept;
    double at(std::size_t i, std::size_t j) const noexcept {
        return entry(static_cast<long long>(i) - static_cast<long long>(j));
    }

    /// Full circulant matrix p_{i,j}.
    DenseMatrix dense() const;

    /// Sum of one row (equal for every row and column).
    double row_sum() const noexcept;

    friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
    Kernel(std::size_t size, std::vector<double> half) : size_(size), half_(std::move(half)) {}

    std::size_t size_ = 0;
    std::vector<double> half_;
};

/// Checks non-negativity, equality at equal circular distance and
/// monotonicity in circular distance, in that order, and returns the kernel
/// read off row 0. Throws ValidationError naming the first violated condition
/// ("non_square", "non_finite", "negative_entry", "unequal_at_equal_distance",
/// "not_decreasing") with a witnessing index pair.
Kernel validate_kernel(const DenseMatrix& matrix, double tolerance = kKernelEqualityTolerance);

/// Kernel of Q * R^T, computed as the circular cross-correlation
/// h_t = sum_k q_k r_{(k + t) mod M}. Throws std::invalid_argument on size
/// mismatch.
Kernel kernel_product(const Kernel& q, const Kernel& r);

}  // namespace ria
