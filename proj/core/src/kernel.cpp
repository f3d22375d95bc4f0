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

#include "ria/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ria/error.hpp"
#include "ria/numeric.hpp"

namespace ria {

DenseMatrix DenseMatrix::identity(std::size_t size) {
    DenseMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (n != rhs.n) throw std::invalid_argument("DenseMatrix: size mismatch in product");
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            CompensatedSum acc;
            for (std::size_t k = 0; k < n; ++k) acc += (*this)(i, k) * rhs(k, j);
            out(i, j) = acc.value();
        }
    }
    return out;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(j, i) = (*this)(i, j);
    return out;
}

std::size_t circular_distance(std::size_t i, std::size_t j, std::size_t size) {
    if (size == 0) throw std::invalid_argument("circular_distance: M must be positive");
    if (i >= size || j >= size) {
        throw std::out_of_range("circular_distance: index out of range (" + std::to_string(i) +
                                ", " + std::to_string(j) + ") for M = " + std::to_string(size));
    }
    const std::size_t diff = i > j ? i - j : j - i;
    return std::min(diff, size - diff);
}

Kernel Kernel::from_half_sequence(std::size_t size, std::vector<double> half_seq) {
    if (size == 0) throw std::invalid_argument("Kernel: size must be positive");
    if (half_seq.size() != size / 2 + 1) {
        throw std::invalid_argument("Kernel: half sequence for M = " + std::to_string(size) +
                                    " must have " + std::to_string(size / 2 + 1) + " entries, got " +
                                    std::to_string(half_seq.size()));
    }
    for (std::size_t t = 0; t < half_seq.size(); ++t) {
        if (!std::isfinite(half_seq[t]))
            throw ValidationError("non_finite", "Kernel: non-finite c_" + std::to_string(t),
                                  std::pair{std::size_t{0}, t});
        if (half_seq[t] < 0.0)
            throw ValidationError("negative_entry", "Kernel: negative c_" + std::to_string(t),
                                  std::pair{std::size_t{0}, t});
    }
    for (std::size_t t = 1; t < half_seq.size(); ++t) {
        if (half_seq[t] > half_seq[t - 1] + kKernelEqualityTolerance) {
            throw ValidationError("not_decreasing",
                                  "Kernel: c_" + std::to_string(t) + " > c_" + std::to_string(t - 1),
                                  std::pair{std::size_t{0}, t});
        }
        half_seq[t] = std::min(half_seq[t], half_seq[t - 1]);
    }
    return Kernel(size, std::move(half_seq));
}

Kernel Kernel::identity(std::size_t size) {
    if (size == 0) throw std::invalid_argument("Kernel: size must be positive");
    std::vector<double> half(size / 2 + 1, 0.0);
    half[0] = 1.0;
    return Kernel(size, std::move(half));
}

Kernel Kernel::uniform(std::size_t size, double value) {
    return from_half_sequence(size, std::vector<double>(size / 2 + 1, value));
}

double Kernel::entry(long long t) const noexcept {
    const auto m = static_cast<long long>(size_);
    long long r = t % m;
    if (r < 0) r += m;
    return half_[static_cast<std::size_t>(std::min(r, m - r))];
}

DenseMatrix Kernel::dense() const {
    DenseMatrix m(size_);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j) m(i, j) = at(i, j);
    return m;
}

double Kernel::row_sum() const noexcept {
    CompensatedSum acc;
    for (std::size_t j = 0; j < size_; ++j) acc += at(0, j);
    return acc.value();
}

Kernel validate_kernel(const DenseMatrix& matrix, double tolerance) {
    const std::size_t m = matrix.n;
    if (m == 0 || matrix.data.size() != m * m)
        throw ValidationError("non_square", "validate_kernel: matrix is empty or not square");

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!std::isfinite(matrix(i, j)))
                throw ValidationError("non_finite", "validate_kernel: non-finite entry", std::pair{i, j});
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (matrix(i, j) < 0.0) {
                throw ValidationError("negative_entry",
                                      "validate_kernel: negative entry at (" + std::to_string(i) +
                                          ", " + std::to_string(j) + ")",
                                      std::pair{i, j});
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t d = circular_distance(i, j, m);
            if (std::abs(matrix(i, j) - matrix(0, d)) > tolerance) {
                throw ValidationError("unequal_at_equal_distance",
                                      "validate_kernel: entry (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ") differs from (0, " +
                                          std::to_string(d) + ") at equal circular distance",
                                      std::pair{i, j});
            }
        }
    }
    for (std::size_t t = 1; t <= m / 2; ++t) {
        if (matrix(0, t) > matrix(0, t - 1) + tolerance) {
            throw ValidationError("not_decreasing",
                                  "validate_kernel: p(0, " + std::to_string(t) + ") > p(0, " +
                                      std::to_string(t - 1) + ")",
                                  std::pair{std::size_t{0}, t});
        }
    }
    std::vector<double> half(m / 2 + 1);
    for (std::size_t t = 0; t < half.size(); ++t) half[t] = matrix(0, t);
    return Kernel::from_half_sequence(m, std::move(half));
}

Kernel kernel_product(const Kernel& q, const Kernel& r) {
    if (q.size() != r.size()) {
        throw std::invalid_argument("kernel_product: size mismatch (" + std::to_string(q.size()) +
                                    " vs " + std::to_string(r.size()) + ")");
    }
    const std::size_t m = q.size();
    std::vector<double> half(m / 2 + 1);
    for (std::size_t t = 0; t < half.size(); ++t) {
        CompensatedSum acc;
        for (std::size_t k = 0; k < m; ++k) {
            acc += q.entry(static_cast<long long>(k)) *
                   r.entry(static_cast<long long>((k + t) % m));
        }
        half[t] = acc.value();
    }
    return Kernel::from_half_sequence(m, std::move(half));
}

}  // namespace ria
