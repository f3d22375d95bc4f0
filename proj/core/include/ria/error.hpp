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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ria {

/// Raised when externally supplied data (a matrix, codebook, channel or
/// permutation) fails one of the structural conditions the library relies on.
/// `condition()` is a stable short identifier suitable for tests and logs;
/// `witness()` carries the offending index pair when there is one.
class ValidationError : public std::invalid_argument {
 public:
    ValidationError(std::string condition, const std::string& what,
                    std::optional<std::pair<std::size_t, std::size_t>> witness = std::nullopt)
        : std::invalid_argument(what), condition_(std::move(condition)), witness_(witness) {}

    const std::string& condition() const noexcept { return condition_; }
    const std::optional<std::pair<std::size_t, std::size_t>>& witness() const noexcept {
        return witness_;
    }

 private:
    std::string condition_;
    std::optional<std::pair<std::size_t, std::size_t>> witness_;
};

/// Raised by the exhaustive oracles when the problem size exceeds what they
/// are allowed to enumerate.
class OracleLimitError : public std::length_error {
 public:
    OracleLimitError(std::size_t size, std::size_t limit)
        : std::length_error("oracle limit exceeded: M = " + std::to_string(size) +
                            " > " + std::to_string(limit)),
          size_(size),
          limit_(limit) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t limit() const noexcept { return limit_; }

 private:
    std::size_t size_;
    std::size_t limit_;
};

}  // namespace ria
