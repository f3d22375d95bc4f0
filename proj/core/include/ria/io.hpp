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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ria/channel.hpp"
#include "ria/index_assignment.hpp"
#include "ria/kernel.hpp"
#include "ria/quantizer.hpp"

namespace ria::io {

/// M lines of M comma-separated reals. Blank lines are ignored.
/// Throws ValidationError("csv_format") on ragged or unparsable input.
DenseMatrix parse_dense_csv(std::istream& in);
DenseMatrix read_dense_csv(const std::filesystem::path& path);
std::string dense_to_csv(const DenseMatrix& m);

/// { "size": M, "half_seq": [c_0, ...] }
std::string kernel_to_json(const Kernel& k);
Kernel kernel_from_json(std::string_view text);

/// { "M": ..., "snr_db": ... | null, "half_seq": [...] }
std::string channel_to_json(const ChannelModel& ch);

/// { "levels": [...], "shift_applied": ... }
std::string codebook_to_json(const Codebook& cb);
/// Accepts { "levels": [...] }; runs validate_codebook.
Codebook codebook_from_json(std::string_view text);

/// { "perm": [...], "decoder": "ml" | "mmse", "msd": x, "y": [...] (mmse only) }
std::string report_to_json(const DistortionReport& report);

/// Comma- or whitespace-separated reals.
std::vector<double> parse_reals(std::string_view text);
std::vector<double> read_reals(const std::filesystem::path& path);

/// "uniform:a,b", "gaussian:mean,std" or "table:<path>".
/// Throws std::invalid_argument for unknown kinds or malformed parameters.
SourceSpec parse_source_spec(std::string_view text);

/// Either a JSON object with a "perm" array or a plain list of indices.
Assignment read_assignment(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace ria::io
