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

#include "ria/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "ria/error.hpp"

namespace ria::io {

using nlohmann::json;

namespace {

double parse_real(std::string_view token) {
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r'))
        token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw ValidationError("csv_format", "not a number: '" + std::string(token) + "'");
    return value;
}

std::vector<double> json_reals(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ValidationError("json_format", std::string("missing array '") + key + "'");
    return j.at(key).get<std::vector<double>>();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("json_format", std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DenseMatrix parse_dense_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<double> row;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            row.push_back(parse_real(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        rows.push_back(std::move(row));
    }
    const std::size_t m = rows.size();
    if (m == 0) throw ValidationError("csv_format", "empty matrix");
    DenseMatrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != m) {
            throw ValidationError("csv_format", "row " + std::to_string(i) + " has " +
                                                    std::to_string(rows[i].size()) + " entries, expected " +
                                                    std::to_string(m));
        }
        for (std::size_t j = 0; j < m; ++j) out(i, j) = rows[i][j];
    }
    return out;
}

DenseMatrix read_dense_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return parse_dense_csv(in);
}

std::string dense_to_csv(const DenseMatrix& m) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < m.n; ++i) {
        for (std::size_t j = 0; j < m.n; ++j) out << (j ? "," : "") << m(i, j);
        out << '\n';
    }
    return out.str();
}

std::string kernel_to_json(const Kernel& k) {
    const auto half = k.half_sequence();
    json j = {{"size", k.size()}, {"half_seq", std::vector<double>(half.begin(), half.end())}};
    return j.dump();
}

Kernel kernel_from_json(std::string_view text) {
    const json j = parse_json(text);
    if (!j.contains("size") || !j.at("size").is_number_unsigned())
        throw ValidationError("json_format", "missing unsigned 'size'");
    return Kernel::from_half_sequence(j.at("size").get<std::size_t>(), json_reals(j, "half_seq"));
}

std::string channel_to_json(const ChannelModel& ch) {
    const auto half = ch.transition().half_sequence();
    json j;
    j["M"] = ch.size();
    if (const auto db = ch.snr_db(); db && std::isfinite(*db))
        j["snr_db"] = *db;
    else
        j["snr_db"] = nullptr;
    j["half_seq"] = std::vector<double>(half.begin(), half.end());
    return j.dump();
}

std::string codebook_to_json(const Codebook& cb) {
    json j = {{"levels", std::vector<double>(cb.levels().begin(), cb.levels().end())},
              {"shift_applied", cb.shift_applied()}};
    return j.dump();
}

Codebook codebook_from_json(std::string_view text) {
    return validate_codebook(json_reals(parse_json(text), "levels"));
}

std::string report_to_json(const DistortionReport& report) {
    const auto perm = report.assignment.perm.map();
    json j;
    j["perm"] = std::vector<std::size_t>(perm.begin(), perm.end());
    j["decoder"] = std::string(to_string(report.decoder));
    j["msd"] = report.msd;
    if (report.decoder == Decoder::mmse) j["y"] = report.reconstructions;
    return j.dump();
}

std::vector<double> parse_reals(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto start = text.find_first_not_of(" \t\r\n,", pos);
        if (start == std::string_view::npos) break;
        auto end = text.find_first_of(" \t\r\n,", start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(parse_real(text.substr(start, end - start)));
        pos = end;
    }
    return out;
}

std::vector<double> read_reals(const std::filesystem::path& path) { return parse_reals(read_file(path)); }

SourceSpec parse_source_spec(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("source spec '" + std::string(text) + "' needs kind:params");
    const auto kind = text.substr(0, colon);
    const auto params = text.substr(colon + 1);
    if (kind == "table") return QuantileTable{read_reals(std::filesystem::path(std::string(params)))};

    std::vector<double> values;
    try {
        values = parse_reals(params);
    } catch (const ValidationError&) {
        throw std::invalid_argument("source spec '" + std::string(text) + "': bad parameters");
    }
    if (values.size() != 2)
        throw std::invalid_argument("source spec '" + std::string(text) + "' needs two parameters");
    SourceSpec spec;
    if (kind == "uniform")
        spec = UniformSource{values[0], values[1]};
    else if (kind == "gaussian")
        spec = GaussianSource{values[0], values[1]};
    else
        throw std::invalid_argument("unknown source kind '" + std::string(kind) + "'");
    validate_source(spec);
    return spec;
}

Assignment read_assignment(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    std::vector<std::size_t> map;
    if (first != std::string::npos && text[first] == '{') {
        const json j = parse_json(text);
        if (!j.contains("perm") || !j.at("perm").is_array())
            throw ValidationError("json_format", "assignment file needs a 'perm' array");
        map = j.at("perm").get<std::vector<std::size_t>>();
    } else {
        for (double v : parse_reals(text)) {
            if (v < 0.0 || v != std::floor(v))
                throw ValidationError("not_a_permutation", "assignment entries must be indices");
            map.push_back(static_cast<std::size_t>(v));
        }
    }
    return {Permutation(std::move(map))};
}

}  // namespace ria::io
