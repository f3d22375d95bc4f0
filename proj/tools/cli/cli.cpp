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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ria/channel.hpp"
#include "ria/error.hpp"
#include "ria/index_assignment.hpp"
#include "ria/io.hpp"
#include "ria/quantizer.hpp"
#include "ria/rearrange.hpp"

namespace ria::cli {
namespace {

constexpr std::size_t kVerifyAssignmentLimit = 8;
constexpr std::size_t kVerifyRearrangeLimit = 6;
constexpr double kMaxTolerance = 1e-12;
constexpr double kMsdTolerance = 1e-10;

struct Options {
    std::string m_text = "8";
    std::string snr_text = "10";
    std::string source = "uniform:0,1";
    std::string decoder = "ml";
    std::string assignment = "zigzag,theorem3,identity";
    std::string channel;
    std::string out = "-";
    std::string rule = "centroid";
    std::string format = "json";
    bool verify = false;
    std::uint64_t seed = 20240601;
    std::size_t trials = 20;
    bool m_given = false;
    bool snr_given = false;
};

class UsageError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_perm(const Assignment& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + "]";
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        parts.push_back(trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

double to_real(const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (token.empty() || used != token.size() || !std::isfinite(v))
        throw UsageError("not a number: '" + token + "'");
    return v;
}

std::size_t to_size(const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("not a size: '" + token + "'");
    try {
        return static_cast<std::size_t>(std::stoull(token));
    } catch (const std::exception&) {
        throw UsageError("size out of range: '" + token + "'");
    }
}

std::size_t single_size(const std::string& text) {
    const auto sizes = parse_size_list(text);
    if (sizes.size() != 1) throw UsageError("--M needs a single size here");
    return sizes.front();
}

double single_snr_db(const std::string& text) {
    const auto grid = parse_real_grid(text);
    if (grid.size() != 1) throw UsageError("--snr-db needs a single value here");
    return grid.front();
}

std::vector<Decoder> parse_decoders(const std::string& text) {
    if (text == "ml") return {Decoder::ml};
    if (text == "mmse") return {Decoder::mmse};
    if (text == "both") return {Decoder::ml, Decoder::mmse};
    throw UsageError("--decoder must be ml, mmse or both");
}

SourceSpec parse_source(const std::string& text) {
    try {
        return io::parse_source_spec(text);
    } catch (const ValidationError& e) {
        throw UsageError("--source: " + std::string(e.what()));
    }
}

// Uniform draw in [0, 1) from the top 53 bits; identical on every platform.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Assignment random_assignment(std::size_t m, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    for (std::size_t i = m; i > 1; --i) {
        const auto j = std::min(static_cast<std::size_t>(unit_draw(rng) * static_cast<double>(i)), i - 1);
        std::swap(perm[i - 1], perm[j]);
    }
    return Assignment{Permutation(std::move(perm))};
}

/// Sorted absolute values of uniform(-1, 1) draws, spread to a minimum gap of 1e-6.
std::vector<double> random_levels(std::size_t m, std::mt19937_64& rng) {
    std::vector<double> v(m);
    for (double& x : v) x = std::abs(2.0 * unit_draw(rng) - 1.0);
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < m; ++i) v[i] = std::max(v[i], v[i - 1] + 1e-6);
    return v;
}

bool within(double value, double reference, double tol) {
    return std::abs(value - reference) <= tol * std::max(std::abs(value), std::abs(reference));
}

ChannelModel channel_from_csv(const std::string& path) { return load_symmetric_channel(io::read_dense_csv(path)); }

int cmd_optimal(const Options& opt, std::ostream& out) {
    const auto decoders = parse_decoders(opt.decoder);
    std::optional<ChannelModel> ch;
    std::size_t m = 0;
    if (!opt.channel.empty()) {
        ch = channel_from_csv(opt.channel);
        m = ch->size();
        if (opt.m_given && single_size(opt.m_text) != m)
            throw UsageError("--M disagrees with the size of the --channel matrix");
    } else {
        m = single_size(opt.m_text);
    }
    if (opt.verify && m > kVerifyAssignmentLimit) throw OracleLimitError(m, kVerifyAssignmentLimit);
    if (!ch) ch = awgn_transition(m, db_to_linear(single_snr_db(opt.snr_text)));

    const Codebook cb = max_entropy_codebook(parse_source(opt.source), m);
    out << "M " << m << '\n';
    out << "channel " << (opt.channel.empty() ? "awgn " + format_real(*ch->snr_db()) + " dB" : opt.channel) << '\n';
    out << "source " << opt.source << '\n';
    out << "levels";
    for (double q : cb.levels()) out << ' ' << format_real(q);
    out << '\n';

    int status = kSuccess;
    for (Decoder d : decoders) {
        const auto zz = channel_msd(cb, zigzag(m), *ch, d);
        const auto t3 = channel_msd(cb, organ_pipe(m), *ch, d);
        out << "decoder " << to_string(d) << '\n';
        out << "  zigzag   " << format_perm(zz.assignment) << "  msd " << format_real(zz.msd) << '\n';
        out << "  theorem3 " << format_perm(t3.assignment) << "  msd " << format_real(t3.msd) << '\n';
        if (!opt.verify) continue;
        const auto best = brute_force_best(cb, *ch, d);
        out << "  brute force minimum " << format_real(best.best_msd) << " (" << best.minimizers.size()
            << " minimizers)\n";
        if (within(zz.msd, best.best_msd, kMsdTolerance)) {
            out << "  CERTIFIED OPTIMAL\n";
        } else {
            out << "  NOT OPTIMAL: zigzag exceeds the minimum by " << format_real(zz.msd - best.best_msd) << '\n';
            status = kVerificationFailure;
        }
    }
    return status;
}

Assignment resolve_assignment(const std::string& label, std::size_t m, std::mt19937_64& rng) {
    if (label == "zigzag") return zigzag(m);
    if (label == "theorem3") return organ_pipe(m);
    if (label == "identity") return Assignment{Permutation::identity(m)};
    if (label == "random") return random_assignment(m, rng);
    if (label.rfind("file:", 0) == 0) {
        Assignment a = io::read_assignment(label.substr(5));
        if (a.size() != m) throw UsageError(label + ": assignment size differs from --M");
        return a;
    }
    throw UsageError("unknown assignment '" + label + "'");
}

int cmd_sweep(const Options& opt, std::ostream& out) {
    if (!opt.channel.empty()) throw UsageError("sweep builds AWGN channels; --channel is not accepted");
    const std::size_t m = single_size(opt.m_text);
    const auto grid = parse_real_grid(opt.snr_text);
    const auto decoders = parse_decoders(opt.decoder);
    const Codebook cb = max_entropy_codebook(parse_source(opt.source), m);

    std::mt19937_64 rng(opt.seed);
    std::vector<std::pair<std::string, Assignment>> assignments;
    for (const auto& label : split(opt.assignment, ',')) {
        if (label.empty()) throw UsageError("empty assignment label");
        if (std::any_of(assignments.begin(), assignments.end(), [&](const auto& e) { return e.first == label; }))
            continue;
        assignments.emplace_back(label, resolve_assignment(label, m, rng));
    }
    std::stable_sort(assignments.begin(), assignments.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    out << "snr_db,decoder,assignment,msd\n";
    for (double db : grid) {
        const ChannelModel ch = awgn_transition(m, db_to_linear(db));
        for (const auto& [label, a] : assignments) {
            for (Decoder d : decoders) {
                out << format_real(db) << ',' << to_string(d) << ',' << label << ','
                    << format_real(channel_msd(cb, a, ch, d).msd) << '\n';
            }
        }
    }
    return kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    std::optional<ChannelModel> loaded;
    if (!opt.channel.empty()) loaded = channel_from_csv(opt.channel);

    std::vector<std::size_t> sizes;
    std::vector<double> grid;
    if (loaded) {
        sizes = {loaded->size()};
        grid = {std::numeric_limits<double>::quiet_NaN()};
    } else {
        sizes = parse_size_list(opt.m_given ? opt.m_text : "2:6");
        grid = opt.snr_given ? parse_real_grid(opt.snr_text) : std::vector<double>{0, 5, 10};
    }
    for (std::size_t m : sizes) {
        if (m < 2 && !loaded) throw UsageError("--M must be at least 2");
        if (m > kVerifyAssignmentLimit) throw OracleLimitError(m, kVerifyAssignmentLimit);
    }

    out << "seed " << opt.seed << '\n';
    if (opt.trials == 0) {
        err << "warning: --trials 0, nothing to verify\n";
        out << "checks 0, failures 0\n";
        return kSuccess;
    }

    std::mt19937_64 rng(opt.seed);
    std::size_t checks = 0;
    std::size_t failures = 0;
    for (std::size_t m : sizes) {
        for (double db : grid) {
            const ChannelModel ch = loaded ? *loaded : awgn_transition(m, db_to_linear(db));
            const std::string where = "M " + std::to_string(m) + " " +
                                      (loaded ? opt.channel : "snr_db " + format_real(db));
            std::size_t local_checks = 0;
            std::size_t local_failures = 0;
            auto record = [&](bool ok, std::size_t trial, const char* what, double oracle, double closed) {
                ++local_checks;
                if (ok) return;
                ++local_failures;
                out << "FAIL " << where << " trial " << trial << ' ' << what << ": oracle " << format_real(oracle)
                    << " closed form " << format_real(closed) << " diff " << format_real(closed - oracle) << '\n';
            };
            for (std::size_t t = 0; t < opt.trials; ++t) {
                const auto levels = random_levels(m, rng);
                const auto other = random_levels(m, rng);
                if (m <= kVerifyRearrangeLimit) {
                    const ValueVector r(levels);
                    const ValueVector s(other);
                    const double oracle = brute_force_max(r, s, ch.transition(), TiePolicy::first).best_value;
                    const double closed = bilinear_sum(optimal_arrangement(r).slots,
                                                       optimal_arrangement(s).slots, ch.transition());
                    record(within(closed, oracle, kMaxTolerance), t, "rearrange", oracle, closed);
                }
                const Codebook cb = validate_codebook(levels);
                for (Decoder d : {Decoder::ml, Decoder::mmse}) {
                    const double oracle = brute_force_best(cb, ch, d).best_msd;
                    const double closed = channel_msd(cb, zigzag(m), ch, d).msd;
                    record(within(closed, oracle, kMsdTolerance), t, d == Decoder::ml ? "zigzag ml" : "zigzag mmse",
                           oracle, closed);
                }
            }
            out << where << ": " << local_checks - local_failures << '/' << local_checks << " passed\n";
            checks += local_checks;
            failures += local_failures;
        }
    }
    out << "checks " << checks << ", failures " << failures << '\n';
    return failures ? kVerificationFailure : kSuccess;
}

int cmd_kernel_gen(const Options& opt, std::ostream& out) {
    const ChannelModel ch = awgn_transition(single_size(opt.m_text), db_to_linear(single_snr_db(opt.snr_text)));
    if (opt.format == "csv")
        out << io::dense_to_csv(ch.transition().dense());
    else
        out << io::channel_to_json(ch) << '\n';
    return kSuccess;
}

int cmd_kernel_validate(const Options& opt, std::ostream& out) {
    if (opt.channel.empty()) throw UsageError("kernel validate needs --channel <csv>");
    const Kernel k = validate_kernel(io::read_dense_csv(opt.channel));
    out << io::kernel_to_json(k) << '\n';
    return kSuccess;
}

int cmd_quantize(const Options& opt, std::ostream& out) {
    LevelRule rule;
    if (opt.rule == "centroid")
        rule = LevelRule::centroid;
    else if (opt.rule == "midpoint")
        rule = LevelRule::cell_midpoint;
    else
        throw UsageError("--rule must be centroid or midpoint");
    out << io::codebook_to_json(max_entropy_codebook(parse_source(opt.source), single_size(opt.m_text), rule))
        << '\n';
    return kSuccess;
}

void describe(const ValidationError& e, std::ostream& err) {
    err << "validation failed: " << e.condition();
    if (e.witness()) err << " at (" << e.witness()->first << ", " << e.witness()->second << ")";
    err << ": " << e.what() << '\n';
}

}  // namespace

std::vector<double> parse_real_grid(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) return {};
    if (s.find(':') != std::string::npos) {
        const auto parts = split(s, ':');
        if (parts.size() != 3) throw UsageError("range must be start:step:stop");
        const double start = to_real(parts[0]);
        const double step = to_real(parts[1]);
        const double stop = to_real(parts[2]);
        if (step == 0.0 || (stop - start) / step < 0.0) throw UsageError("range step does not reach stop");
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count > 100000) throw UsageError("range has too many points");
        std::vector<double> grid(count);
        for (std::size_t k = 0; k < count; ++k) grid[k] = start + static_cast<double>(k) * step;
        return grid;
    }
    std::vector<double> grid;
    for (const auto& part : split(s, ',')) grid.push_back(to_real(part));
    return grid;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
    const std::string s = trim(text);
    if (s.find(':') != std::string::npos) {
        const auto parts = split(s, ':');
        if (parts.size() != 2) throw UsageError("size range must be lo:hi");
        const auto lo = to_size(parts[0]);
        const auto hi = to_size(parts[1]);
        if (lo > hi) throw UsageError("size range is empty");
        std::vector<std::size_t> sizes;
        for (auto m = lo; m <= hi; ++m) sizes.push_back(m);
        return sizes;
    }
    std::vector<std::size_t> sizes;
    for (const auto& part : split(s, ',')) sizes.push_back(to_size(part));
    return sizes;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Index assignment for M-PSK via circulant rearrangement", "ria"};
    app.require_subcommand(1);

    auto add_m = [&](CLI::App* sub) { return sub->add_option("--M", opt.m_text, "Constellation size"); };
    auto add_snr = [&](CLI::App* sub) {
        return sub
            ->add_option("--snr-db", opt.snr_text, "Es/N0 in dB: value, list a,b,c or range start:step:stop")
            ->expected(0, 1);
    };
    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--source", opt.source, "uniform:a,b | gaussian:mean,std | table:<path>");
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out, "Output path or - for stdout"); };

    std::vector<std::pair<CLI::Option*, CLI::Option*>> tracked;

    auto* optimal = app.add_subcommand("optimal", "Zigzag and organ-pipe assignments with their distortion");
    tracked.emplace_back(add_m(optimal), add_snr(optimal));
    add_source(optimal);
    optimal->add_option("--decoder", opt.decoder, "ml | mmse | both");
    optimal->add_option("--channel", opt.channel, "Symmetric channel matrix (CSV) instead of AWGN");
    optimal->add_flag("--verify", opt.verify, "Certify against exhaustive search (M <= 8)");
    add_out(optimal);

    auto* sweep = app.add_subcommand("sweep", "Distortion versus SNR as CSV");
    tracked.emplace_back(add_m(sweep), add_snr(sweep));
    add_source(sweep);
    sweep->add_option("--decoder", opt.decoder, "ml | mmse | both");
    sweep->add_option("--assignment", opt.assignment, "Comma list of zigzag, theorem3, identity, random, file:<path>");
    sweep->add_option("--channel", opt.channel, "Not supported for sweep");
    sweep->add_option("--seed", opt.seed, "Seed for random assignments");
    add_out(sweep);

    auto* verify = app.add_subcommand("verify", "Exhaustive search against the closed forms on random codebooks");
    tracked.emplace_back(add_m(verify), add_snr(verify));
    verify->add_option("--trials", opt.trials, "Random codebooks per (M, SNR)");
    verify->add_option("--seed", opt.seed, "Seed for the random codebooks");
    verify->add_option("--channel", opt.channel, "Check a symmetric channel matrix (CSV) instead of AWGN");
    add_out(verify);

    auto* kernel = app.add_subcommand("kernel", "Channel kernel utilities");
    kernel->require_subcommand(1);
    auto* gen = kernel->add_subcommand("gen", "AWGN M-PSK transition kernel");
    tracked.emplace_back(add_m(gen), add_snr(gen));
    gen->add_option("--format", opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    add_out(gen);
    auto* validate = kernel->add_subcommand("validate", "Check a matrix for the circulant decreasing conditions");
    validate->add_option("--channel", opt.channel, "Matrix (CSV)")->required();
    add_out(validate);

    auto* quantize = app.add_subcommand("quantize", "Maximum-entropy codebook");
    tracked.emplace_back(add_m(quantize), nullptr);
    add_source(quantize);
    quantize->add_option("--rule", opt.rule, "centroid | midpoint");
    add_out(quantize);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }
    for (const auto& [m, snr] : tracked) {
        if (m && m->count()) opt.m_given = true;
        if (snr && snr->count()) opt.snr_given = true;
    }

    std::ostringstream buffer;
    int status = kSuccess;
    try {
        if (optimal->parsed())
            status = cmd_optimal(opt, buffer);
        else if (sweep->parsed())
            status = cmd_sweep(opt, buffer);
        else if (verify->parsed())
            status = cmd_verify(opt, buffer, err);
        else if (gen->parsed())
            status = cmd_kernel_gen(opt, buffer);
        else if (validate->parsed())
            status = cmd_kernel_validate(opt, buffer);
        else
            status = cmd_quantize(opt, buffer);
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ValidationError& e) {
        describe(e, err);
        return kVerificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }

    if (opt.out == "-") {
        out << buffer.str();
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!(file << buffer.str())) {
            err << "error: cannot write " << opt.out << '\n';
            return kUsageError;
        }
    }
    return status;
}

}  // namespace ria::cli
