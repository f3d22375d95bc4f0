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

#include "ria/quantizer.hpp"

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ria/error.hpp"
#include "ria/numeric.hpp"

namespace ria {

Codebook validate_codebook(std::vector<double> levels) {
    if (levels.empty()) throw ValidationError("empty", "codebook: no levels");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!std::isfinite(levels[i]))
            throw ValidationError("non_finite", "codebook: level " + std::to_string(i) + " is not finite",
                                  std::pair{i, i});
        if (i > 0 && !(levels[i] > levels[i - 1])) {
            throw ValidationError("not_increasing",
                                  "codebook: q_" + std::to_string(i) + " <= q_" + std::to_string(i - 1),
                                  std::pair{i - 1, i});
        }
    }
    double shift = 0.0;
    if (levels.front() < 0.0) {
        shift = -levels.front();
        for (double& q : levels) q += shift;
        levels.front() = 0.0;
        for (std::size_t i = 1; i < levels.size(); ++i) {
            if (!(levels[i] > levels[i - 1]))
                throw ValidationError("not_increasing", "codebook: levels collapse after shift",
                                      std::pair{i - 1, i});
        }
    }
    return Codebook(std::move(levels), shift);
}

namespace {

struct SourceCheck {
    void operator()(const UniformSource& s) const {
        if (!std::isfinite(s.a) || !std::isfinite(s.b) || !(s.b > s.a))
            throw ValidationError("degenerate_source", "uniform source needs finite a < b");
    }
    void operator()(const GaussianSource& s) const {
        if (!std::isfinite(s.mean) || !std::isfinite(s.stddev) || !(s.stddev > 0.0))
            throw ValidationError("degenerate_source", "gaussian source needs finite mean and std > 0");
    }
    void operator()(const QuantileTable& s) const {
        if (s.quantiles.size() < 2)
            throw ValidationError("degenerate_source", "quantile table needs at least two entries");
        for (std::size_t k = 0; k < s.quantiles.size(); ++k) {
            if (!std::isfinite(s.quantiles[k]))
                throw ValidationError("table_not_increasing", "quantile table: non-finite entry",
                                      std::pair{k, k});
            if (k > 0 && !(s.quantiles[k] > s.quantiles[k - 1]))
                throw ValidationError("table_not_increasing",
                                      "quantile table: entries must be strictly increasing",
                                      std::pair{k - 1, k});
        }
    }
};

double table_quantile(const std::vector<double>& q, double u) {
    const double intervals = static_cast<double>(q.size() - 1);
    const double pos = std::clamp(u, 0.0, 1.0) * intervals;
    const auto k = std::min(static_cast<std::size_t>(pos), q.size() - 2);
    const double frac = pos - static_cast<double>(k);
    return q[k] + frac * (q[k + 1] - q[k]);
}

// Integral of the piecewise-linear quantile function over [u0, u1].
double table_quantile_integral(const std::vector<double>& q, double u0, double u1) {
    const std::size_t intervals = q.size() - 1;
    const double width = 1.0 / static_cast<double>(intervals);
    CompensatedSum acc;
    for (std::size_t k = 0; k < intervals; ++k) {
        const double lo = std::max(u0, static_cast<double>(k) * width);
        const double hi = std::min(u1, static_cast<double>(k + 1) * width);
        if (hi <= lo) continue;
        auto at = [&](double u) { return q[k] + (u / width - static_cast<double>(k)) * (q[k + 1] - q[k]); };
        acc += 0.5 * (at(lo) + at(hi)) * (hi - lo);
    }
    return acc.value();
}

}  // namespace

void validate_source(const SourceSpec& source) { std::visit(SourceCheck{}, source); }

double source_quantile(const SourceSpec& source, double u) {
    if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("source_quantile: u outside [0, 1]");
    validate_source(source);
    if (const auto* s = std::get_if<UniformSource>(&source)) return s->a + (s->b - s->a) * u;
    if (const auto* s = std::get_if<GaussianSource>(&source)) {
        if (u == 0.0) return -std::numeric_limits<double>::infinity();
        if (u == 1.0) return std::numeric_limits<double>::infinity();
        return boost::math::quantile(boost::math::normal(s->mean, s->stddev), u);
    }
    return table_quantile(std::get<QuantileTable>(source).quantiles, u);
}

std::vector<double> cell_boundaries(const SourceSpec& source, std::size_t size) {
    if (size == 0) throw std::invalid_argument("cell_boundaries: M must be positive");
    std::vector<double> edges(size + 1);
    for (std::size_t i = 0; i <= size; ++i)
        edges[i] = source_quantile(source, static_cast<double>(i) / static_cast<double>(size));
    return edges;
}

Codebook max_entropy_codebook(const SourceSpec& source, std::size_t size, LevelRule rule) {
    if (size == 0) throw std::invalid_argument("max_entropy_codebook: M must be positive");
    validate_source(source);
    if (const auto* t = std::get_if<QuantileTable>(&source); t && t->quantiles.size() - 1 < size) {
        throw ValidationError("table_too_coarse", "quantile table has " +
                                                      std::to_string(t->quantiles.size() - 1) +
                                                      " intervals, need at least M = " +
                                                      std::to_string(size));
    }
    const double m = static_cast<double>(size);
    std::vector<double> levels(size);

    if (rule == LevelRule::cell_midpoint) {
        for (std::size_t i = 0; i < size; ++i)
            levels[i] = source_quantile(source, (static_cast<double>(i) + 0.5) / m);
        return validate_codebook(std::move(levels));
    }

    if (const auto* s = std::get_if<UniformSource>(&source)) {
        for (std::size_t i = 0; i < size; ++i)
            levels[i] = s->a + (s->b - s->a) * (static_cast<double>(i) + 0.5) / m;
    } else if (const auto* g = std::get_if<GaussianSource>(&source)) {
        // E[X | a < X < b] = mean + std * (phi(a) - phi(b)) / (1/M) in standard units.
        const boost::math::normal unit;
        auto density_at_edge = [&](std::size_t i) {
            if (i == 0 || i == size) return 0.0;
            return boost::math::pdf(unit, boost::math::quantile(unit, static_cast<double>(i) / m));
        };
        for (std::size_t i = 0; i < size; ++i)
            levels[i] = g->mean + g->stddev * m * (density_at_edge(i) - density_at_edge(i + 1));
    } else {
        const auto& q = std::get<QuantileTable>(source).quantiles;
        for (std::size_t i = 0; i < size; ++i) {
            levels[i] = m * table_quantile_integral(q, static_cast<double>(i) / m,
                                                    static_cast<double>(i + 1) / m);
        }
    }
    return validate_codebook(std::move(levels));
}

}  // namespace ria
