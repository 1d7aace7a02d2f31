#include "subfreq/stats.hpp"
#include "subfreq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace subfreq {

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw StatsError("pearson: size mismatch");
    if (x.size() < 3)
        throw StatsError("pearson: need at least 3 points");

    const auto n = static_cast<double>(x.size());
    long double mx = 0.0L, my = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;

    long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double dx = x[i] - mx;
        const long double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0L || syy == 0.0L)
        throw StatsError("pearson: zero variance");
    return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

SteigerResult steiger_test(double r12, double r13, double r23,
                           std::size_t n) {
    if (std::abs(r12) >= 1.0 || std::abs(r13) >= 1.0 || std::abs(r23) >= 1.0)
        throw StatsError("steiger_test: correlations must be in (-1, 1)");
    if (n < 4)
        throw StatsError("steiger_test: need n >= 4");

    const double z1 = std::atanh(r12);
    const double z2 = std::atanh(r13);
    const double rbar2 = (r12 * r12 + r13 * r13) / 2.0;
    const double f = std::min(1.0, (1.0 - r23) / (2.0 * (1.0 - rbar2)));
    const double h = (1.0 - f * rbar2) / (1.0 - rbar2);

    SteigerResult out;
    out.z = (z1 - z2) * std::sqrt((static_cast<double>(n) - 3.0) /
                                  (2.0 * (1.0 - r23) * h));
    out.p = 2.0 * (1.0 - normal_cdf(std::abs(out.z)));
    return out;
}

Stars significance_stars(double p) {
    if (p < 0.001)
        return Stars::Three;
    if (p < 0.01)
        return Stars::Two;
    if (p < 0.05)
        return Stars::One;
    return Stars::None;
}

std::string_view stars_text(Stars s) {
    switch (s) {
    case Stars::None: return "";
    case Stars::One: return "*";
    case Stars::Two: return "**";
    case Stars::Three: return "***";
    }
    return "";
}

std::vector<std::pair<std::string, double>>
preprocess_raw_rt(std::span<const RtTrial> trials, double lo_ms,
                  double hi_ms) {
    std::map<std::string, std::pair<double, std::size_t>> sums;
    for (const auto& t : trials) {
        if (t.rt_ms < lo_ms || t.rt_ms > hi_ms)
            continue;
        auto& [sum, count] = sums[t.word];
        sum += t.rt_ms;
        ++count;
    }
    std::vector<std::pair<std::string, double>> out;
    out.reserve(sums.size());
    for (const auto& [word, sc] : sums)
        out.emplace_back(word, sc.first / static_cast<double>(sc.second));
    return out;
}

RegressionModel fit_ols(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw StatsError("fit_ols: need matching vectors of length >= 2");

    const auto n = static_cast<double>(x.size());
    long double mx = 0.0L, my = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;

    long double sxx = 0.0L, sxy = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double dx = x[i] - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
    }
    if (sxx == 0.0L)
        throw StatsError("fit_ols: degenerate predictor");

    RegressionModel m;
    m.slope = static_cast<double>(sxy / sxx);
    m.intercept = static_cast<double>(my - (sxy / sxx) * mx);
    return m;
}

ScoreResult predict_and_score(const RegressionModel& model,
                              std::span<const double> x,
                              std::span<const double> y) {
    if (x.size() != y.size() || x.empty())
        throw StatsError("predict_and_score: need matching non-empty vectors");

    ScoreResult out;
    out.predictions.reserve(x.size());
    for (const auto v : x)
        out.predictions.push_back(
            std::clamp(model.slope * v + model.intercept, 0.0, 1.0));

    long double my = 0.0L;
    for (const auto v : y)
        my += v;
    my /= static_cast<double>(y.size());

    long double ss_res = 0.0L, ss_tot = 0.0L;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const long double res = y[i] - out.predictions[i];
        const long double dev = y[i] - my;
        ss_res += res * res;
        ss_tot += dev * dev;
    }
    if (ss_tot == 0.0L)
        throw StatsError("predict_and_score: zero rating variance");
    out.r2 = static_cast<double>(1.0L - ss_res / ss_tot);
    try {
        out.r = pearson(out.predictions, y);
    } catch (const StatsError&) {
        // constant predictions after clipping
        out.r = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

} // namespace subfreq
