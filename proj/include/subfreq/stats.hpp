#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace subfreq {

/// Pearson product-moment correlation. Requires |x| = |y| >= 3 and
/// nonzero variance on both sides; throws StatsError otherwise.
double pearson(std::span<const double> x, std::span<const double> y);

/// Standard normal CDF via the complementary error function.
double normal_cdf(double x);

struct SteigerResult {
    double z = 0.0;
    double p = 1.0;
};

/// Test for the difference between two dependent correlations sharing one
/// variable (r12 = corr(x1,y), r13 = corr(x2,y), r23 = corr(x1,x2)):
///   z1 = atanh(r12), z2 = atanh(r13)
///   rbar2 = (r12^2 + r13^2) / 2
///   f = min(1, (1 - r23) / (2 (1 - rbar2)))
///   h = (1 - f rbar2) / (1 - rbar2)
///   Z = (z1 - z2) sqrt((n - 3) / (2 (1 - r23) h))
/// Two-tailed p = 2 (1 - Phi(|Z|)). Requires |r| < 1 and n >= 4.
SteigerResult steiger_test(double r12, double r13, double r23, std::size_t n);

enum class Stars { None, One, Two, Three };

/// Significance stars: *** p < 0.001, ** p < 0.01, * p < 0.05.
Stars significance_stars(double p);
std::string_view stars_text(Stars s);

struct RtTrial {
    std::string word;
    double rt_ms = 0.0;
};

/// Drops reaction times outside [lo_ms, hi_ms] (inclusive), groups by
/// word, returns per-word means sorted by word. Words with no surviving
/// trials are dropped.
std::vector<std::pair<std::string, double>>
preprocess_raw_rt(std::span<const RtTrial> trials, double lo_ms = 200.0,
                  double hi_ms = 2000.0);

struct RegressionModel {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares of y on x. Requires >= 2 distinct x values.
RegressionModel fit_ols(std::span<const double> x, std::span<const double> y);

struct ScoreResult {
    double r2 = 0.0;
    double r = 0.0;
    std::vector<double> predictions; // clipped to [0, 1]
};

/// Predictions clipped to [0, 1]; R^2 = 1 - SS_res/SS_tot on the test
/// ratings; r = pearson(predictions, ratings).
ScoreResult predict_and_score(const RegressionModel& model,
                              std::span<const double> x,
                              std::span<const double> y);

} // namespace subfreq
