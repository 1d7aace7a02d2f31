#pragma once

#include "subfreq/provider.hpp"
#include "subfreq/stats.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace subfreq {

enum class DatasetKind { Ldt, Familiarity, Complexity };

DatasetKind dataset_kind_from_name(std::string_view name);
std::string_view dataset_kind_name(DatasetKind k);

struct EvalItem {
    std::string text; // word or phrase
    double rating = 0.0;
    std::string context; // optional
};

struct EvalDataset {
    std::string name;
    std::string language;
    DatasetKind kind = DatasetKind::Familiarity;
    std::vector<EvalItem> items;

    void validate() const; // non-empty, finite ratings, complexity in [0,1]
};

/// `item<TAB>rating[<TAB>context]` with an optional header row.
EvalDataset load_dataset(const std::filesystem::path& path,
                         const std::string& name, const std::string& language,
                         DatasetKind kind);

/// `item<TAB>rt_ms[<TAB>participant]`, preprocessed into per-word means
/// over trials within [lo, hi] milliseconds.
EvalDataset load_raw_rt_dataset(const std::filesystem::path& path,
                                const std::string& name,
                                const std::string& language,
                                double lo_ms = 200.0, double hi_ms = 2000.0);

struct CorrelationResult {
    double r = 0.0;
    std::size_t n = 0;
    double coverage = 0.0; // fraction of items that yielded a value
};

/// Pairs value_for_item with ratings over the items that tokenize to a
/// usable value (missing words enter through the fallback policy).
CorrelationResult correlate(const FrequencyProvider& provider,
                            const EvalDataset& dataset,
                            bool include_special = false);

struct ReportRow {
    std::string provider;
    double r = 0.0;
    std::size_t n = 0; // pairwise-complete items vs the baseline
    double p_vs_baseline = 1.0;
    Stars stars = Stars::None;
    double coverage = 0.0;
};

struct ComparisonReport {
    std::string dataset;
    std::string baseline;
    std::vector<ReportRow> rows;
};

/// Compares each provider against the baseline with the dependent-
/// correlation test. Each comparison uses the item intersection where
/// both providers yield values, so the shared-variable assumption holds.
ComparisonReport
compare_providers(const std::vector<std::pair<std::string,
                                              const FrequencyProvider*>>& providers,
                  const std::string& baseline_name,
                  const EvalDataset& dataset, bool include_special = false);

void write_report_tsv(const ComparisonReport& report,
                      const std::filesystem::path& path);
void write_report_json(const ComparisonReport& report,
                       const std::filesystem::path& path);

struct LcpResult {
    std::string provider;
    RegressionModel model;
    double r2 = 0.0;
    double r = 0.0;
    std::size_t n = 0;
};

/// Fits rating = a * value + b on the trial split, predicts on the test
/// split with predictions clipped to [0, 1], reports R^2 and correlation.
LcpResult evaluate_lcp(const std::string& provider_name,
                       const FrequencyProvider& provider,
                       const EvalDataset& trial, const EvalDataset& test,
                       bool include_special = false,
                       std::vector<std::pair<std::string, double>>*
                           predictions_out = nullptr);

} // namespace subfreq
