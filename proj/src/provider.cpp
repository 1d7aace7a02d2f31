#include "subfreq/provider.hpp"
#include "subfreq/errors.hpp"

#include <algorithm>
#include <cmath>

namespace subfreq {

FallbackPolicy policy_from_name(std::string_view name) {
    if (name == "laplace")
        return FallbackPolicy::Laplace;
    if (name == "min-frequency")
        return FallbackPolicy::MinFrequency;
    if (name == "max-value")
        return FallbackPolicy::MaxValue;
    throw ConfigError("unknown policy: " + std::string(name));
}

Transform transform_from_name(std::string_view name) {
    if (name == "log")
        return Transform::Log;
    if (name == "negate")
        return Transform::Negate;
    if (name == "identity")
        return Transform::Identity;
    throw ConfigError("unknown transform: " + std::string(name));
}

MultiwordRule multiword_from_name(std::string_view name) {
    if (name == "min")
        return MultiwordRule::Min;
    if (name == "max")
        return MultiwordRule::Max;
    throw ConfigError("unknown multiword rule: " + std::string(name));
}

FrequencyProvider
FrequencyProvider::from_table(std::shared_ptr<const FrequencyTable> table,
                              Transform transform, MultiwordRule rule) {
    FrequencyProvider p;
    p.table_ = std::move(table);
    p.policy_ = FallbackPolicy::Laplace;
    p.transform_ = transform;
    p.rule_ = rule;
    return p;
}

FrequencyProvider FrequencyProvider::from_list(ExternalList list,
                                               FallbackPolicy policy,
                                               Transform transform,
                                               MultiwordRule rule) {
    if (policy == FallbackPolicy::Laplace &&
        (!list.n_tokens || !list.n_types))
        throw ConfigError(
            "laplace policy requires #tokens and #types in the list header");
    if (policy != FallbackPolicy::Laplace && list.values.empty())
        throw ConfigError("fallback policy requires a non-empty list");
    if (policy == FallbackPolicy::MaxValue && transform != Transform::Negate)
        throw ConfigError("max-value fallback is only valid with negate");

    FrequencyProvider p;
    p.list_ = std::move(list);
    p.from_list_ = true;
    p.policy_ = policy;
    p.transform_ = transform;
    p.rule_ = rule;
    return p;
}

double FrequencyProvider::smoothed_frequency(std::string_view word) const {
    if (policy_ != FallbackPolicy::Laplace)
        throw ConfigError("smoothed_frequency requires the laplace policy");

    std::uint64_t count = 0, tokens = 0, types = 0;
    if (from_list_) {
        tokens = *list_.n_tokens;
        types = *list_.n_types;
        const auto it = list_.values.find(std::string(word));
        if (it != list_.values.end())
            count = static_cast<std::uint64_t>(it->second);
    } else {
        tokens = table_->n_tokens;
        types = table_->n_types;
        if (const auto* row = table_->find(word))
            count = row->count;
    }
    if (tokens + types == 0)
        throw TableError("undefined table: #tokens + #types is zero");
    return (static_cast<double>(count) + 1.0) /
           static_cast<double>(tokens + types);
}

double FrequencyProvider::base_value(std::string_view word) const {
    switch (policy_) {
    case FallbackPolicy::Laplace:
        return smoothed_frequency(word);
    case FallbackPolicy::MinFrequency: {
        const auto it = list_.values.find(std::string(word));
        return it != list_.values.end() ? it->second : list_.min_value;
    }
    case FallbackPolicy::MaxValue: {
        const auto it = list_.values.find(std::string(word));
        return it != list_.values.end() ? it->second : list_.max_value;
    }
    }
    throw ConfigError("unreachable policy");
}

std::optional<double>
FrequencyProvider::value_for_item(std::string_view item,
                                  bool include_special) const {
    // Rating items are looked up as written (no PII masking): a digit
    // item is simply absent from the table and takes the fallback value.
    return value_for_item(
        item,
        [](std::string_view text) {
            auto toks = scan_line(text);
            for (auto& t : toks)
                t = normalize(t);
            return toks;
        },
        include_special);
}

std::optional<double>
FrequencyProvider::value_for_item(std::string_view item,
                                  const ItemTokenizer& tokenizer,
                                  bool include_special) const {
    auto toks = tokenizer(item);
    if (!include_special)
        std::erase_if(toks, [](const std::string& t) {
            return tokens::is_sentinel(t);
        });
    if (toks.empty())
        return std::nullopt;

    double combined = base_value(toks.front());
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const double v = base_value(toks[i]);
        combined = rule_ == MultiwordRule::Min ? std::min(combined, v)
                                               : std::max(combined, v);
    }
    switch (transform_) {
    case Transform::Log: return std::log(combined);
    case Transform::Negate: return -combined;
    case Transform::Identity: return combined;
    }
    return std::nullopt;
}

} // namespace subfreq
