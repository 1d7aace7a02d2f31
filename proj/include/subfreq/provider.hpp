#pragma once

#include "subfreq/freq_table.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace subfreq {

enum class FallbackPolicy { Laplace, MinFrequency, MaxValue };
enum class Transform { Log, Negate, Identity };
enum class MultiwordRule { Min, Max };

FallbackPolicy policy_from_name(std::string_view name);
Transform transform_from_name(std::string_view name);
MultiwordRule multiword_from_name(std::string_view name);

/// A frequency or metric source with a smoothing-and-fallback policy and
/// a multiword combination rule.
///
/// laplace       f(w) = (count(w)+1) / (#tokens + #types), count 0 when
///               missing; requires known totals.
/// min-frequency missing words get the corpus minimum value; for lists
///               published without token counts.
/// max-value     missing words get the corpus maximum; for inverted
///               metrics, only valid together with the negate transform.
class FrequencyProvider {
public:
    static FrequencyProvider
    from_table(std::shared_ptr<const FrequencyTable> table,
               Transform transform = Transform::Log,
               MultiwordRule rule = MultiwordRule::Min);

    static FrequencyProvider from_list(ExternalList list,
                                       FallbackPolicy policy,
                                       Transform transform,
                                       MultiwordRule rule);

    FallbackPolicy policy() const { return policy_; }
    Transform transform() const { return transform_; }
    MultiwordRule multiword_rule() const { return rule_; }

    /// Laplace-smoothed frequency, in (0, 1). Requires the laplace
    /// policy; throws TableError on an undefined (empty) table.
    double smoothed_frequency(std::string_view word) const;

    /// Untransformed per-token value with the fallback applied.
    double base_value(std::string_view word) const;

    /// Tokenizes the item, applies the per-token fallback, combines with
    /// the multiword rule and applies the transform. Sentinel tokens are
    /// excluded from lookups unless include_special. Returns nothing when
    /// the item tokenizes to no usable token (caller records a warning).
    std::optional<double> value_for_item(std::string_view item,
                                         bool include_special = false) const;

    using ItemTokenizer =
        std::function<std::vector<std::string>(std::string_view)>;

    /// As above with a caller-supplied tokenizer (e.g. a plugin-backed
    /// segmenter for languages without space-separated words).
    std::optional<double> value_for_item(std::string_view item,
                                         const ItemTokenizer& tokenizer,
                                         bool include_special) const;

private:
    FrequencyProvider() = default;

    std::shared_ptr<const FrequencyTable> table_;
    ExternalList list_;
    bool from_list_ = false;
    FallbackPolicy policy_ = FallbackPolicy::Laplace;
    Transform transform_ = Transform::Log;
    MultiwordRule rule_ = MultiwordRule::Min;
};

} // namespace subfreq
