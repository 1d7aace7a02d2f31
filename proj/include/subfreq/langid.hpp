#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace subfreq {

struct LangGuess {
    std::string language; // BCP-47-ish code, or "unknown"
    double confidence = 0.0;
};

/// Injected language-identification capability. Implementations must be
/// safe for concurrent calls (or wrapped in a serializing adapter).
class LanguageIdentifier {
public:
    virtual ~LanguageIdentifier() = default;
    virtual LangGuess identify(std::string_view line) const = 0;
};

/// Returns the identifier's top label and confidence for a non-empty
/// line. Identifier failure yields {"unknown", 0}.
LangGuess identify_line(std::string_view line, const LanguageIdentifier& id);

/// Built-in character-script + stopword classifier, so the pipeline runs
/// with zero external models. Covers en, es, id, fr, de, pt by stopword
/// profile and ja, zh, ko, ru, el, ar, he, th, hi by script.
class BuiltinIdentifier : public LanguageIdentifier {
public:
    LangGuess identify(std::string_view line) const override;
};

std::shared_ptr<const LanguageIdentifier> builtin_identifier();

} // namespace subfreq
