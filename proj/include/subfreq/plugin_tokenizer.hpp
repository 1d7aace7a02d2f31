#pragma once

#include "subfreq/textnorm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace subfreq {

struct PluginSpec {
    std::vector<std::string> command; // argv; argv[0] is the executable
    int timeout_ms = 30000;
};

/// One external tokenizer process speaking the line protocol:
/// on startup the plugin prints `TOKENIZER <variant-list>`; afterwards
/// each request is one UTF-8 line on stdin and each response one line of
/// space-separated tokens on stdout. A process serves one document at a
/// time and is never shared across documents concurrently.
class PluginProcess {
public:
    explicit PluginProcess(const PluginSpec& spec);
    ~PluginProcess();

    PluginProcess(const PluginProcess&) = delete;
    PluginProcess& operator=(const PluginProcess&) = delete;

    const std::vector<std::string>& variants() const { return variants_; }
    bool supports(Variant v) const;

    enum class Status { Ok, Crashed, TimedOut };

    /// Sends one line, reads one response line.
    /// Crashed/TimedOut mark the current document failed; a clean exit or
    /// stream close mid-protocol throws ProtocolError.
    Status tokenize_line(const std::string& line,
                         std::vector<std::string>& tokens_out);

    bool alive() const { return pid_ > 0; }

private:
    std::string read_line(Status& status);
    void shutdown() noexcept;

    int pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    int timeout_ms_ = 30000;
    std::string buffer_;
    std::vector<std::string> variants_;
};

struct PluginRunResult {
    bool failed = false; // crash or timeout; pipeline skips the document
    std::string failure;
    std::vector<std::string> tokens;
};

/// Runs a whole document through a plugin process: one request per line,
/// order-preserving, sentinel-lossless; responses are normalized
/// (NFKC + lowercase) afterwards.
PluginRunResult run_plugin_tokenizer(PluginProcess& plugin,
                                     const std::vector<std::string>& lines,
                                     Variant variant);

} // namespace subfreq
