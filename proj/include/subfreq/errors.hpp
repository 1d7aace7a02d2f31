#pragma once

#include <stdexcept>
#include <string>

namespace subfreq {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ManifestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VttError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StatsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plugin broke the one-line-in one-line-out contract.
struct ProtocolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace subfreq
