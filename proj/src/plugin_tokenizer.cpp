#include "subfreq/plugin_tokenizer.hpp"
#include "subfreq/errors.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>

namespace subfreq {

PluginProcess::PluginProcess(const PluginSpec& spec)
    : timeout_ms_(spec.timeout_ms) {
    if (spec.command.empty())
        throw ConfigError("plugin command is empty");

    int in_pipe[2], out_pipe[2];
    if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0)
        throw ProtocolError("cannot create plugin pipes");

    const int pid = fork();
    if (pid < 0)
        throw ProtocolError("cannot fork plugin process");

    if (pid == 0) {
        dup2(in_pipe[0], STDIN_FILENO);
        dup2(out_pipe[1], STDOUT_FILENO);
        close(in_pipe[0]);
        close(in_pipe[1]);
        close(out_pipe[0]);
        close(out_pipe[1]);
        std::vector<char*> argv;
        for (const auto& a : spec.command)
            argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        execvp(argv[0], argv.data());
        _exit(127);
    }

    close(in_pipe[0]);
    close(out_pipe[1]);
    pid_ = pid;
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
    signal(SIGPIPE, SIG_IGN);

    Status status = Status::Ok;
    const auto handshake = read_line(status);
    if (status != Status::Ok || handshake.rfind("TOKENIZER", 0) != 0) {
        shutdown();
        throw ProtocolError("plugin handshake failed (expected "
                            "'TOKENIZER <variant-list>')");
    }
    std::istringstream hs(handshake);
    std::string word;
    hs >> word; // "TOKENIZER"
    while (hs >> word)
        variants_.push_back(word);
}

PluginProcess::~PluginProcess() { shutdown(); }

void PluginProcess::shutdown() noexcept {
    if (to_child_ >= 0) {
        close(to_child_);
        to_child_ = -1;
    }
    if (from_child_ >= 0) {
        close(from_child_);
        from_child_ = -1;
    }
    if (pid_ > 0) {
        int status = 0;
        int reaped = 0;
        for (int i = 0; i < 50; ++i) {
            reaped = waitpid(pid_, &status, WNOHANG);
            if (reaped != 0)
                break;
            usleep(10'000);
        }
        if (reaped == 0) {
            kill(pid_, SIGKILL);
            waitpid(pid_, &status, 0);
        }
        pid_ = -1;
    }
}

bool PluginProcess::supports(Variant v) const {
    const auto name = variant_name(v);
    for (const auto& s : variants_)
        if (s == name)
            return true;
    return false;
}

std::string PluginProcess::read_line(Status& status) {
    status = Status::Ok;
    while (true) {
        const auto nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            auto line = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            return line;
        }

        pollfd pfd{from_child_, POLLIN, 0};
        const int ready = poll(&pfd, 1, timeout_ms_);
        if (ready == 0) {
            status = Status::TimedOut;
            return {};
        }
        if (ready < 0) {
            status = Status::Crashed;
            return {};
        }
        char chunk[4096];
        const auto n = read(from_child_, chunk, sizeof chunk);
        if (n > 0) {
            buffer_.append(chunk, static_cast<std::size_t>(n));
            continue;
        }
        // EOF: a clean exit mid-protocol is a contract violation, an
        // abnormal one is a crash (document failed, pipeline continues)
        int wait_status = 0;
        int reaped = 0;
        for (int i = 0; i < 50; ++i) {
            reaped = waitpid(pid_, &wait_status, WNOHANG);
            if (reaped != 0)
                break;
            usleep(10'000);
        }
        if (reaped == pid_) {
            pid_ = -1;
            if (!WIFEXITED(wait_status) || WEXITSTATUS(wait_status) != 0) {
                status = Status::Crashed;
                return {};
            }
        }
        throw ProtocolError("plugin closed its output mid-protocol "
                            "(response line count mismatch)");
    }
}

PluginProcess::Status
PluginProcess::tokenize_line(const std::string& line,
                             std::vector<std::string>& tokens_out) {
    tokens_out.clear();
    std::string payload = line;
    payload.push_back('\n');
    std::size_t written = 0;
    while (written < payload.size()) {
        const auto n = write(to_child_, payload.data() + written,
                             payload.size() - written);
        if (n < 0) {
            if (errno == EINTR)
                continue;
            return Status::Crashed;
        }
        written += static_cast<std::size_t>(n);
    }

    Status status = Status::Ok;
    const auto response = read_line(status);
    if (status != Status::Ok)
        return status;

    std::istringstream ss(response);
    std::string tok;
    while (ss >> tok)
        tokens_out.push_back(tok);
    return Status::Ok;
}

PluginRunResult run_plugin_tokenizer(PluginProcess& plugin,
                                     const std::vector<std::string>& lines,
                                     Variant variant) {
    PluginRunResult out;
    if (!plugin.supports(variant)) {
        throw ConfigError("plugin does not support variant '" +
                          std::string(variant_name(variant)) + "'");
    }
    std::vector<std::string> toks;
    for (const auto& line : lines) {
        const auto status = plugin.tokenize_line(line, toks);
        if (status != PluginProcess::Status::Ok) {
            out.failed = true;
            out.failure = status == PluginProcess::Status::TimedOut
                              ? "plugin timeout"
                              : "plugin crashed";
            out.tokens.clear();
            return out;
        }
        for (auto& t : toks)
            out.tokens.push_back(normalize(t));
    }
    return out;
}

} // namespace subfreq
