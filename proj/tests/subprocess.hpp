#pragma once

// popen-based runner for exercising the CLI binary from tests.

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr, merged
};

inline CommandResult run_command(const std::string& cmd) {
    CommandResult res;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.output.append(buf.data(), got);
    }
    int status = pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    return res;
}
