#ifndef DISJREL_TESTS_CLI_UTIL_HPP
#define DISJREL_TESTS_CLI_UTIL_HPP

// Helpers for driving the installed CLI binary in tests. The binary path
// comes in through the DISJREL_CLI_PATH compile definition.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace cli_test {

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

inline const std::string& cli_path() {
    static const std::string path = DISJREL_CLI_PATH;
    return path;
}

inline std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("disjrel-tests-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

inline std::filesystem::path write_file(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    return path;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs a full shell command line with stdout/stderr captured.
inline CliResult run_shell(const std::string& command_line, const std::string& input = "") {
    static int call = 0;
    const auto base = scratch_dir() / ("io" + std::to_string(call++));
    const auto in_path = base.string() + ".in";
    const auto out_path = base.string() + ".out";
    const auto err_path = base.string() + ".err";
    {
        std::ofstream in(in_path);
        in << input;
    }
    const std::string full =
        "( " + command_line + " ) < " + in_path + " > " + out_path + " 2> " + err_path;
    const int raw = std::system(full.c_str());

    CliResult result;
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

// Runs the CLI once: `disjrel <args>` with the given stdin.
inline CliResult run_cli(const std::string& args, const std::string& input = "") {
    return run_shell("'" + cli_path() + "' " + args, input);
}

// `disjrel <gen_args> | disjrel <consumer_args>`, the documented pipe use.
inline CliResult run_pipe(const std::string& producer_args, const std::string& consumer_args) {
    return run_shell("'" + cli_path() + "' " + producer_args + " | '" + cli_path() + "' " +
                     consumer_args);
}

} // namespace cli_test

#endif
