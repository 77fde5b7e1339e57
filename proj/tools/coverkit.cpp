#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coverkit/harness/scenario.hpp"
#include "coverkit/harness/server.hpp"
#include "coverkit/harness/session.hpp"

namespace {

std::atomic<bool> g_stop{false};

void on_signal(int) {
    g_stop.store(true);
}

int run(const std::string& script, const std::string& out_path) {
    std::ifstream in(script, std::ios::binary);
    if (!in) {
        std::cerr << "coverkit: cannot open " << script << "\n";
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();
    std::vector<std::string> dumps;
    try {
        dumps = coverkit::run_scenario(coverkit::parse_scenario(text.str()));
    } catch (const coverkit::ScenarioError& e) {
        std::cerr << script << ":" << e.line() << ": " << coverkit::to_string(e.code()) << ": " << e.what() << "\n";
        return 1;
    }
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "coverkit: cannot write " << out_path << "\n";
            return 1;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    for (const std::string& d : dumps) out << d;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverkit: cover-based direct manipulation engine"};
    app.require_subcommand(1);

    std::string script;
    std::string out_path;
    CLI::App* run_cmd = app.add_subcommand("run", "Execute a scenario script and print its dumps");
    run_cmd->add_option("script", script, "Scenario file")->required();
    run_cmd->add_option("--out", out_path, "Write dumps to this file instead of stdout");

    bool use_stdio = false;
    std::uint16_t port = 0;
    CLI::App* serve_cmd = app.add_subcommand("serve", "Serve the line protocol");
    auto* stdio_opt = serve_cmd->add_flag("--stdio", use_stdio, "Use standard input and output");
    serve_cmd->add_option("--port", port, "TCP port on 127.0.0.1")->excludes(stdio_opt);

    CLI11_PARSE(app, argc, argv);

    if (*run_cmd) return run(script, out_path);

    if (use_stdio || port == 0) {
        coverkit::serve_stream(std::cin, std::cout);
        return 0;
    }
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::atomic<std::uint16_t> bound{0};
    std::cerr << "coverkit: serving on 127.0.0.1:" << port << "\n";
    return coverkit::serve_tcp(port, g_stop, &bound);
}
