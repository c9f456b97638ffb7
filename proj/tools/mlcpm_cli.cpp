// Command-line front end. Talks to the library exclusively through the C
// interface so the binary doubles as a smoke test for it.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mlcpm.h"

namespace {

struct CommonArgs {
    std::string input;
    int k = 3;
    int m = 1;
    std::string adjacency = "k-1";
    std::string format = "plain";
    std::string output;
};

void add_input(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("input", args.input, "network file (sectioned multiplex edge list)")
        ->required();
    cmd->add_option("-o,--output", args.output, "write to this file instead of stdout");
}

void add_thresholds(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-k", args.k, "minimum clique size (>= 2)")->capture_default_str();
    cmd->add_option("-m", args.m, "minimum number of common layers (>= 1)")
        ->capture_default_str();
}

int report_failure(int status) {
    std::cerr << "mlcpm: " << mlcpm_status_name(status) << " error: " << mlcpm_last_error()
              << "\n";
    return status;
}

int emit(const std::string& output, const char* text) {
    if (output.empty()) {
        std::cout << text;
        return MLCPM_OK;
    }
    std::ofstream out(output, std::ios::binary);
    out << text;
    out.flush();
    if (!out) {
        std::cerr << "mlcpm: io error: cannot write " << output << "\n";
        return MLCPM_ERR_IO;
    }
    return MLCPM_OK;
}

int run_detect(const CommonArgs& args, bool oracle) {
    mlcpm_network* net = nullptr;
    if (int status = mlcpm_network_read_file(args.input.c_str(), &net); status != MLCPM_OK) {
        return report_failure(status);
    }
    mlcpm_result* result = nullptr;
    int status = oracle ? mlcpm_detect_oracle(net, args.k, args.m, args.adjacency.c_str(), &result)
                        : mlcpm_detect(net, args.k, args.m, args.adjacency.c_str(), &result);
    if (status != MLCPM_OK) {
        mlcpm_network_free(net);
        return report_failure(status);
    }
    char* text = nullptr;
    status = mlcpm_result_render(result, args.format.c_str(), &text);
    if (status == MLCPM_OK) {
        status = emit(args.output, text);
        mlcpm_free_string(text);
    } else {
        report_failure(status);
    }
    mlcpm_result_free(result);
    mlcpm_network_free(net);
    return status;
}

int run_cliques(const CommonArgs& args) {
    mlcpm_network* net = nullptr;
    if (int status = mlcpm_network_read_file(args.input.c_str(), &net); status != MLCPM_OK) {
        return report_failure(status);
    }
    mlcpm_result* result = nullptr;
    int status = mlcpm_enumerate_cliques(net, args.k, args.m, &result);
    if (status != MLCPM_OK) {
        mlcpm_network_free(net);
        return report_failure(status);
    }
    char* text = nullptr;
    status = mlcpm_result_render(result, args.format.c_str(), &text);
    if (status == MLCPM_OK) {
        status = emit(args.output, text);
        mlcpm_free_string(text);
    } else {
        report_failure(status);
    }
    mlcpm_result_free(result);
    mlcpm_network_free(net);
    return status;
}

int run_stats(const CommonArgs& args) {
    mlcpm_network* net = nullptr;
    if (int status = mlcpm_network_read_file(args.input.c_str(), &net); status != MLCPM_OK) {
        return report_failure(status);
    }
    char* text = nullptr;
    int status = mlcpm_network_render_stats(net, &text);
    if (status == MLCPM_OK) {
        status = emit(args.output, text);
        mlcpm_free_string(text);
    } else {
        report_failure(status);
    }
    mlcpm_network_free(net);
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"overlapping communities in edge-labeled multigraphs"};
    app.set_version_flag("--version", std::string(mlcpm_version()));
    app.require_subcommand(1);

    CommonArgs detect_args;
    CLI::App* detect = app.add_subcommand("detect", "find overlapping layer-homogeneous communities");
    add_input(detect, detect_args);
    add_thresholds(detect, detect_args);
    detect->add_option("--adjacency", detect_args.adjacency, "clique overlap rule")
        ->check(CLI::IsMember({"k-1", "k"}))
        ->capture_default_str();
    detect->add_option("--format", detect_args.format, "output format")
        ->check(CLI::IsMember({"plain", "structured", "dot"}))
        ->capture_default_str();

    CommonArgs oracle_args;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "brute-force reference detection (small networks only)");
    add_input(oracle, oracle_args);
    add_thresholds(oracle, oracle_args);
    oracle->add_option("--adjacency", oracle_args.adjacency, "clique overlap rule")
        ->check(CLI::IsMember({"k-1", "k"}))
        ->capture_default_str();
    oracle->add_option("--format", oracle_args.format, "output format")
        ->check(CLI::IsMember({"plain", "structured", "dot"}))
        ->capture_default_str();

    CommonArgs cliques_args;
    CLI::App* cliques = app.add_subcommand("cliques", "enumerate maximal cliques only");
    add_input(cliques, cliques_args);
    add_thresholds(cliques, cliques_args);
    cliques->add_option("--format", cliques_args.format, "output format")
        ->check(CLI::IsMember({"plain", "structured"}))
        ->capture_default_str();

    CommonArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "summarize a network file");
    add_input(stats, stats_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : MLCPM_ERR_USAGE;
    }

    if (detect->parsed()) {
        return run_detect(detect_args, false);
    }
    if (oracle->parsed()) {
        return run_detect(oracle_args, true);
    }
    if (cliques->parsed()) {
        return run_cliques(cliques_args);
    }
    return run_stats(stats_args);
}
