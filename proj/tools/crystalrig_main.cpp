// Command-line surface: convert / check / apply / verify / enumerate over
// the JSON document format.  Exit codes: 0 success, 1 invalid input,
// 2 annihilation, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crystalrig/bijection.hpp"
#include "crystalrig/document.hpp"
#include "crystalrig/growth.hpp"
#include "crystalrig/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitAnnihilated = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

std::size_t node_limit_from_env() {
    if (const char* env = std::getenv("CRYSTAL_RIG_NODE_LIMIT")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("CRYSTAL_RIG_NODE_LIMIT is not a number");
        }
    }
    return crystalrig::BfsOptions{}.node_limit;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace crystalrig;

    CLI::App app{"conversions, validation and exhaustive self-checks for rank-n crystal data"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    bool pretty = false;

    auto* cmd_convert = app.add_subcommand("convert", "convert between mlt, seq and rc documents");
    std::string target;
    cmd_convert->add_option("--to", target, "target kind: mlt, seq or rc")->required();
    cmd_convert->add_option("input", input, "input file or - for stdin");
    cmd_convert->add_option("-o,--output", output, "output file or - for stdout");
    cmd_convert->add_flag("--pretty", pretty, "human-readable output");

    auto* cmd_check = app.add_subcommand("check", "validate a document and report diagnostics");
    cmd_check->add_option("input", input, "input file or - for stdin");
    cmd_check->add_option("-o,--output", output, "output file or - for stdout");

    auto* cmd_apply = app.add_subcommand("apply", "fold crystal operators over a document");
    std::string ops_text;
    cmd_apply->add_option("--ops", ops_text, "operator tokens, e.g. \"f2 f1 e3\"")->required();
    cmd_apply->add_option("input", input, "input file or - for stdin");
    cmd_apply->add_option("-o,--output", output, "output file or - for stdout");
    cmd_apply->add_flag("--pretty", pretty, "human-readable output");

    auto* cmd_verify = app.add_subcommand("verify", "run the exhaustive cross-checks");
    int rank = 2;
    int depth = 4;
    cmd_verify->add_option("--n", rank, "rank")->required();
    cmd_verify->add_option("--depth", depth, "maximum operator count")->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "legal next partitions for a suffix");
    std::string suffix_path;
    int budget = 0;
    cmd_enum->add_option("--suffix", suffix_path, "JSON file {\"n\":..,\"partitions\":[..]}")->required();
    cmd_enum->add_option("--budget", budget, "maximum boxes to add")->required();
    cmd_enum->add_option("-o,--output", output, "output file or - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_convert) {
            Document doc = parse_document(read_input(input));
            Document converted = convert(doc, parse_kind(target));
            write_output(output, pretty ? pretty_document(converted)
                                        : serialize_document(converted) + "\n");
            return kExitOk;
        }
        if (*cmd_check) {
            write_output(output, check_report(read_input(input)) + "\n");
            return kExitOk;
        }
        if (*cmd_apply) {
            Document doc = parse_document(read_input(input));
            auto ops = parse_ops(ops_text);
            auto result = apply_ops(doc, ops);
            if (!result) {
                write_output(output, std::string("{\"kind\":\"zero\"}") + "\n");
                return kExitAnnihilated;
            }
            write_output(output, pretty ? pretty_document(*result)
                                        : serialize_document(*result) + "\n");
            return kExitOk;
        }
        if (*cmd_verify) {
            BfsOptions options;
            options.node_limit = node_limit_from_env();
            VerifyReport report = verify_crystal(rank, depth, options);
            std::cout << "nodes: " << report.nodes << "\n"
                      << "edges: " << report.edges << "\n"
                      << "checks: " << report.checks << "\n";
            if (!report.ok) {
                std::cout << "FAIL: " << report.first_failure << "\n";
                return kExitInvalid;
            }
            std::cout << "all checks passed\n";
            return kExitOk;
        }
        if (*cmd_enum) {
            nlohmann::json j = nlohmann::json::parse(read_input(suffix_path));
            int n = j.at("n").get<int>();
            std::vector<RiggedPartition> suffix;
            for (const auto& part : j.at("partitions")) {
                std::vector<RiggedString> strings;
                for (const auto& pair : part) strings.push_back({pair[0].get<int>(), pair[1].get<int>()});
                suffix.push_back(RiggedPartition(std::move(strings)));
            }
            auto nexts = enumerate_next(suffix, n, budget);
            nlohmann::ordered_json out;
            out["n"] = n;
            out["count"] = nexts.size();
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const auto& part : nexts) {
                nlohmann::ordered_json strings = nlohmann::ordered_json::array();
                for (const auto& s : part.strings) strings.push_back({s.length, s.rigging});
                list.push_back(std::move(strings));
            }
            out["partitions"] = std::move(list);
            write_output(output, out.dump() + "\n");
            return kExitOk;
        }
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
