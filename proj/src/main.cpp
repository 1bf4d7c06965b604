#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laxg2/errors.hpp"
#include "laxg2/report.hpp"

namespace {

// Exit codes: 0 every check passed, 1 some check failed (or the kernel
// tripped an internal assertion), 2 bad usage or configuration.
constexpr int kOk = 0;
constexpr int kChecksFailed = 1;
constexpr int kBadConfig = 2;

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw laxg2::ConfigError("degree range must look like lo:hi, got '" + text + "'");
    try {
        const int lo = std::stoi(text.substr(0, colon));
        const int hi = std::stoi(text.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        throw laxg2::ConfigError("degree range must look like lo:hi, got '" + text + "'");
    }
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw laxg2::ConfigError("cannot write to '" + path + "'");
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the matrix-current algebra construction"};
    app.require_subcommand(1);

    std::string config_path, out_path, suites_csv, mrange = "-3:3";
    std::uint64_t seed = 20260821;
    int trials = 50;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites, emit a JSON report");
    verify->add_option("--config", config_path, "configuration file")->required();
    verify->add_option("--suites", suites_csv, "comma-separated suite names (default: all)");
    verify->add_option("--seed", seed, "random seed for the sampled identities");
    verify->add_option("--trials", trials, "instances per sampled identity");
    verify->add_option("--out", out_path, "report path (default: stdout)");

    CLI::App* table = app.add_subcommand("table", "print graded dimensions over a degree range");
    table->add_option("--config", config_path, "configuration file")->required();
    table->add_option("--mrange", mrange, "degree range lo:hi");

    CLI::App* fixture = app.add_subcommand("fixture", "emit graded bases and the corrective form");
    fixture->add_option("--config", config_path, "configuration file")->required();
    fixture->add_option("--mrange", mrange, "degree range lo:hi");
    fixture->add_option("--out", out_path, "fixture path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadConfig;
    }

    try {
        const laxg2::RunConfig cfg = laxg2::load_config(config_path);

        if (verify->parsed()) {
            std::vector<std::string> suites =
                suites_csv.empty() ? laxg2::suite_names() : split_csv(suites_csv);
            const auto records = laxg2::run_suites(cfg, suites, seed, trials);
            write_out(out_path, laxg2::render_report(cfg, suites, seed, trials, records));
            for (const auto& r : records)
                if (!r.pass) return kChecksFailed;
            return kOk;
        }
        if (table->parsed()) {
            const auto [lo, hi] = parse_range(mrange);
            std::cout << laxg2::render_table(cfg, laxg2::dimension_table(cfg, lo, hi));
            return kOk;
        }
        if (fixture->parsed()) {
            const auto [lo, hi] = parse_range(mrange);
            write_out(out_path, laxg2::render_fixture(cfg, lo, hi));
            return kOk;
        }
    } catch (const laxg2::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadConfig;
    } catch (const laxg2::InvalidGrading& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadConfig;
    } catch (const laxg2::Error& e) {
        std::cerr << "verification aborted: " << e.what() << "\n";
        return kChecksFailed;
    }
    return kBadConfig;
}
