// Command-line front end: theory/empirical grids, two-point histograms,
// grid differences, unitary-group verification, scaling-limit tables and the
// oracle self-test. Exit codes: 0 ok, 2 configuration, 3 input data,
// 4 failed check.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "triplecorr/config.hpp"
#include "triplecorr/grid_io.hpp"
#include "triplecorr/selfcheck.hpp"
#include "triplecorr/zeros.hpp"

namespace tc = triplecorr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitCheck = 4;

void add_config_flags(CLI::App* cmd, tc::EngineConfig& cfg) {
    cmd->add_option("--t", cfg.T, "height cutoff T");
    cmd->add_option("--prime-limit", cfg.prime_limit, "prime sieve limit");
    cmd->add_option("--em-depth", cfg.em_depth, "Euler-Maclaurin correction depth");
    cmd->add_option("--mask-band", cfg.mask_band, "half-width of the singular-line mask");
    cmd->add_option("--window", cfg.window, "grid window [0,window]^2");
    cmd->add_option("--step", cfg.step, "grid step");
    cmd->add_option("--bin", cfg.bin, "histogram bin width");
    cmd->add_option("--switch-radius", cfg.switch_radius,
                    "Laurent branch switch radius near s=1");
}

std::ostream& open_output(std::ofstream& file, const std::string& out_path) {
    if (out_path.empty()) return std::cout;
    file.open(out_path);
    if (!file) throw tc::ConfigError("cannot open output file: " + out_path);
    return file;
}

tc::CorrelationGrid load_grid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tc::ParseError("cannot open grid file: " + path);
    return tc::read_grid_csv(in);
}

int run(int argc, char** argv) {
    CLI::App app{"triple correlation of the Riemann zeros: theory, data, checks"};
    app.require_subcommand(1);

    tc::EngineConfig cfg;
    std::string out_path, zeros_path;

    auto* c_theory = app.add_subcommand("theory", "normalized theoretical density grid");
    add_config_flags(c_theory, cfg);
    c_theory->add_option("--out", out_path, "output file (default stdout)");

    auto* c_emp = app.add_subcommand("empirical", "triple-correlation grid from a zero table");
    add_config_flags(c_emp, cfg);
    c_emp->add_option("--zeros", zeros_path, "zero table path")->required();
    c_emp->add_option("--out", out_path, "output file (default stdout)");

    auto* c_two = app.add_subcommand("two-point", "pair-correlation histogram from a zero table");
    add_config_flags(c_two, cfg);
    c_two->add_option("--zeros", zeros_path, "zero table path")->required();
    c_two->add_option("--out", out_path, "output file (default stdout)");

    std::string grid_a, grid_b;
    auto* c_diff = app.add_subcommand("diff", "difference statistics of two grids");
    c_diff->add_option("grid_a", grid_a, "first grid CSV")->required();
    c_diff->add_option("grid_b", grid_b, "second grid CSV")->required();

    int rv_N = 5, rv_samples = 100;
    std::uint64_t rv_seed = 42;
    auto* c_rmt = app.add_subcommand("rmt-verify", "bracket-vs-determinant identity check");
    c_rmt->add_option("--n", rv_N, "matrix dimension N");
    c_rmt->add_option("--samples", rv_samples, "random triples");
    c_rmt->add_option("--seed", rv_seed, "random seed");

    double lv1 = 1.3, lv2 = 2.7;
    std::string t_list_str = "1e4,1e6,1e9";
    auto* c_limit = app.add_subcommand("limit", "scaled bracket against the sine-kernel limit");
    add_config_flags(c_limit, cfg);
    c_limit->add_option("v1", lv1, "first scaled coordinate")->required();
    c_limit->add_option("v2", lv2, "second scaled coordinate")->required();
    c_limit->add_option("t-list", t_list_str, "comma-separated ascending heights");

    auto* c_self = app.add_subcommand("selftest", "oracle-suite report");
    add_config_flags(c_self, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        cfg.validate();

        if (c_theory->parsed()) {
            const tc::PrimeTable table = tc::build_prime_table(cfg.prime_limit);
            tc::EulerMaclaurinParams em;
            em.bernoulli_depth = cfg.em_depth;
            tc::BracketDeps deps{table, em, 1e-6};
            const auto grid = tc::theory_grid(cfg.window, cfg.step, cfg.T, cfg.mask_band, deps);
            std::ofstream file;
            auto& out = open_output(file, out_path);
            tc::write_grid_csv(out, grid, {{"prime_limit", std::to_string(cfg.prime_limit)},
                                           {"mask_band", tc::format_double(cfg.mask_band)}});
            return kExitOk;
        }

        if (c_emp->parsed() || c_two->parsed()) {
            tc::ZeroDataset ds;
            try {
                ds = tc::load_zeros(zeros_path);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInput;
            }
            std::ofstream file;
            auto& out = open_output(file, out_path);
            if (c_two->parsed()) {
                const auto h = tc::empirical_two_point(ds, cfg.window, cfg.bin);
                tc::write_histogram_csv(out, h);
            } else {
                const auto h = tc::empirical_triple(ds, cfg.window, cfg.bin);
                const auto grid = tc::to_grid(h, cfg.mask_band);
                tc::write_grid_csv(out, grid,
                                   {{"bin", tc::format_double(cfg.bin)},
                                    {"mask_band", tc::format_double(cfg.mask_band)},
                                    {"zeros", std::to_string(ds.count)}});
            }
            return kExitOk;
        }

        if (c_diff->parsed()) {
            tc::CorrelationGrid a, b;
            try {
                a = load_grid(grid_a);
                b = load_grid(grid_b);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitInput;
            }
            const auto st = tc::diff_stats(a, b);
            std::cout << "cells " << st.cells << "\n"
                      << "mean " << tc::format_double(st.mean) << "\n"
                      << "std " << tc::format_double(st.stddev) << "\n"
                      << "mean_abs " << tc::format_double(st.mean_abs) << "\n"
                      << "max_abs " << tc::format_double(st.max_abs) << "\n";
            return kExitOk;
        }

        if (c_rmt->parsed()) {
            const auto res = tc::rmt_flagship_check({rv_N}, rv_samples, rv_seed);
            std::cout << (res.pass ? "PASS" : "FAIL") << " " << res.name << ": "
                      << res.detail << "\n";
            return res.pass ? kExitOk : kExitCheck;
        }

        if (c_limit->parsed()) {
            std::vector<double> Ts;
            std::stringstream ss(t_list_str);
            std::string tok;
            while (std::getline(ss, tok, ',')) Ts.push_back(std::stod(tok));
            const tc::PrimeTable table = tc::build_prime_table(cfg.prime_limit);
            tc::EulerMaclaurinParams em;
            em.bernoulli_depth = cfg.em_depth;
            tc::BracketDeps deps{table, em, 1e-9};
            const auto rows = tc::limit_check(lv1, lv2, Ts, deps);
            std::cout << "T,scaled_value,limit_value,abs_error\n";
            for (const auto& r : rows)
                std::cout << tc::format_double(r.T) << ',' << tc::format_double(r.scaled_value)
                          << ',' << tc::format_double(r.limit_value) << ','
                          << tc::format_double(r.abs_error) << "\n";
            return kExitOk;
        }

        if (c_self->parsed()) {
            const auto results = tc::run_selftest(cfg);
            bool all = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
                          << "\n";
                all = all && r.pass;
            }
            std::cout << (all ? "selftest: all checks passed\n"
                              : "selftest: CHECK FAILURES\n");
            return all ? kExitOk : kExitCheck;
        }
    } catch (const tc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const tc::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tc::EmptyFile& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
