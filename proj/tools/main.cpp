// Command-line surface for the coreset k-center solvers: solve, bench,
// inject-outliers, inflate, oracle.

#include "coreclust/coreclust.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace cc = coreclust;

namespace {

using Clock = std::chrono::steady_clock;

struct CommonArgs {
    std::string input;
    std::size_t k = 1;
    std::size_t z = 0;
    std::size_t ell = 1;
    std::optional<double> mu;
    double eps = 0.6;
    std::optional<std::size_t> tau;
    std::optional<double> doubling_dim;
    std::uint64_t seed = 0;
    std::uint64_t budget = cc::kDefaultEnumerationBudget;
    bool json = false;
    bool times = false;
    cc::LoadOptions load;
};

void add_common_flags(CLI::App* cmd, CommonArgs& a, bool with_algo_params = true,
                      bool with_mu = true) {
    cmd->add_option("--input,-i", a.input, "input numeric table (CSV or whitespace)")
        ->required();
    cmd->add_flag("--skip-header", a.load.skip_header, "skip the first row");
    cmd->add_option("--columns", a.load.columns, "column subset, comma separated")
        ->delimiter(',');
    if (with_algo_params) {
        cmd->add_option("--k", a.k, "number of centers")->required();
        cmd->add_option("--z", a.z, "allowed outliers");
        cmd->add_option("--ell", a.ell, "number of partitions");
        if (with_mu) cmd->add_option("--mu", a.mu, "coreset-size multiplier");
        cmd->add_option("--eps", a.eps, "precision parameter epsilon in (0,1]");
        cmd->add_option("--tau", a.tau, "explicit coreset capacity (overrides --mu)");
        cmd->add_option("--D", a.doubling_dim,
                        "assumed doubling dimension (streaming theory-form tau)");
    }
    cmd->add_option("--seed", a.seed, "64-bit seed; all randomness derives from it");
    cmd->add_flag("--json", a.json, "emit a JSON document on stdout");
}

// Coreset capacity per algorithm, from --tau or the mu knob.
std::optional<std::size_t> resolve_tau(const CommonArgs& a, double per_partition_base) {
    if (a.tau) return a.tau;
    if (a.mu)
        return static_cast<std::size_t>(std::ceil(*a.mu * per_partition_base));
    return std::nullopt;
}

struct SolveOutcome {
    cc::ClusteringSolution solution;
    std::optional<cc::RunReport> report;
    double total_seconds = 0.0;
};

SolveOutcome run_algorithm(const std::string& algo, const cc::Dataset& data,
                           const CommonArgs& a) {
    SolveOutcome out;
    auto t0 = Clock::now();

    cc::MrOptions opt;
    opt.seed = a.seed;

    if (algo == "kcenter-mr") {
        opt.eps_hat = a.eps;
        opt.tau_override = resolve_tau(a, static_cast<double>(a.k));
        out.report = cc::kcenter_mr(data, a.k, a.ell, opt);
        out.solution = out.report->solution;
    } else if (algo == "outliers-mr-det") {
        opt.eps_hat = a.eps / 6.0;
        opt.tau_override = resolve_tau(a, static_cast<double>(a.k + a.z));
        out.report = cc::kcenter_outliers_mr_det(data, a.k, a.z, a.ell, opt);
        out.solution = out.report->solution;
    } else if (algo == "outliers-mr-rand") {
        opt.eps_hat = a.eps / 6.0;
        opt.tau_override = resolve_tau(
            a, static_cast<double>(a.k) +
                   6.0 * static_cast<double>(a.z) / static_cast<double>(a.ell));
        out.report = cc::kcenter_outliers_mr_rand(data, a.k, a.z, a.ell, opt);
        out.solution = out.report->solution;
    } else if (algo == "sequential") {
        out.solution = cc::sequential_coreset(
            data, a.k, a.z, a.eps / 6.0,
            resolve_tau(a, static_cast<double>(a.k + a.z)), a.seed);
    } else if (algo == "charikar") {
        out.solution = cc::charikar_baseline(data, a.k, a.z);
        out.solution.seed = a.seed;
    } else if (algo == "outliers-stream") {
        cc::StreamConfig cfg;
        cfg.k = a.k;
        cfg.z = a.z;
        cfg.eps_hat = a.eps / 6.0;
        if (a.doubling_dim)
            cfg.tau = cc::choose_tau(a.k, a.z, cfg.eps_hat, *a.doubling_dim);
        else
            cfg.tau = resolve_tau(a, static_cast<double>(a.k + a.z))
                          .value_or(4 * (a.k + a.z));
        cc::Dataset stream = cc::shuffled(data, a.seed);
        out.solution = cc::stream_solve_outliers(stream, cfg);
        out.solution.seed = a.seed;
    } else if (algo == "kcenter-stream") {
        std::size_t tau =
            resolve_tau(a, static_cast<double>(a.k)).value_or(4 * a.k);
        cc::Dataset stream = cc::shuffled(data, a.seed);
        out.solution = cc::stream_kcenter_no_outliers(stream, a.k, tau);
        out.solution.seed = a.seed;
    } else if (algo == "two-pass") {
        cc::Dataset stream = cc::shuffled(data, a.seed);
        out.solution = cc::two_pass_oblivious(stream, a.k, a.z, a.eps);
        out.solution.seed = a.seed;
    } else if (algo == "brute-force") {
        cc::OracleResult res =
            a.z == 0 ? cc::brute_force_kcenter(data, a.k, a.budget)
                     : cc::brute_force_kcenter_outliers(data, a.k, a.z, a.budget);
        out.solution.centers = data.subset(res.opt_centers);
        out.solution.radius = res.opt_radius;
        out.solution.z = a.z;
        out.solution.algorithm = "brute-force";
        out.solution.params = {a.k, a.z, 1, 0.0, {}, {}};
        out.solution.seed = a.seed;
    } else {
        throw cc::input_error("unknown algorithm: " + algo);
    }

    if (a.mu) out.solution.params.mu = a.mu;
    out.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
}

const std::vector<std::string> kAlgorithms = {
    "kcenter-mr",  "outliers-mr-det", "outliers-mr-rand",
    "outliers-stream", "kcenter-stream", "two-pass",
    "sequential",  "charikar",        "brute-force"};

bool is_streaming(const std::string& algo) {
    return algo == "outliers-stream" || algo == "kcenter-stream" || algo == "two-pass";
}

int cmd_solve(const std::string& algo, const CommonArgs& a) {
    cc::Dataset data = cc::load_dataset(a.input, a.load);
    SolveOutcome out = run_algorithm(algo, data, a);
    if (a.json) {
        std::cout << cc::solution_to_json(
                         out.solution, out.report ? &*out.report : nullptr, a.times)
                  << "\n";
    } else {
        std::cout << algo << ": radius " << out.solution.radius << " with "
                  << out.solution.centers.size() << " centers";
        if (out.solution.z > 0) std::cout << " (z=" << out.solution.z << ")";
        std::cout << " in " << out.total_seconds << "s\n";
    }
    return 0;
}

int cmd_bench(const std::string& algo, const CommonArgs& a_base,
              std::vector<double> mus, std::size_t reps, const std::string& csv_path,
              bool parallel_reps) {
    cc::Dataset data = cc::load_dataset(a_base.input, a_base.load);
    if (mus.empty()) mus.push_back(a_base.mu.value_or(1.0));

    struct Job {
        double mu;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (double mu : mus)
        for (std::size_t rep = 0; rep < reps; ++rep)
            jobs.push_back({mu, a_base.seed + rep});

    auto run_one = [&](const Job& job) {
        CommonArgs a = a_base;
        a.mu = job.mu;
        a.seed = job.seed;
        // input is shuffled before every run; streaming algorithms shuffle
        // again internally from the same seed, which is harmless
        cc::Dataset shuffled = cc::shuffled(data, job.seed);
        SolveOutcome out = run_algorithm(algo, shuffled, a);
        cc::BenchRecord rec;
        rec.dataset = a.input;
        rec.algorithm = algo;
        rec.k = a.k;
        rec.z = a.z;
        rec.ell = a.ell;
        rec.mu = job.mu;
        rec.eps_hat = out.solution.params.eps_hat;
        rec.seed = job.seed;
        rec.radius = out.solution.radius;
        rec.total_seconds = out.total_seconds;
        if (out.report) {
            rec.round1_seconds = out.report->round1_seconds;
            rec.round2_seconds = out.report->round2_seconds;
            rec.peak_local_memory_points = out.report->peak_local_memory_points;
        } else {
            rec.peak_local_memory_points = data.size();
        }
        if (is_streaming(algo))
            rec.throughput = static_cast<double>(data.size()) / out.total_seconds;
        return rec;
    };

    std::vector<cc::BenchRecord> records;
    if (parallel_reps) {
        std::vector<std::future<cc::BenchRecord>> futs;
        for (const Job& j : jobs)
            futs.push_back(std::async(std::launch::async, run_one, j));
        for (auto& f : futs) records.push_back(f.get());
    } else {
        for (const Job& j : jobs) records.push_back(run_one(j));
    }

    // approximation ratio vs the best radius found for the configuration
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : records) best = std::min(best, r.radius);
    for (auto& r : records)
        r.approximation_ratio = best > 0.0 ? r.radius / best : 1.0;

    if (!csv_path.empty()) {
        bool fresh = !std::ifstream(csv_path).good();
        std::ofstream csv(csv_path, std::ios::app);
        if (!csv) throw cc::input_error("cannot write " + csv_path);
        if (fresh) csv << cc::bench_csv_header() << "\n";
        for (const auto& r : records) csv << cc::bench_record_to_csv(r) << "\n";
    }

    if (a_base.json) {
        for (const auto& r : records) std::cout << cc::bench_record_to_json(r) << "\n";
    } else {
        for (double mu : mus) {
            std::vector<double> radii, times;
            for (const auto& r : records)
                if (r.mu && *r.mu == mu) {
                    radii.push_back(r.radius);
                    times.push_back(r.total_seconds);
                }
            auto rc = cc::mean_ci(radii);
            auto tc = cc::mean_ci(times);
            std::cout << algo << " mu=" << mu << ": radius " << rc.mean << " +/- "
                      << rc.half_width << ", time " << tc.mean << "s +/- "
                      << tc.half_width << " (n=" << rc.n << ")\n";
        }
    }
    return 0;
}

int cmd_oracle(const CommonArgs& a) {
    cc::Dataset data = cc::load_dataset(a.input, a.load);
    cc::OracleResult res =
        a.z == 0 ? cc::brute_force_kcenter(data, a.k, a.budget)
                 : cc::brute_force_kcenter_outliers(data, a.k, a.z, a.budget);
    if (a.json) {
        std::cout << "{\"opt_radius\":" << std::setprecision(17) << res.opt_radius
                  << ",\"enumerated\":" << res.enumerated << ",\"opt_centers\":[";
        for (std::size_t i = 0; i < res.opt_centers.size(); ++i)
            std::cout << (i ? "," : "") << res.opt_centers[i];
        std::cout << "]}\n";
    } else {
        std::cout << "optimal radius " << res.opt_radius << " (examined "
                  << res.enumerated << " center sets)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coreset-based k-center clustering, with and without outliers"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string algo;

    auto* solve = app.add_subcommand("solve", "run one algorithm on a dataset");
    solve->add_option("--algo", algo, "algorithm")
        ->required()
        ->check(CLI::IsMember(kAlgorithms));
    add_common_flags(solve, a);
    solve->add_flag("--times", a.times, "include wall times in JSON output");
    solve->add_option("--budget", a.budget, "enumeration budget (brute-force)");

    std::vector<double> mus;
    std::size_t reps = 10;
    std::string csv_path;
    bool parallel_reps = false;
    auto* bench = app.add_subcommand("bench", "repeated timed runs with aggregation");
    bench->add_option("--algo", algo, "algorithm")
        ->required()
        ->check(CLI::IsMember(kAlgorithms));
    add_common_flags(bench, a, true, false);
    bench->add_option("--mu", mus, "coreset-size multipliers")->delimiter(',');
    bench->add_option("--reps", reps, "repetitions per configuration");
    bench->add_option("--csv", csv_path, "append records to this CSV file");
    bench->add_flag("--parallel-reps", parallel_reps,
                    "run repetitions concurrently (single-threaded algorithms only)");

    CommonArgs inj;
    std::string out_path;
    std::size_t inject_z = 0, inflate_h = 1;
    auto* inject = app.add_subcommand("inject-outliers",
                                      "append far-away outliers to a dataset");
    add_common_flags(inject, inj, false);
    inject->add_option("--z", inject_z, "outliers to inject")->required();
    inject->add_option("--output,-o", out_path, "output CSV (sidecar: .outliers)")
        ->required();

    auto* infl = app.add_subcommand("inflate", "SMOTE-style dataset inflation");
    add_common_flags(infl, inj, false);
    infl->add_option("--factor", inflate_h, "inflation factor h")->required();
    infl->add_option("--output,-o", out_path, "output CSV")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force optimum (small inputs)");
    add_common_flags(oracle, a);
    oracle->add_option("--budget", a.budget, "enumeration budget");

    try {
        app.parse(argc, argv);

        if (solve->parsed()) return cmd_solve(algo, a);
        if (bench->parsed()) return cmd_bench(algo, a, mus, reps, csv_path, parallel_reps);
        if (oracle->parsed()) return cmd_oracle(a);
        if (inject->parsed()) {
            cc::Dataset data = cc::load_dataset(inj.input, inj.load);
            cc::InjectionResult res = cc::inject_outliers(data, inject_z, inj.seed);
            cc::save_dataset(res.data, out_path);
            std::ofstream side(out_path + ".outliers");
            for (std::size_t i : res.injected_indices) side << i << "\n";
            if (inj.json)
                std::cout << "{\"rows\":" << res.data.size()
                          << ",\"injected\":" << res.injected_indices.size()
                          << ",\"r_meb\":" << std::setprecision(17) << res.meb.radius
                          << "}\n";
            return 0;
        }
        if (infl->parsed()) {
            cc::Dataset data = cc::load_dataset(inj.input, inj.load);
            cc::save_dataset(cc::inflate(data, inflate_h, inj.seed), out_path);
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cc::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cc::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
