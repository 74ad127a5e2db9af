#include "coreclust/mapreduce.hpp"

#include "coreclust/errors.hpp"
#include "coreclust/outliers_cluster.hpp"
#include "coreclust/rng.hpp"

#include <chrono>
#include <cmath>
#include <future>

namespace coreclust {

std::vector<std::vector<std::size_t>> PartitionPlan::members() const {
    std::vector<std::vector<std::size_t>> out(ell);
    for (std::size_t i = 0; i < assignments.size(); ++i)
        out[assignments[i]].push_back(i);
    return out;
}

PartitionPlan partition(const Dataset& s, std::size_t ell, PartitionMode mode,
                        std::uint64_t seed) {
    if (ell < 1 || ell > s.size())
        throw input_error("ell = " + std::to_string(ell) + " out of range for |S| = " +
                          std::to_string(s.size()));
    PartitionPlan plan;
    plan.ell = ell;
    plan.mode = mode;
    plan.seed = seed;
    plan.assignments.resize(s.size());
    if (mode == PartitionMode::chunked) {
        // contiguous blocks, sizes differing by at most one
        std::size_t n = s.size();
        std::size_t base = n / ell, extra = n % ell;
        std::size_t idx = 0;
        for (std::size_t p = 0; p < ell; ++p) {
            std::size_t sz = base + (p < extra ? 1 : 0);
            for (std::size_t j = 0; j < sz; ++j) plan.assignments[idx++] = static_cast<std::uint32_t>(p);
        }
    } else {
        auto gen = substream(seed, "partition");
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(ell - 1));
        for (auto& a : plan.assignments) a = pick(gen);
    }
    return plan;
}

std::size_t randomized_base_excess(std::size_t z, std::size_t ell, std::size_t n) {
    double v = 6.0 * (static_cast<double>(z) / static_cast<double>(ell) +
                      std::log2(static_cast<double>(n)));
    return static_cast<std::size_t>(std::ceil(v));
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Round1Out {
    Coreset coreset;
    std::vector<std::size_t> center_origins; // global indices, selection order
};

// One partition's coreset. base/eps_hat drive the adaptive stopping rule
// unless a fixed tau is requested; both are clamped to the partition size.
Round1Out round1_task(const Dataset& s, const std::vector<std::size_t>& members,
                      std::size_t base, double eps_hat,
                      std::optional<std::size_t> tau_override,
                      std::size_t first_center) {
    Dataset part = s.subset(members);
    GmmTrace trace;
    if (tau_override) {
        std::size_t tau = std::min(*tau_override, part.size());
        trace = gmm(part, std::max<std::size_t>(tau, 1), first_center);
    } else {
        trace = gmm_adaptive(part, std::min(base, part.size()), eps_hat, first_center);
    }
    Round1Out out;
    out.coreset = build_weighted_coreset(part, trace);
    for (std::size_t local : out.coreset.origin_indices)
        out.center_origins.push_back(members[local]);
    return out;
}

struct Round1Result {
    Coreset unioned;
    std::vector<std::size_t> coreset_sizes;
    std::vector<std::vector<std::size_t>> center_origins;
    double seconds = 0.0;
};

Round1Result run_round1(const Dataset& s, const PartitionPlan& plan, std::size_t base,
                        const MrOptions& opt) {
    auto t0 = Clock::now();
    auto members = plan.members();
    std::vector<std::size_t> firsts(plan.ell, 0);
    if (opt.random_first_center) {
        for (std::size_t p = 0; p < plan.ell; ++p) {
            if (members[p].empty()) continue;
            auto gen = substream(opt.seed, "first-center", p);
            firsts[p] = std::uniform_int_distribution<std::size_t>(0, members[p].size() - 1)(gen);
        }
    }

    std::vector<Round1Out> outs(plan.ell);
    if (opt.parallel && plan.ell > 1) {
        std::vector<std::future<Round1Out>> futs;
        for (std::size_t p = 0; p < plan.ell; ++p) {
            if (members[p].empty()) {
                futs.emplace_back();
                continue;
            }
            futs.push_back(std::async(std::launch::async, round1_task, std::cref(s),
                                      std::cref(members[p]), base, opt.eps_hat,
                                      opt.tau_override, firsts[p]));
        }
        for (std::size_t p = 0; p < plan.ell; ++p)
            if (futs[p].valid()) outs[p] = futs[p].get();
    } else {
        for (std::size_t p = 0; p < plan.ell; ++p)
            if (!members[p].empty())
                outs[p] = round1_task(s, members[p], base, opt.eps_hat, opt.tau_override,
                                      firsts[p]);
    }

    // coresets concatenated in partition-id order
    Round1Result res;
    res.unioned.points = Dataset(s.dim());
    for (std::size_t p = 0; p < plan.ell; ++p) {
        res.coreset_sizes.push_back(outs[p].coreset.size());
        res.center_origins.push_back(outs[p].center_origins);
        append_coreset(res.unioned, outs[p].coreset, members[p]);
    }
    res.seconds = seconds_since(t0);
    return res;
}

void fill_report(RunReport& rep, const Dataset& s, const Round1Result& r1,
                 std::size_t ell) {
    rep.coreset_sizes = r1.coreset_sizes;
    rep.round1_center_origins = r1.center_origins;
    rep.union_size = r1.unioned.size();
    rep.peak_local_memory_points =
        std::max((s.size() + ell - 1) / ell, rep.union_size);
    rep.round1_seconds = r1.seconds;
}

} // namespace

RunReport kcenter_mr(const Dataset& s, std::size_t k, std::size_t ell,
                     const MrOptions& opt) {
    if (k >= s.size()) throw input_error("k must be smaller than |S|");
    PartitionPlan plan = partition(s, ell, PartitionMode::chunked, opt.seed);
    Round1Result r1 = run_round1(s, plan, k, opt);

    auto t0 = Clock::now();
    const Dataset& u = r1.unioned.points;
    GmmTrace final_trace = gmm(u, std::min(k, u.size()));
    RunReport rep;
    rep.solution.centers = u.subset(final_trace.center_indices);
    rep.round2_seconds = seconds_since(t0);

    rep.solution.radius = radius(s, rep.solution.centers).radius;
    rep.solution.z = 0;
    rep.solution.algorithm = "kcenter-mr";
    rep.solution.params = {k, 0, ell, opt.eps_hat, {}, opt.tau_override};
    rep.solution.seed = opt.seed;
    fill_report(rep, s, r1, ell);
    return rep;
}

namespace {

RunReport outliers_mr_impl(const Dataset& s, std::size_t k, std::size_t z,
                           std::size_t ell, const MrOptions& opt,
                           PartitionMode mode, std::size_t base,
                           const char* algorithm) {
    if (k >= s.size()) throw input_error("k must be smaller than |S|");
    if (z >= s.size()) throw input_error("z must be smaller than |S|");
    PartitionPlan plan = partition(s, ell, mode, opt.seed);
    Round1Result r1 = run_round1(s, plan, base, opt);

    auto t0 = Clock::now();
    ClusteringSolution sol = solve_weighted(r1.unioned, k, z, opt.eps_hat);
    RunReport rep;
    rep.round2_seconds = seconds_since(t0);

    rep.solution = std::move(sol);
    rep.solution.radius = radius_with_outliers(s, rep.solution.centers, z).radius;
    rep.solution.algorithm = algorithm;
    rep.solution.params = {k, z, ell, opt.eps_hat, {}, opt.tau_override};
    rep.solution.seed = opt.seed;
    fill_report(rep, s, r1, ell);
    return rep;
}

} // namespace

RunReport kcenter_outliers_mr_det(const Dataset& s, std::size_t k, std::size_t z,
                                  std::size_t ell, const MrOptions& opt) {
    return outliers_mr_impl(s, k, z, ell, opt, PartitionMode::chunked, k + z,
                            "outliers-mr-det");
}

RunReport kcenter_outliers_mr_rand(const Dataset& s, std::size_t k, std::size_t z,
                                   std::size_t ell, const MrOptions& opt) {
    std::size_t base = k + randomized_base_excess(z, ell, s.size());
    return outliers_mr_impl(s, k, z, ell, opt, PartitionMode::random, base,
                            "outliers-mr-rand");
}

} // namespace coreclust
