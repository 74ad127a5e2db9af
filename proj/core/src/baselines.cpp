#include "coreclust/baselines.hpp"

#include "coreclust/errors.hpp"
#include "coreclust/mapreduce.hpp"
#include "coreclust/outliers_cluster.hpp"

namespace coreclust {

ClusteringSolution charikar_baseline(const Dataset& s, std::size_t k, std::size_t z) {
    if (k >= s.size()) throw input_error("k must be smaller than |S|");
    if (z >= s.size()) throw input_error("z must be smaller than |S|");
    ClusteringSolution sol = solve_weighted(unit_coreset(s), k, z, 0.0);
    sol.radius = radius_with_outliers(s, sol.centers, z).radius;
    sol.algorithm = "charikar";
    sol.params = {k, z, 1, 0.0, {}, {}};
    return sol;
}

ClusteringSolution sequential_coreset(const Dataset& s, std::size_t k, std::size_t z,
                                      double eps_hat,
                                      std::optional<std::size_t> tau_override,
                                      std::uint64_t seed) {
    MrOptions opt;
    opt.eps_hat = eps_hat;
    opt.tau_override = tau_override;
    opt.seed = seed;
    opt.parallel = false;
    RunReport rep = kcenter_outliers_mr_det(s, k, z, 1, opt);
    ClusteringSolution sol = std::move(rep.solution);
    sol.algorithm = "sequential";
    return sol;
}

} // namespace coreclust
