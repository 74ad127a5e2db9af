#pragma once

#include "coreclust/gmm.hpp"
#include "coreclust/solution.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace coreclust {

/// Pairwise distances of a point set, packed lower triangle. Built once
/// per radius search and shared across all feasibility probes; for large
/// inputs (Charikar-style unit coresets) this dominates the running time
/// otherwise.
class PairwiseDistances {
public:
    explicit PairwiseDistances(const Dataset& pts);

    std::size_t count() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const {
        if (i == j) return 0.0;
        if (i < j) std::swap(i, j);
        return d_[i * (i - 1) / 2 + j];
    }
    /// {0} plus every pairwise distance, sorted and deduplicated.
    std::vector<double> candidates() const;

private:
    std::size_t n_;
    std::vector<double> d_;
};

/// Output of one greedy weighted covering run: at most k centers (as
/// positions into the input coreset) plus the points left uncovered at
/// radius (3+4*eps_hat)*r.
struct OutliersClusterResult {
    std::vector<std::size_t> center_positions;
    std::vector<std::size_t> uncovered;
    std::uint64_t uncovered_weight = 0;
};

/// Greedy weighted k-center-with-outliers covering at a fixed radius
/// guess r. Each iteration picks the point (covered or not) whose ball
/// of radius (1+2*eps_hat)*r holds the largest uncovered weight (ties to
/// the lower position), then removes everything within (3+4*eps_hat)*r
/// of it. Stops at k centers or when nothing is uncovered.
OutliersClusterResult outliers_cluster(const Coreset& t, std::size_t k, double r,
                                       double eps_hat,
                                       const PairwiseDistances* dist = nullptr);

enum class CandidateSource { exact_pairwise, geometric_refined };

struct RadiusSearchResult {
    double r_tilde = 0.0;
    OutliersClusterResult solution;
    std::size_t probes = 0; ///< outliers_cluster invocations
    CandidateSource candidate_source = CandidateSource::exact_pairwise;
};

/// Smallest radius at which outliers_cluster leaves weight at most z
/// uncovered. Binary search over {0} and all pairwise distances
/// (feasibility treated as monotone in r, with a linear-scan fallback),
/// then, when eps_hat > 0, refined downward geometrically with step
/// (1+delta), delta = eps_hat/(3+4*eps_hat).
RadiusSearchResult find_min_radius(const Coreset& t, std::size_t k,
                                   std::uint64_t z, double eps_hat);

/// find_min_radius followed by materializing the centers of its solution.
/// The returned radius field holds the search radius r_tilde; callers
/// scoring against an original dataset overwrite it with a recomputed
/// value.
ClusteringSolution solve_weighted(const Coreset& t, std::size_t k,
                                  std::uint64_t z, double eps_hat);

} // namespace coreclust
