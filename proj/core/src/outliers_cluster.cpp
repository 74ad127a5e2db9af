#include "coreclust/outliers_cluster.hpp"

#include "coreclust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coreclust {

PairwiseDistances::PairwiseDistances(const Dataset& pts) : n_(pts.size()) {
    d_.resize(n_ * (n_ - 1) / 2);
    std::size_t w = 0;
    for (std::size_t i = 1; i < n_; ++i) {
        auto pi = pts[i];
        for (std::size_t j = 0; j < i; ++j) d_[w++] = distance(pts[j], pi);
    }
}

std::vector<double> PairwiseDistances::candidates() const {
    std::vector<double> c;
    c.reserve(d_.size() + 1);
    c.push_back(0.0);
    c.insert(c.end(), d_.begin(), d_.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

OutliersClusterResult outliers_cluster(const Coreset& t, std::size_t k, double r,
                                       double eps_hat,
                                       const PairwiseDistances* dist) {
    if (t.size() == 0) throw input_error("outliers_cluster on an empty coreset");
    if (k < 1) throw input_error("k must be positive");
    if (r < 0.0 || eps_hat < 0.0) throw input_error("r and eps_hat must be nonnegative");

    const std::size_t m = t.size();
    const double ball_r = (1.0 + 2.0 * eps_hat) * r;
    const double expel_r = (3.0 + 4.0 * eps_hat) * r;

    auto d = [&](std::size_t a, std::size_t b) {
        return dist ? (*dist)(a, b) : distance(t.points[a], t.points[b]);
    };

    std::vector<std::size_t> uncovered(m);
    for (std::size_t i = 0; i < m; ++i) uncovered[i] = i;

    // Ball weight of every t in T (covered or not) over the uncovered
    // set, maintained decrementally as points are expelled: weights are
    // integers, so the running values match a from-scratch recount
    // exactly. This turns the k selection rounds from O(k m |T'|) into
    // O(m^2) total.
    std::vector<std::uint64_t> ball_w(m, 0);
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t c = 0; c < m; ++c)
            if (d(c, v) <= ball_r) ball_w[c] += t.weights[v];

    OutliersClusterResult res;
    std::vector<std::size_t> kept;
    kept.reserve(m);
    while (res.center_positions.size() < k && !uncovered.empty()) {
        // ties to the lower position
        std::size_t best = 0;
        for (std::size_t c = 1; c < m; ++c)
            if (ball_w[c] > ball_w[best]) best = c;
        res.center_positions.push_back(best);

        kept.clear();
        for (std::size_t v : uncovered) {
            if (d(best, v) > expel_r) {
                kept.push_back(v);
            } else {
                for (std::size_t c = 0; c < m; ++c)
                    if (d(c, v) <= ball_r) ball_w[c] -= t.weights[v];
            }
        }
        uncovered.swap(kept);
    }

    res.uncovered = std::move(uncovered);
    res.uncovered_weight = 0;
    for (std::size_t v : res.uncovered) res.uncovered_weight += t.weights[v];
    return res;
}

RadiusSearchResult find_min_radius(const Coreset& t, std::size_t k,
                                   std::uint64_t z, double eps_hat) {
    if (t.size() == 0) throw input_error("find_min_radius on an empty coreset");

    // Shared distance matrix makes each probe a table scan; only worth
    // the memory above a handful of points.
    std::unique_ptr<PairwiseDistances> dist;
    if (t.size() >= 2) dist = std::make_unique<PairwiseDistances>(t.points);
    const PairwiseDistances* dp = dist.get();

    std::vector<double> cand = dp ? dp->candidates() : std::vector<double>{0.0};

    RadiusSearchResult res;
    auto probe = [&](double r) {
        ++res.probes;
        return outliers_cluster(t, k, r, eps_hat, dp);
    };
    auto feasible = [&](const OutliersClusterResult& o) { return o.uncovered_weight <= z; };

    // The top candidate covers everything with a single ball.
    OutliersClusterResult top = probe(cand.back());
    if (!feasible(top))
        throw std::logic_error("max pairwise distance infeasible in radius search");
    std::size_t best_idx = cand.size() - 1;
    OutliersClusterResult best = std::move(top);

    // Binary search for the smallest feasible candidate, assuming
    // feasibility is monotone in r.
    std::size_t lo = 0, hi = cand.size() - 1; // invariant: cand[hi] feasible
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        OutliersClusterResult o = probe(cand[mid]);
        if (feasible(o)) {
            hi = mid;
            best_idx = mid;
            best = std::move(o);
        } else {
            lo = mid + 1;
        }
    }

    // Greedy feasibility is not provably monotone; if the landing point
    // turned out infeasible (cannot happen with the search above, but
    // checked anyway) fall back to a linear scan.
    if (!feasible(best)) {
        for (std::size_t i = 0; i < cand.size(); ++i) {
            OutliersClusterResult o = probe(cand[i]);
            if (feasible(o)) {
                best_idx = i;
                best = std::move(o);
                break;
            }
        }
    }

    res.r_tilde = cand[best_idx];
    res.candidate_source = CandidateSource::exact_pairwise;

    // Geometric refinement below the candidate grid, factor (1+delta).
    if (eps_hat > 0.0 && res.r_tilde > 0.0) {
        const double delta = eps_hat / (3.0 + 4.0 * eps_hat);
        double r = res.r_tilde;
        while (true) {
            double next = r / (1.0 + delta);
            OutliersClusterResult o = probe(next);
            if (!feasible(o)) break;
            r = next;
            best = std::move(o);
            res.candidate_source = CandidateSource::geometric_refined;
        }
        res.r_tilde = r;
    }

    res.solution = std::move(best);
    return res;
}

ClusteringSolution solve_weighted(const Coreset& t, std::size_t k,
                                  std::uint64_t z, double eps_hat) {
    RadiusSearchResult search = find_min_radius(t, k, z, eps_hat);
    ClusteringSolution sol;
    sol.centers = Dataset(t.points.dim());
    for (std::size_t pos : search.solution.center_positions)
        sol.centers.push_back(t.points[pos]);
    sol.radius = search.r_tilde;
    sol.z = z;
    sol.algorithm = "solve-weighted";
    sol.params.k = k;
    sol.params.z = z;
    sol.params.eps_hat = eps_hat;
    return sol;
}

} // namespace coreclust
