#pragma once

#include "coreclust/gmm.hpp"
#include "coreclust/solution.hpp"

#include <cstdint>
#include <vector>

namespace coreclust {

/// Theory-form stream capacity: ceil((k+z) * (16/eps_hat)^D). Rejects
/// combinations that overflow the capacity type.
std::size_t choose_tau(std::size_t k, std::size_t z, double eps_hat, double d_dim);

struct StreamConfig {
    std::size_t k = 1;
    std::size_t z = 0;
    std::size_t tau = 1; ///< capacity; must be >= k+z
    double eps_hat = 0.1;
};

/// What happened to one processed point; lets a harness track the
/// absorption bound d(s, assigned center) <= 8*phi without the sketch
/// storing the proxy function.
struct StreamEvent {
    bool new_center = false;
    std::size_t center_pos = 0;   ///< position in centers() it was absorbed into / added at
    double dist = 0.0;            ///< distance to that center at absorption time
    double phi_at_absorb = 0.0;
    bool initializing = false;    ///< point only buffered so far
};

/// Weighted doubling sketch: at most tau centers, pairwise separated by
/// more than 4*phi, weights summing to the number of points seen, phi a
/// lower bound on the tau-center radius of the prefix. The first tau+1
/// points are buffered and de-duplicated; on the first capacity overflow
/// phi becomes half the minimum pairwise center distance, the separation
/// invariant is reinforced at that phi, and only then does the doubling
/// loop run — this order is what keeps phi a valid lower bound.
class DoublingSketch {
public:
    DoublingSketch(std::size_t dim, std::size_t tau);

    StreamEvent update(std::span<const double> s);

    bool initialized() const { return initialized_; }
    std::size_t tau() const { return tau_; }
    double phi() const { return phi_; }
    std::uint64_t points_seen() const { return points_seen_; }

    const Dataset& centers() const { return centers_; }
    const std::vector<std::uint64_t>& weights() const { return weights_; }

    /// Weighted coreset snapshot. Valid also before initialization (the
    /// buffered points come back with unit weights).
    Coreset coreset() const;

private:
    void initialize();
    void enforce_capacity();
    void merge_scan();

    std::size_t tau_;
    bool initialized_ = false;
    double phi_ = 0.0;
    std::uint64_t points_seen_ = 0;
    Dataset centers_;
    std::vector<std::uint64_t> weights_;
    Dataset init_buffer_;
};

/// One pass of the doubling sketch over the points in stream order, then
/// the weighted radius search on the resulting coreset. Streams no longer
/// than tau+1 are solved directly (they fit).
ClusteringSolution stream_solve_outliers(const Dataset& stream, const StreamConfig& cfg);

/// No-outliers variant: doubling sketch with capacity tau >= k, finalized
/// by GMM on the coreset points (k-center cost is weight-oblivious).
ClusteringSolution stream_kcenter_no_outliers(const Dataset& stream, std::size_t k,
                                              std::size_t tau);

/// Two passes, no doubling-dimension knowledge: pass 1 runs the doubling
/// sketch at capacity k+z to get the radius estimate r_hat = 8*phi;
/// pass 2 keeps a maximal subset with mutual distances above
/// (eps/48)*r_hat, weighting each kept point by the points it proxies;
/// the weighted radius search finishes at precision eps/6.
ClusteringSolution two_pass_oblivious(const Dataset& stream, std::size_t k,
                                      std::size_t z, double eps);

} // namespace coreclust
