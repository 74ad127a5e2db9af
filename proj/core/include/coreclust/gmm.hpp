#pragma once

#include "coreclust/metric.hpp"

#include <cstdint>
#include <vector>

namespace coreclust {

/// Record of an incremental farthest-first traversal.
/// radii[j] is the radius of the input with respect to the first j+1
/// centers, so the sequence is non-increasing. assignment[i] is the
/// position (into center_indices) of the closest selected center of
/// point i, with ties kept on the earlier-selected center.
struct GmmTrace {
    std::vector<std::size_t> center_indices;
    std::vector<double> radii;
    std::vector<std::size_t> assignment;

    std::size_t size() const { return center_indices.size(); }
};

/// Farthest-first traversal with a fixed number of centers. The first
/// center defaults to index 0; argmax ties go to the lower index.
GmmTrace gmm(const Dataset& x, std::size_t tau, std::size_t first_center = 0);

/// Farthest-first traversal with the adaptive stopping rule: stop at the
/// first tau >= base whose radius is at most (eps_hat/2) times the radius
/// after `base` centers. If the rule never triggers the full trace is
/// returned (radius 0; a coreset equal to the input is always valid).
GmmTrace gmm_adaptive(const Dataset& x, std::size_t base, double eps_hat,
                      std::size_t first_center = 0);

/// A weighted summary of a dataset: each item is a selected point
/// carrying the number of input points it proxies. Weights sum to
/// source_size; origin indices are distinct.
struct Coreset {
    Dataset points;
    std::vector<std::uint64_t> weights;
    std::vector<std::size_t> origin_indices;
    std::size_t source_size = 0;

    std::size_t size() const { return weights.size(); }
    std::uint64_t total_weight() const;
};

/// One weighted point per selected center of the trace; the weight counts
/// the points of x whose nearest selected center it is.
Coreset build_weighted_coreset(const Dataset& x, const GmmTrace& trace);

/// The dataset itself as a unit-weight coreset.
Coreset unit_coreset(const Dataset& s);

/// Concatenates `part` onto `into`, shifting its origin indices through
/// `origin_map` (the global index of each local point), so the union keeps
/// distinct origins.
void append_coreset(Coreset& into, const Coreset& part,
                    std::span<const std::size_t> origin_map);

} // namespace coreclust
