#pragma once

#include "coreclust/metric.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace coreclust {

struct SolveParams {
    std::size_t k = 1;
    std::size_t z = 0;
    std::size_t ell = 1;
    double eps_hat = 0.0;
    std::optional<double> mu;        ///< coreset-size multiplier, when used
    std::optional<std::size_t> tau;  ///< explicit per-partition/stream capacity
};

/// Final output of any solver: at most k centers plus provenance.
/// `radius` is always recomputed from scratch against the full input
/// (with the z farthest points excluded when z > 0), never trusted from
/// intermediate stages.
struct ClusteringSolution {
    Dataset centers;
    double radius = 0.0;
    std::size_t z = 0;
    std::string algorithm;
    SolveParams params;
    std::uint64_t seed = 0;
};

} // namespace coreclust
