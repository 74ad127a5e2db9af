#pragma once

#include "coreclust/solution.hpp"

#include <cstdint>
#include <optional>

namespace coreclust {

/// 3-approximation for k-center with z outliers: the whole input as a
/// unit-weight coreset fed to the radius search with eps_hat = 0.
/// O(k |S|^2 log |S|); only for inputs small enough to afford it.
ClusteringSolution charikar_baseline(const Dataset& s, std::size_t k, std::size_t z);

/// The two-round outliers pipeline collapsed to one partition: a single
/// GMM coreset (adaptive with eps_hat, or fixed size tau_override)
/// followed by the weighted radius search. tau_override = k+z reproduces
/// the plain composable-coreset baseline.
ClusteringSolution sequential_coreset(const Dataset& s, std::size_t k, std::size_t z,
                                      double eps_hat,
                                      std::optional<std::size_t> tau_override = {},
                                      std::uint64_t seed = 0);

} // namespace coreclust
