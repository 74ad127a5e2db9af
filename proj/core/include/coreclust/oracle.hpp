#pragma once

#include "coreclust/metric.hpp"

#include <cstdint>
#include <vector>

namespace coreclust {

constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct OracleResult {
    double opt_radius = 0.0;
    std::vector<std::size_t> opt_centers; ///< lexicographically lowest witness
    std::uint64_t enumerated = 0;         ///< center sets examined
};

/// Exact minimum of radius(s, T) over all k-subsets of indices.
/// Throws budget_error if C(|s|, k) exceeds the budget.
OracleResult brute_force_kcenter(const Dataset& s, std::size_t k,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

/// Exact minimum of radius_with_outliers(s, T, z) over all k-subsets.
OracleResult brute_force_kcenter_outliers(const Dataset& s, std::size_t k,
                                          std::size_t z,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace coreclust
