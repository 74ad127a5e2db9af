#pragma once

#include "coreclust/gmm.hpp"
#include "coreclust/solution.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace coreclust {

enum class PartitionMode { chunked, random };

struct PartitionPlan {
    std::vector<std::uint32_t> assignments; ///< partition id per input index
    std::size_t ell = 1;
    PartitionMode mode = PartitionMode::chunked;
    std::uint64_t seed = 0;

    /// Member indices per partition, in input order.
    std::vector<std::vector<std::size_t>> members() const;
};

/// Chunked mode: contiguous blocks whose sizes differ by at most one.
/// Random mode: i.i.d. uniform partition ids from the seeded generator.
PartitionPlan partition(const Dataset& s, std::size_t ell, PartitionMode mode,
                        std::uint64_t seed);

struct MrOptions {
    double eps_hat = 0.5; ///< adaptive stopping rule and round-2 search precision
    std::optional<std::size_t> tau_override; ///< fixed per-partition coreset size
    std::uint64_t seed = 0;
    bool random_first_center = false; ///< else each partition starts from its first element
    bool parallel = true;             ///< round-1 tasks run one thread per partition
};

/// Two-round pipeline outcome, with the memory accounting needed to
/// observe the local-memory behavior of the partition-parallel scheme.
struct RunReport {
    ClusteringSolution solution;
    std::vector<std::size_t> coreset_sizes; ///< tau_i per partition
    std::size_t union_size = 0;
    std::size_t peak_local_memory_points = 0; ///< max(ceil(|S|/ell), union_size)
    double round1_seconds = 0.0;
    double round2_seconds = 0.0;
    /// Origin (global) indices of each partition's coreset, in selection
    /// order. GMM prefixes are nested, so for tau <= tau' these lists are
    /// exact prefixes of the tau' lists.
    std::vector<std::vector<std::size_t>> round1_center_origins;
};

/// k-center without outliers: per-partition adaptive GMM (or fixed
/// tau_override), then GMM on the union. Radius recomputed on the full
/// input.
RunReport kcenter_mr(const Dataset& s, std::size_t k, std::size_t ell,
                     const MrOptions& opt);

/// k-center with z outliers, chunked partitions: per-partition weighted
/// coresets with base k+z, then the weighted radius search on the union.
RunReport kcenter_outliers_mr_det(const Dataset& s, std::size_t k, std::size_t z,
                                  std::size_t ell, const MrOptions& opt);

/// Randomized variant: random partition and per-partition base k+z',
/// z' = ceil(6(z/ell + log2 |S|)). With tau_override the experiment form
/// tau = mu*(k + 6z/ell) is used instead.
RunReport kcenter_outliers_mr_rand(const Dataset& s, std::size_t k, std::size_t z,
                                   std::size_t ell, const MrOptions& opt);

/// ceil(6(z/ell + log2 n)); the randomized variant's per-partition
/// outlier allowance.
std::size_t randomized_base_excess(std::size_t z, std::size_t ell, std::size_t n);

} // namespace coreclust
