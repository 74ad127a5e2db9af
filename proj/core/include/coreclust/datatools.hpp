#pragma once

#include "coreclust/metric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace coreclust {

struct LoadOptions {
    bool skip_header = false;
    std::vector<std::size_t> columns; ///< empty = all columns
};

/// Reads a numeric table (comma- or whitespace-separated). Ragged rows,
/// non-numeric fields and empty files are input errors reported with the
/// offending row number.
Dataset load_dataset(const std::string& path, const LoadOptions& opt = {});

void save_dataset(const Dataset& s, const std::string& path);

struct MebEstimate {
    Point center;       ///< not necessarily a dataset point
    double radius = 0.0;
    std::string method; ///< "mean-center" (a <=2-approximation of the true MEB)
};

/// Center = coordinate-wise mean, radius = max distance from it. Coarse,
/// but the outlier injection below only needs the order of magnitude.
MebEstimate approx_meb(const Dataset& s);

struct InjectionResult {
    Dataset data;                         ///< input plus z appended outliers
    std::vector<std::size_t> injected_indices;
    MebEstimate meb;
};

/// Appends z points at distance 100*r_MEB from the MEB center along
/// seeded uniform random directions, rejection-resampling any candidate
/// within 10*r_MEB of a previously injected point. Both distance
/// properties (>= 99*r_MEB from every original point, >= 10*r_MEB
/// pairwise) are asserted per run. In dimension 1 only z <= 2 is
/// satisfiable.
InjectionResult inject_outliers(const Dataset& s, std::size_t z, std::uint64_t seed);

/// SMOTE-style inflation: h*|S| points, each a seeded uniformly sampled
/// original point plus per-coordinate Gaussian noise with sigma_j equal
/// to 10% of coordinate j's range over the original dataset.
Dataset inflate(const Dataset& s, std::size_t h, std::uint64_t seed);

/// The dataset in a seeded uniformly random order.
Dataset shuffled(const Dataset& s, std::uint64_t seed);

} // namespace coreclust
