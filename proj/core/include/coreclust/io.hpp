#pragma once

#include "coreclust/mapreduce.hpp"
#include "coreclust/solution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coreclust {

/// One benchmark measurement. approximation_ratio is filled in after the
/// fact as radius / best-radius-for-the-same-configuration, so it is >= 1
/// by construction.
struct BenchRecord {
    std::string dataset;
    std::string algorithm;
    std::size_t k = 1;
    std::size_t z = 0;
    std::size_t ell = 1;
    std::optional<double> mu;
    std::optional<double> eps_hat;
    std::uint64_t seed = 0;
    double radius = 0.0;
    double approximation_ratio = 1.0;
    double round1_seconds = 0.0;
    double round2_seconds = 0.0;
    double total_seconds = 0.0;
    std::optional<double> throughput; ///< points/second, streaming only
    std::size_t peak_local_memory_points = 0;
};

/// JSON document for a solution. Deterministic for a fixed seed and
/// input: timings are only included when requested, so seeded runs are
/// byte-reproducible.
std::string solution_to_json(const ClusteringSolution& sol,
                             const RunReport* report = nullptr,
                             bool include_times = false);

/// Reads back the centers of a solution document (round-trip re-scoring).
Dataset centers_from_json(const std::string& json_text);
double radius_from_json(const std::string& json_text);

std::string bench_record_to_json(const BenchRecord& rec);
std::string bench_csv_header();
std::string bench_record_to_csv(const BenchRecord& rec);

/// mean +/- 1.96 * sample_std / sqrt(n)
struct MeanCi {
    double mean = 0.0;
    double half_width = 0.0;
    std::size_t n = 0;
};
MeanCi mean_ci(const std::vector<double>& xs);

} // namespace coreclust
