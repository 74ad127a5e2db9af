#pragma once

#include "coreclust/metric.hpp"

#include <cstdint>
#include <random>

namespace testutil {

// i.i.d. uniform points in [0, side]^dim
inline coreclust::Dataset random_square(std::size_t n, std::size_t dim,
                                        std::uint64_t seed, double side = 10.0) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, side);
    coreclust::Dataset out(dim);
    coreclust::Point p(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (double& c : p) c = u(gen);
        out.push_back(std::span<const double>(p.data(), p.size()));
    }
    return out;
}

// planted Gaussian clusters: `clusters` centers uniform in [0, 100]^dim,
// points split evenly, per-coordinate noise sd `sd`
inline coreclust::Dataset planted_clusters(std::size_t n, std::size_t dim,
                                           std::size_t clusters, std::uint64_t seed,
                                           double sd = 1.0) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    std::normal_distribution<double> gauss(0.0, sd);
    std::vector<coreclust::Point> ctrs(clusters, coreclust::Point(dim));
    for (auto& c : ctrs)
        for (double& v : c) v = u(gen);
    coreclust::Dataset out(dim);
    coreclust::Point p(dim);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = ctrs[i % clusters];
        for (std::size_t j = 0; j < dim; ++j) p[j] = c[j] + gauss(gen);
        out.push_back(std::span<const double>(p.data(), p.size()));
    }
    return out;
}

inline coreclust::Dataset line(std::initializer_list<double> xs) {
    coreclust::Dataset out(1);
    for (double x : xs) out.push_back({x});
    return out;
}

} // namespace testutil
