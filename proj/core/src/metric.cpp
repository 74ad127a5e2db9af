#include "coreclust/metric.hpp"

#include "coreclust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace coreclust {

void Dataset::push_back(std::span<const double> p) {
    if (dim_ == 0) dim_ = p.size();
    if (p.size() != dim_)
        throw input_error("point dimension " + std::to_string(p.size()) +
                          " does not match dataset dimension " + std::to_string(dim_));
    if (dim_ == 0) throw input_error("zero-dimensional point");
    for (double c : p)
        if (!std::isfinite(c)) throw input_error("non-finite coordinate");
    coords_.insert(coords_.end(), p.begin(), p.end());
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
    Dataset out(dim_);
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back((*this)[i]);
    return out;
}

Dataset Dataset::from_points(const std::vector<Point>& pts) {
    Dataset out;
    for (const auto& p : pts) out.push_back(std::span<const double>(p.data(), p.size()));
    return out;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw input_error("distance between points of dimension " +
                          std::to_string(a.size()) + " and " + std::to_string(b.size()));
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

double distance(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(squared_distance(a, b));
}

namespace {

// min distance from each point of s to the center set
std::vector<double> distances_to_centers(const Dataset& s, const Dataset& centers) {
    if (centers.empty()) throw input_error("empty center set");
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < centers.size(); ++c)
            best = std::min(best, squared_distance(s[i], centers[c]));
        out[i] = std::sqrt(best);
    }
    return out;
}

RadiusReport report_from_distances(const std::vector<double>& d, std::size_t z) {
    if (z >= d.size())
        throw input_error("z = " + std::to_string(z) + " must be smaller than |S| = " +
                          std::to_string(d.size()));
    RadiusReport rep;
    if (z > 0) {
        // z farthest points, ties broken by lower index first
        std::vector<std::size_t> order(d.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
        rep.excluded_indices.assign(order.begin(), order.begin() + z);
        std::sort(rep.excluded_indices.begin(), rep.excluded_indices.end());
    }
    std::vector<char> excluded(d.size(), 0);
    for (std::size_t i : rep.excluded_indices) excluded[i] = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (excluded[i]) continue;
        if (d[i] > best) {
            best = d[i];
            rep.witness_index = i;
        }
    }
    rep.radius = best;
    return rep;
}

} // namespace

RadiusReport radius(const Dataset& s, const Dataset& centers) {
    return report_from_distances(distances_to_centers(s, centers), 0);
}

RadiusReport radius(const Dataset& s, std::span<const std::size_t> centers) {
    return radius(s, s.subset(centers));
}

RadiusReport radius_with_outliers(const Dataset& s, const Dataset& centers,
                                  std::size_t z) {
    return report_from_distances(distances_to_centers(s, centers), z);
}

RadiusReport radius_with_outliers(const Dataset& s,
                                  std::span<const std::size_t> centers,
                                  std::size_t z) {
    return radius_with_outliers(s, s.subset(centers), z);
}

} // namespace coreclust
