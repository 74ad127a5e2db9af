#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace coreclust {

using Point = std::vector<double>;

/// A fixed-dimension set of points under Euclidean distance, stored
/// contiguously. Immutable once loaded (solvers never mutate it), so it
/// is safe to share across threads.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    bool empty() const { return coords_.empty(); }

    std::span<const double> operator[](std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    Point point(std::size_t i) const {
        auto p = (*this)[i];
        return Point(p.begin(), p.end());
    }

    /// Appends a point; rejects dimension mismatches and non-finite coordinates.
    void push_back(std::span<const double> p);
    void push_back(std::initializer_list<double> p) {
        push_back(std::span<const double>(p.begin(), p.size()));
    }

    void reserve(std::size_t n) { coords_.reserve(n * dim_); }
    const std::vector<double>& coords() const { return coords_; }

    Dataset subset(std::span<const std::size_t> indices) const;

    static Dataset from_points(const std::vector<Point>& pts);

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

double distance(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

/// Radius of a dataset with respect to a center set, optionally excluding
/// the z points farthest from the centers.
struct RadiusReport {
    double radius = 0.0;
    std::size_t witness_index = 0; ///< point attaining the max
    std::vector<std::size_t> excluded_indices; ///< the z discarded points
};

/// max over s in S of min over t in centers of d(s, t). Centers given as
/// indices into S; throws input_error if empty.
RadiusReport radius(const Dataset& s, std::span<const std::size_t> centers);

/// Same, but centers given as explicit points (they need not belong to S).
RadiusReport radius(const Dataset& s, const Dataset& centers);

/// Discards the z points farthest from the centers (ties broken by lower
/// index) and reports the max over the rest. z = 0 reduces to radius().
RadiusReport radius_with_outliers(const Dataset& s,
                                  std::span<const std::size_t> centers,
                                  std::size_t z);
RadiusReport radius_with_outliers(const Dataset& s, const Dataset& centers,
                                  std::size_t z);

} // namespace coreclust
