#include "coreclust/streaming.hpp"

#include "coreclust/errors.hpp"
#include "coreclust/outliers_cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace coreclust {

std::size_t choose_tau(std::size_t k, std::size_t z, double eps_hat, double d_dim) {
    if (!(eps_hat > 0.0) || eps_hat > 1.0)
        throw input_error("eps_hat must be in (0, 1]");
    if (d_dim < 0.0) throw input_error("doubling dimension must be nonnegative");
    double v = std::ceil(static_cast<double>(k + z) * std::pow(16.0 / eps_hat, d_dim));
    if (!(v < 1e15))
        throw input_error("capacity overflow: (k+z)*(16/eps)^D too large");
    return static_cast<std::size_t>(v);
}

DoublingSketch::DoublingSketch(std::size_t dim, std::size_t tau)
    : tau_(tau), centers_(dim), init_buffer_(dim) {
    if (tau < 1) throw input_error("tau must be positive");
}

// Fold the later of any center pair closer than 4*phi into the earlier.
void DoublingSketch::merge_scan() {
    const double thr = 4.0 * phi_;
    std::size_t m = centers_.size();
    std::vector<char> dead(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (dead[i]) continue;
        for (std::size_t j = i + 1; j < m; ++j) {
            if (dead[j]) continue;
            if (distance(centers_[i], centers_[j]) <= thr) {
                weights_[i] += weights_[j];
                dead[j] = 1;
            }
        }
    }
    Dataset kept(centers_.dim());
    std::vector<std::uint64_t> kept_w;
    for (std::size_t i = 0; i < m; ++i)
        if (!dead[i]) {
            kept.push_back(centers_[i]);
            kept_w.push_back(weights_[i]);
        }
    centers_ = std::move(kept);
    weights_ = std::move(kept_w);
}

void DoublingSketch::enforce_capacity() {
    if (centers_.size() <= tau_) return;
    if (phi_ == 0.0) {
        // first overflow: derive phi from the current (distinct) centers
        double min_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < centers_.size(); ++i)
            for (std::size_t j = i + 1; j < centers_.size(); ++j)
                min_d = std::min(min_d, distance(centers_[i], centers_[j]));
        phi_ = min_d / 2.0;
    }
    // Reinforce the separation invariant at the current phi before any
    // doubling: the closest pair sits at distance 2*phi <= 4*phi, so this
    // always merges at least one pair at initialization, and doubling only
    // ever happens with tau+1 centers pairwise above 4*phi — which is what
    // keeps phi a lower bound on the tau-center radius of the prefix.
    merge_scan();
    while (centers_.size() > tau_) {
        phi_ *= 2.0;
        merge_scan();
    }
}

void DoublingSketch::initialize() {
    // pre-merge exact duplicates so phi is derived from distinct points
    for (std::size_t i = 0; i < init_buffer_.size(); ++i) {
        bool dup = false;
        for (std::size_t c = 0; c < centers_.size() && !dup; ++c)
            if (distance(init_buffer_[i], centers_[c]) == 0.0) {
                weights_[c] += 1;
                dup = true;
            }
        if (!dup) {
            centers_.push_back(init_buffer_[i]);
            weights_.push_back(1);
        }
    }
    init_buffer_ = Dataset(centers_.dim());

    // phi stays 0 while the distinct points fit within the capacity:
    // tau centers then cover everything seen at radius 0
    enforce_capacity();
    initialized_ = true;
}

StreamEvent DoublingSketch::update(std::span<const double> s) {
    ++points_seen_;
    StreamEvent ev;
    if (!initialized_) {
        init_buffer_.push_back(s);
        ev.initializing = true;
        if (init_buffer_.size() == tau_ + 1) initialize();
        return ev;
    }

    // nearest center, ties to the earlier one
    std::size_t nearest = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers_.size(); ++c) {
        double d = distance(s, centers_[c]);
        if (d < best) {
            best = d;
            nearest = c;
        }
    }

    ev.dist = best;
    ev.phi_at_absorb = phi_;
    if (best <= 8.0 * phi_) {
        weights_[nearest] += 1;
        ev.center_pos = nearest;
    } else {
        ev.new_center = true;
        ev.center_pos = centers_.size();
        centers_.push_back(s);
        weights_.push_back(1);
        enforce_capacity();
    }
    return ev;
}

Coreset DoublingSketch::coreset() const {
    Coreset out;
    out.points = centers_;
    out.weights = weights_;
    for (std::size_t i = 0; i < init_buffer_.size(); ++i) {
        out.points.push_back(init_buffer_[i]);
        out.weights.push_back(1);
    }
    out.origin_indices.resize(out.weights.size());
    for (std::size_t i = 0; i < out.origin_indices.size(); ++i)
        out.origin_indices[i] = i;
    out.source_size = static_cast<std::size_t>(points_seen_);
    return out;
}

namespace {

ClusteringSolution finish_outliers(const Dataset& stream, const Coreset& t,
                                   std::size_t k, std::size_t z, double eps_hat) {
    ClusteringSolution sol = solve_weighted(t, k, z, eps_hat);
    sol.radius = radius_with_outliers(stream, sol.centers, z).radius;
    return sol;
}

} // namespace

ClusteringSolution stream_solve_outliers(const Dataset& stream, const StreamConfig& cfg) {
    if (stream.empty()) throw input_error("empty stream");
    if (cfg.tau < cfg.k + cfg.z) throw input_error("tau must be at least k+z");

    ClusteringSolution sol;
    if (stream.size() <= cfg.tau + 1) {
        // short stream: everything fits, no sketch needed
        sol = finish_outliers(stream, unit_coreset(stream), cfg.k, cfg.z, cfg.eps_hat);
    } else {
        DoublingSketch sketch(stream.dim(), cfg.tau);
        for (std::size_t i = 0; i < stream.size(); ++i) sketch.update(stream[i]);
        sol = finish_outliers(stream, sketch.coreset(), cfg.k, cfg.z, cfg.eps_hat);
    }
    sol.algorithm = "outliers-stream";
    sol.params = {cfg.k, cfg.z, 1, cfg.eps_hat, {}, cfg.tau};
    return sol;
}

ClusteringSolution stream_kcenter_no_outliers(const Dataset& stream, std::size_t k,
                                              std::size_t tau) {
    if (stream.empty()) throw input_error("empty stream");
    if (tau < k) throw input_error("tau must be at least k");

    Dataset coreset_points;
    if (stream.size() <= tau + 1) {
        coreset_points = stream;
    } else {
        DoublingSketch sketch(stream.dim(), tau);
        for (std::size_t i = 0; i < stream.size(); ++i) sketch.update(stream[i]);
        coreset_points = sketch.coreset().points;
    }
    GmmTrace trace = gmm(coreset_points, std::min(k, coreset_points.size()));

    ClusteringSolution sol;
    sol.centers = coreset_points.subset(trace.center_indices);
    sol.radius = radius(stream, sol.centers).radius;
    sol.algorithm = "kcenter-stream";
    sol.params = {k, 0, 1, 0.0, {}, tau};
    return sol;
}

ClusteringSolution two_pass_oblivious(const Dataset& stream, std::size_t k,
                                      std::size_t z, double eps) {
    if (stream.empty()) throw input_error("empty stream");
    if (!(eps > 0.0) || eps > 1.0) throw input_error("eps must be in (0, 1]");

    const double eps_hat = eps / 6.0;
    ClusteringSolution sol;
    if (stream.size() <= k + z + 1) {
        sol = finish_outliers(stream, unit_coreset(stream), k, z, eps_hat);
    } else {
        // pass 1: doubling sketch at capacity k+z; r_hat = 8*phi
        DoublingSketch sketch(stream.dim(), k + z);
        for (std::size_t i = 0; i < stream.size(); ++i) sketch.update(stream[i]);
        double r_hat = 8.0 * sketch.phi();

        if (r_hat == 0.0) {
            // all points identical
            sol.centers = Dataset(stream.dim());
            sol.centers.push_back(stream[0]);
            sol.radius = radius_with_outliers(stream, sol.centers, z).radius;
        } else {
            // pass 2: maximal subset with mutual separation above sep,
            // weighting each kept point by the points it proxies
            const double sep = (eps / 48.0) * r_hat;
            Coreset t;
            t.points = Dataset(stream.dim());
            for (std::size_t i = 0; i < stream.size(); ++i) {
                std::size_t nearest = t.size();
                double best = std::numeric_limits<double>::infinity();
                for (std::size_t c = 0; c < t.size(); ++c) {
                    double d = distance(stream[i], t.points[c]);
                    if (d < best) {
                        best = d;
                        nearest = c;
                    }
                }
                if (t.size() == 0 || best > sep) {
                    t.points.push_back(stream[i]);
                    t.weights.push_back(1);
                    t.origin_indices.push_back(i);
                } else {
                    t.weights[nearest] += 1;
                }
            }
            t.source_size = stream.size();
            sol = finish_outliers(stream, t, k, z, eps_hat);
        }
    }
    sol.algorithm = "two-pass";
    sol.z = z;
    sol.params = {k, z, 1, eps_hat, {}, {}};
    return sol;
}

} // namespace coreclust
