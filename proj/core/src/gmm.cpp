#include "coreclust/gmm.hpp"

#include "coreclust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coreclust {

namespace {

struct GmmState {
    GmmState(const Dataset& x, std::size_t first_center)
        : x(x), dist(x.size()), assign(x.size(), 0) {
        trace.center_indices.push_back(first_center);
        auto fc = x[first_center];
        double worst = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            dist[i] = distance(x[i], fc);
            worst = std::max(worst, dist[i]);
        }
        trace.radii.push_back(worst);
    }

    // Adds the farthest point (ties to the lower index) as the next center.
    void step() {
        std::size_t next = 0;
        double far = -1.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (dist[i] > far) {
                far = dist[i];
                next = i;
            }
        std::size_t pos = trace.center_indices.size();
        trace.center_indices.push_back(next);
        auto c = x[next];
        double worst = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double d = distance(x[i], c);
            if (d < dist[i]) { // strict: ties stay on the earlier center
                dist[i] = d;
                assign[i] = pos;
            }
            worst = std::max(worst, dist[i]);
        }
        trace.radii.push_back(worst);
    }

    GmmTrace finish() {
        trace.assignment = std::move(assign);
        return std::move(trace);
    }

    const Dataset& x;
    std::vector<double> dist;
    std::vector<std::size_t> assign;
    GmmTrace trace;
};

void check_args(const Dataset& x, std::size_t count, std::size_t first_center,
                const char* what) {
    if (x.empty()) throw input_error("gmm on an empty dataset");
    if (count < 1 || count > x.size())
        throw input_error(std::string(what) + " = " + std::to_string(count) +
                          " out of range for |X| = " + std::to_string(x.size()));
    if (first_center >= x.size()) throw input_error("first_center out of range");
}

} // namespace

GmmTrace gmm(const Dataset& x, std::size_t tau, std::size_t first_center) {
    check_args(x, tau, first_center, "tau");
    GmmState st(x, first_center);
    while (st.trace.size() < tau) st.step();
    return st.finish();
}

GmmTrace gmm_adaptive(const Dataset& x, std::size_t base, double eps_hat,
                      std::size_t first_center) {
    check_args(x, base, first_center, "base");
    if (!(eps_hat > 0.0) || eps_hat > 1.0)
        throw input_error("eps_hat must be in (0, 1]");
    GmmState st(x, first_center);
    while (st.trace.size() < base) st.step();
    double target = (eps_hat / 2.0) * st.trace.radii[base - 1];
    while (st.trace.radii.back() > target && st.trace.size() < x.size()) st.step();
    return st.finish();
}

std::uint64_t Coreset::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
}

Coreset build_weighted_coreset(const Dataset& x, const GmmTrace& trace) {
    Coreset out;
    out.points = Dataset(x.dim());
    out.source_size = x.size();
    out.weights.assign(trace.size(), 0);
    for (std::size_t c : trace.center_indices) {
        out.points.push_back(x[c]);
        out.origin_indices.push_back(c);
    }
    for (std::size_t pos : trace.assignment) out.weights[pos] += 1;
    return out;
}

Coreset unit_coreset(const Dataset& s) {
    Coreset out;
    out.points = s;
    out.source_size = s.size();
    out.weights.assign(s.size(), 1);
    out.origin_indices.resize(s.size());
    std::iota(out.origin_indices.begin(), out.origin_indices.end(), std::size_t{0});
    return out;
}

void append_coreset(Coreset& into, const Coreset& part,
                    std::span<const std::size_t> origin_map) {
    if (into.points.dim() == 0) into.points = Dataset(part.points.dim());
    for (std::size_t i = 0; i < part.size(); ++i) {
        into.points.push_back(part.points[i]);
        into.weights.push_back(part.weights[i]);
        into.origin_indices.push_back(origin_map[part.origin_indices[i]]);
    }
    into.source_size += part.source_size;
}

} // namespace coreclust
