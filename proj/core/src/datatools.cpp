#include "coreclust/datatools.hpp"

#include "coreclust/errors.hpp"
#include "coreclust/rng.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace coreclust {

namespace {

std::vector<double> parse_row(const std::string& line, std::size_t row_no) {
    std::vector<double> out;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == ',' || *p == '\r')) ++p;
        if (p >= end) break;
        double v;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc{})
            throw input_error("row " + std::to_string(row_no) + ": non-numeric field");
        out.push_back(v);
        p = next;
    }
    return out;
}

} // namespace

Dataset load_dataset(const std::string& path, const LoadOptions& opt) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);

    Dataset out;
    std::string line;
    std::size_t row_no = 0;
    bool skipped = !opt.skip_header;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++row_no;
        if (!skipped) {
            skipped = true;
            continue;
        }
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::vector<double> row = parse_row(line, row_no);
        if (!opt.columns.empty()) {
            std::vector<double> sel;
            for (std::size_t c : opt.columns) {
                if (c >= row.size())
                    throw input_error("row " + std::to_string(row_no) + ": column " +
                                      std::to_string(c) + " out of range");
                sel.push_back(row[c]);
            }
            row = std::move(sel);
        }
        if (dim == 0) dim = row.size();
        if (row.size() != dim)
            throw input_error("row " + std::to_string(row_no) + ": expected " +
                              std::to_string(dim) + " fields, got " +
                              std::to_string(row.size()));
        out.push_back(std::span<const double>(row.data(), row.size()));
    }
    if (out.empty()) throw input_error(path + ": no data rows");
    return out;
}

void save_dataset(const Dataset& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out.precision(17);
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto p = s[i];
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) out << ',';
            out << p[j];
        }
        out << '\n';
    }
}

MebEstimate approx_meb(const Dataset& s) {
    if (s.empty()) throw input_error("approx_meb on an empty dataset");
    MebEstimate est;
    est.method = "mean-center";
    est.center.assign(s.dim(), 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto p = s[i];
        for (std::size_t j = 0; j < s.dim(); ++j) est.center[j] += p[j];
    }
    for (double& c : est.center) c /= static_cast<double>(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        est.radius = std::max(est.radius, distance(s[i], est.center));
    return est;
}

InjectionResult inject_outliers(const Dataset& s, std::size_t z, std::uint64_t seed) {
    if (z < 1) throw input_error("z must be at least 1");
    MebEstimate meb = approx_meb(s);
    if (meb.radius <= 0.0) throw input_error("degenerate dataset: r_MEB is zero");
    if (s.dim() == 1 && z > 2)
        throw input_error("dimension 1 admits at most 2 separated outliers");

    const double shell = 100.0 * meb.radius;
    const double min_sep = 10.0 * meb.radius;
    auto gen = substream(seed, "inject");
    std::normal_distribution<double> gauss(0.0, 1.0);

    InjectionResult res;
    res.meb = meb;
    res.data = s;
    Dataset injected(s.dim());
    while (injected.size() < z) {
        // uniform direction on the sphere
        Point dir(s.dim());
        double norm = 0.0;
        for (double& c : dir) {
            c = gauss(gen);
            norm += c * c;
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        Point cand(s.dim());
        for (std::size_t j = 0; j < s.dim(); ++j)
            cand[j] = meb.center[j] + shell * dir[j] / norm;
        bool ok = true;
        for (std::size_t i = 0; i < injected.size() && ok; ++i)
            if (distance(injected[i], cand) < min_sep) ok = false;
        if (!ok) continue;
        injected.push_back(std::span<const double>(cand.data(), cand.size()));
    }

    for (std::size_t i = 0; i < injected.size(); ++i) {
        res.injected_indices.push_back(res.data.size());
        res.data.push_back(injected[i]);
        // both stated distance properties, verified on every run
        for (std::size_t j = 0; j < s.size(); ++j)
            if (distance(injected[i], s[j]) < 99.0 * meb.radius)
                throw std::logic_error("injected outlier too close to the dataset");
        for (std::size_t j = 0; j < i; ++j)
            if (distance(injected[i], injected[j]) < min_sep)
                throw std::logic_error("injected outliers too close together");
    }
    return res;
}

Dataset inflate(const Dataset& s, std::size_t h, std::uint64_t seed) {
    if (s.empty()) throw input_error("inflate on an empty dataset");
    if (h < 1) throw input_error("h must be at least 1");

    std::vector<double> sigma(s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t i = 0; i < s.size(); ++i) {
            lo = std::min(lo, s[i][j]);
            hi = std::max(hi, s[i][j]);
        }
        sigma[j] = 0.1 * (hi - lo);
    }

    auto gen = substream(seed, "inflate");
    std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Dataset out(s.dim());
    out.reserve(h * s.size());
    Point buf(s.dim());
    for (std::size_t i = 0; i < h * s.size(); ++i) {
        auto src = s[pick(gen)];
        for (std::size_t j = 0; j < s.dim(); ++j)
            buf[j] = src[j] + (sigma[j] > 0.0 ? sigma[j] * gauss(gen) : 0.0);
        out.push_back(std::span<const double>(buf.data(), buf.size()));
    }
    return out;
}

Dataset shuffled(const Dataset& s, std::uint64_t seed) {
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto gen = substream(seed, "shuffle");
    std::shuffle(order.begin(), order.end(), gen);
    return s.subset(order);
}

} // namespace coreclust
