#include "coreclust/io.hpp"

#include "coreclust/errors.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace coreclust {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

ordered params_to_json(const SolveParams& p) {
    ordered j;
    j["k"] = p.k;
    j["z"] = p.z;
    j["ell"] = p.ell;
    j["eps_hat"] = p.eps_hat;
    if (p.mu) j["mu"] = *p.mu;
    if (p.tau) j["tau"] = *p.tau;
    return j;
}

} // namespace

std::string solution_to_json(const ClusteringSolution& sol, const RunReport* report,
                             bool include_times) {
    ordered j;
    j["algorithm"] = sol.algorithm;
    j["params"] = params_to_json(sol.params);
    j["seed"] = sol.seed;
    j["radius"] = sol.radius;
    j["z"] = sol.z;
    ordered centers = ordered::array();
    for (std::size_t i = 0; i < sol.centers.size(); ++i) {
        ordered c = ordered::array();
        for (double v : sol.centers[i]) c.push_back(v);
        centers.push_back(std::move(c));
    }
    j["centers"] = std::move(centers);
    if (report) {
        j["coreset_sizes"] = report->coreset_sizes;
        j["union_size"] = report->union_size;
        j["peak_local_memory_points"] = report->peak_local_memory_points;
        if (include_times) {
            j["round1_seconds"] = report->round1_seconds;
            j["round2_seconds"] = report->round2_seconds;
        }
    }
    return j.dump();
}

Dataset centers_from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    Dataset out;
    for (const auto& c : j.at("centers")) {
        std::vector<double> p = c.get<std::vector<double>>();
        out.push_back(std::span<const double>(p.data(), p.size()));
    }
    return out;
}

double radius_from_json(const std::string& json_text) {
    return json::parse(json_text).at("radius").get<double>();
}

std::string bench_record_to_json(const BenchRecord& rec) {
    ordered j;
    j["dataset"] = rec.dataset;
    j["algorithm"] = rec.algorithm;
    j["k"] = rec.k;
    j["z"] = rec.z;
    j["ell"] = rec.ell;
    if (rec.mu) j["mu"] = *rec.mu;
    if (rec.eps_hat) j["eps_hat"] = *rec.eps_hat;
    j["seed"] = rec.seed;
    j["radius"] = rec.radius;
    j["approximation_ratio"] = rec.approximation_ratio;
    j["round1_seconds"] = rec.round1_seconds;
    j["round2_seconds"] = rec.round2_seconds;
    j["total_seconds"] = rec.total_seconds;
    if (rec.throughput) j["throughput"] = *rec.throughput;
    j["peak_local_memory_points"] = rec.peak_local_memory_points;
    return j.dump();
}

std::string bench_csv_header() {
    return "dataset,algorithm,k,z,ell,mu,eps_hat,seed,radius,approximation_ratio,"
           "round1_seconds,round2_seconds,total_seconds,throughput,"
           "peak_local_memory_points";
}

std::string bench_record_to_csv(const BenchRecord& rec) {
    std::ostringstream out;
    out.precision(17);
    out << rec.dataset << ',' << rec.algorithm << ',' << rec.k << ',' << rec.z << ','
        << rec.ell << ',';
    if (rec.mu) out << *rec.mu;
    out << ',';
    if (rec.eps_hat) out << *rec.eps_hat;
    out << ',' << rec.seed << ',' << rec.radius << ',' << rec.approximation_ratio << ','
        << rec.round1_seconds << ',' << rec.round2_seconds << ',' << rec.total_seconds
        << ',';
    if (rec.throughput) out << *rec.throughput;
    out << ',' << rec.peak_local_memory_points;
    return out.str();
}

MeanCi mean_ci(const std::vector<double>& xs) {
    MeanCi ci;
    ci.n = xs.size();
    if (xs.empty()) return ci;
    double sum = 0.0;
    for (double x : xs) sum += x;
    ci.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - ci.mean) * (x - ci.mean);
        double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
        ci.half_width = 1.96 * sd / std::sqrt(static_cast<double>(xs.size()));
    }
    return ci;
}

} // namespace coreclust
