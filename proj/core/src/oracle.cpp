#include "coreclust/oracle.hpp"

#include "coreclust/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace coreclust {

namespace {

// C(n, k), saturating at the cap
std::uint64_t choose_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    long double acc = 1.0L;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(cap) * 2.0L) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc + 0.5L);
}

template <typename Eval>
OracleResult enumerate_subsets(const Dataset& s, std::size_t k, std::uint64_t budget,
                               Eval eval) {
    if (s.empty()) throw input_error("oracle on an empty dataset");
    if (k < 1 || k > s.size()) throw input_error("k out of range");
    std::uint64_t total = choose_capped(s.size(), k, budget);
    if (total > budget)
        throw budget_error("C(" + std::to_string(s.size()) + ", " + std::to_string(k) +
                           ") exceeds enumeration budget " + std::to_string(budget));

    OracleResult res;
    res.opt_radius = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> comb(k);
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    const std::size_t n = s.size();
    while (true) {
        ++res.enumerated;
        double r = eval(comb);
        // strict improvement keeps the lexicographically lowest witness
        if (r < res.opt_radius) {
            res.opt_radius = r;
            res.opt_centers = comb;
        }
        // next combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && comb[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return res;
}

} // namespace

OracleResult brute_force_kcenter(const Dataset& s, std::size_t k, std::uint64_t budget) {
    return enumerate_subsets(s, k, budget, [&](const std::vector<std::size_t>& comb) {
        return radius(s, comb).radius;
    });
}

OracleResult brute_force_kcenter_outliers(const Dataset& s, std::size_t k, std::size_t z,
                                          std::uint64_t budget) {
    if (z >= s.size()) throw input_error("z must be smaller than |S|");
    return enumerate_subsets(s, k, budget, [&](const std::vector<std::size_t>& comb) {
        return radius_with_outliers(s, comb, z).radius;
    });
}

} // namespace coreclust
