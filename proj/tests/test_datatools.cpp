#include "doctest.h"
#include "helpers.hpp"

#include "coreclust/datatools.hpp"
#include "coreclust/errors.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace coreclust;
using testutil::line;
using testutil::random_square;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        path = std::string(std::tmpnam(nullptr)) + ".csv";
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("load_dataset formats") {
    TempFile f("0,0\n3,4\n6,8\n");
    Dataset s = load_dataset(f.path);
    CHECK(s.size() == 3);
    CHECK(s.dim() == 2);
    CHECK(s[1][1] == 4.0);

    TempFile ws("0 0\n3\t4\n");
    CHECK(load_dataset(ws.path).size() == 2);

    TempFile hdr("x,y\n1,2\n");
    LoadOptions skip;
    skip.skip_header = true;
    CHECK(load_dataset(hdr.path, skip).size() == 1);

    TempFile wide("1,2,3\n4,5,6\n");
    LoadOptions cols;
    cols.columns = {0, 2};
    Dataset sel = load_dataset(wide.path, cols);
    CHECK(sel.dim() == 2);
    CHECK(sel[1][1] == 6.0);
}

TEST_CASE("load_dataset errors carry row numbers") {
    TempFile ragged("1,2\n3,4,5\n");
    CHECK_THROWS_WITH_AS(load_dataset(ragged.path), doctest::Contains("row 2"),
                         input_error);
    TempFile bad("1,2\nx,4\n");
    CHECK_THROWS_WITH_AS(load_dataset(bad.path), doctest::Contains("row 2"),
                         input_error);
    TempFile empty("");
    CHECK_THROWS_AS(load_dataset(empty.path), input_error);
    CHECK_THROWS_AS(load_dataset("/no/such/file.csv"), input_error);
}

TEST_CASE("save/load round trip is exact") {
    Dataset s = random_square(50, 3, 8);
    TempFile f("");
    save_dataset(s, f.path);
    Dataset back = load_dataset(f.path);
    CHECK(back.coords() == s.coords());
}

TEST_CASE("approx_meb") {
    Dataset s(2);
    s.push_back({-1, 0});
    s.push_back({1, 0});
    MebEstimate m = approx_meb(s);
    CHECK(m.center == Point{0, 0});
    CHECK(m.radius == 1.0);

    Dataset one(2);
    one.push_back({3, 4});
    CHECK(approx_meb(one).radius == 0.0);

    MebEstimate l = approx_meb(line({0, 10}));
    CHECK(l.center == Point{5});
    CHECK(l.radius == 5.0);
}

TEST_CASE("inject_outliers properties") {
    Dataset s = random_square(200, 7, 3);
    MebEstimate meb = approx_meb(s);
    InjectionResult res = inject_outliers(s, 200, 17);
    CHECK(res.data.size() == 400);
    CHECK(res.injected_indices.size() == 200);
    for (std::size_t a = 0; a < res.injected_indices.size(); ++a) {
        auto pa = res.data[res.injected_indices[a]];
        CHECK(distance(pa, meb.center) == doctest::Approx(100 * meb.radius));
        for (std::size_t b = a + 1; b < res.injected_indices.size(); ++b)
            CHECK(distance(pa, res.data[res.injected_indices[b]]) >=
                  10 * meb.radius - 1e-9);
        for (std::size_t i = 0; i < s.size(); ++i)
            CHECK(distance(pa, s[i]) >= 99 * meb.radius);
    }
    // same seed, same outliers
    InjectionResult again = inject_outliers(s, 200, 17);
    CHECK(again.data.coords() == res.data.coords());

    CHECK_THROWS_AS(inject_outliers(line({0, 1, 2}), 3, 0), input_error);
    Dataset flat(2);
    flat.push_back({1, 1});
    flat.push_back({1, 1});
    CHECK_THROWS_AS(inject_outliers(flat, 1, 0), input_error);
}

TEST_CASE("inflate") {
    Dataset s = random_square(40, 2, 5);
    CHECK(inflate(s, 1, 0).size() == 40);
    CHECK(inflate(s, 3, 0).size() == 120);

    // a constant coordinate stays constant
    Dataset mixed(2);
    mixed.push_back({0, 7});
    mixed.push_back({10, 7});
    Dataset infl = inflate(mixed, 100, 1);
    for (std::size_t i = 0; i < infl.size(); ++i) CHECK(infl[i][1] == 7.0);

    // noise variance: sources {0, 10}, sigma = 1; residual to the nearest
    // source has variance ~1 (truncation at 5 sigma is negligible)
    Dataset big = inflate(mixed, 50000, 2);
    double ss = 0.0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        double x = big[i][0];
        double res = x < 5.0 ? x : x - 10.0;
        ss += res * res;
    }
    double var = ss / static_cast<double>(big.size());
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("shuffled is a seeded permutation") {
    Dataset s = random_square(60, 2, 0);
    Dataset a = shuffled(s, 1);
    Dataset b = shuffled(s, 1);
    Dataset c = shuffled(s, 2);
    CHECK(a.coords() == b.coords());
    CHECK(a.coords() != c.coords());
    std::vector<double> sa = a.coords(), ss = s.coords();
    std::sort(sa.begin(), sa.end());
    std::sort(ss.begin(), ss.end());
    CHECK(sa == ss);
}
