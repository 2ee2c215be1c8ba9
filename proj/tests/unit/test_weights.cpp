#include <cmath>

#include "doctest.h"
#include "gcw/weights.hpp"

using namespace gcw;

namespace {

WeightOptions opts(long long samples, uint64_t seed, Gauge g = Gauge::FirstTwo) {
    WeightOptions o;
    o.samples = samples;
    o.seed = seed;
    o.gauge = g;
    return o;
}

bool agree(const WeightEstimate& a, const WeightEstimate& b, double k = 4) {
    return std::abs(a.value - b.value) <= k * std::hypot(a.std_error, b.std_error);
}

}  // namespace

TEST_CASE("configuration space dimensions") {
    CHECK(config_dimension(2, 0) == 0);
    CHECK(config_dimension(1, 1) == 1);
    CHECK(config_dimension(3, 1) == 3);
    std::mt19937_64 rng(3);
    for (auto gauge : {Gauge::FirstTwo, Gauge::FirstLast}) {
        auto c = sample_configuration(2, 0, gauge, rng);
        CHECK(c.coords.empty());
        REQUIRE(c.z.size() == 2);
        CHECK(c.z[0] == std::complex<double>(0, 0));
        CHECK(c.z[1] == std::complex<double>(1, 0));
        auto d = sample_configuration(1, 1, gauge, rng);
        CHECK(d.coords.size() == 1);
        CHECK(std::abs(std::abs(d.z[1]) - 1) < 1e-12);
        for (int i = 0; i < 50; ++i) {
            auto e = sample_configuration(3, 2, gauge, rng);
            CHECK(int(e.coords.size()) == config_dimension(3, 2));
            CHECK(e.density > 0);
            CHECK(e.z[0].real() < e.z[1].real());
            CHECK(e.z[1].real() < e.z[2].real());
        }
    }
}

TEST_CASE("weights that vanish for structural reasons are exact") {
    auto mismatch = weight(make_graph(Kind::TwoOrdered, 3, 1, {{0, 3}, {1, 3}}), opts(1000, 1));
    CHECK(mismatch.value == 0);
    CHECK(mismatch.samples == 0);
    auto doubled = weight(make_graph(Kind::TwoLabelled, 2, 1, {{0, 2}, {0, 2}}), opts(1000, 1));
    CHECK(doubled.value == 0);
    CHECK(doubled.samples == 0);
    CHECK_THROWS_AS(weight(make_graph(Kind::One, 0, 2, {{0, 1}}), opts(10, 1)), WeightError);
    CHECK_THROWS_AS(weight(make_graph(Kind::TwoOrdered, 0, 2, {{0, 1}}), opts(10, 1)), WeightError);
}

TEST_CASE("anchors") {
    CHECK(weight(d_ww(), opts(1000, 1)).value == 1);
    auto wb = weight(d_wb(), opts(1000, 1));
    CHECK(std::abs(wb.value - 1) < 1e-12);
}

TEST_CASE("estimates are reproducible from the seed") {
    auto a = weight(three_graph(), opts(50000, 9));
    auto b = weight(three_graph(), opts(50000, 9));
    auto c = weight(three_graph(), opts(50000, 10));
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    CHECK(a.value != c.value);
    CHECK(agree(a, c));
}

TEST_CASE("doubling the samples shrinks the error by about 1/sqrt 2") {
    double ratio = 0;
    for (uint64_t s = 1; s <= 10; ++s) {
        auto a = weight(three_graph(), opts(20000, s));
        auto b = weight(three_graph(), opts(40000, s + 100));
        ratio += b.std_error / a.std_error / 10;
    }
    CHECK(ratio > 1 / std::sqrt(2.0) - 0.15);
    CHECK(ratio < 1 / std::sqrt(2.0) + 0.15);
}

TEST_CASE("estimates do not depend on the gauge") {
    auto a = weight(three_graph(), opts(200000, 1, Gauge::FirstTwo));
    auto b = weight(three_graph(), opts(200000, 1, Gauge::FirstLast));
    CHECK(std::abs(a.value - b.value) <= 3 * std::hypot(a.std_error, b.std_error));
    Graph g = make_graph(Kind::TwoOrdered, 2, 1, {{0, 2}, {1, 2}});
    auto c = weight(g, opts(200000, 2, Gauge::FirstTwo));
    auto d = weight(g, opts(200000, 2, Gauge::FirstLast));
    CHECK(agree(c, d));
}

TEST_CASE("relabelling blacks leaves the estimate unchanged") {
    Graph g = make_graph(Kind::TwoOrdered, 1, 2, {{0, 1}, {0, 2}, {1, 2}});
    Graph h = relabel(g, {0, 2, 1}, Kind::TwoOrdered, 1, 2);
    auto a = weight(g, opts(200000, 4)), b = weight(h, opts(200000, 5));
    CHECK(agree(a, b));
}

// z -> 1 - conj(z) reverses the whites on the line and negates every
// angle form.  With the quotient by the group it multiplies the oriented
// measure by (-1)^(m(m-1)/2 + m + n + 1), and the form by (-1)^l.
TEST_CASE("reversing the whites matches the reflection sign") {
    Graph g = three_graph();
    std::vector<int> to = {2, 1, 0, 3};
    Graph h = relabel(g, to, Kind::TwoOrdered, 3, 1);
    const int m = 3, n = 1, l = 3;
    int e = m * (m - 1) / 2 + m + n + 1 + l;
    double sign = e % 2 ? -1 : 1;
    auto a = weight(g, opts(200000, 6)), b = weight(h, opts(200000, 7));
    CHECK(std::abs(b.value - sign * a.value) <= 4 * std::hypot(a.std_error, b.std_error));
    // the same sign is the graph-level sign of the relabelling
    auto c = canonicalize(h);
    REQUIRE(c);
    CHECK(c->g == canonicalize(g)->g);
    CHECK(c->sign * canonicalize(g)->sign == int(sign));
}

TEST_CASE("one white: the black on the unit circle") {
    // the white-black graph integrates the angle form over a half circle
    Graph g = make_graph(Kind::TwoOrdered, 1, 1, {{1, 0}});
    auto w = weight(g, opts(1000, 1));
    CHECK(std::abs(std::abs(w.value) - 1) < 1e-12);
}

TEST_CASE("gauge names") {
    CHECK(gauge_from_name("first-two") == Gauge::FirstTwo);
    CHECK(gauge_name(Gauge::FirstLast) == "first-last");
    CHECK_THROWS(gauge_from_name("third"));
}
