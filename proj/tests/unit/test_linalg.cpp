#include <random>

#include "doctest.h"
#include "gcw/complexes.hpp"

using namespace gcw;

namespace {

// textbook Gaussian elimination over Q
int naive_rank(const SparseMatrix& m) {
    std::vector<std::vector<Q>> a(m.rows, std::vector<Q>(m.cols, Q(0)));
    for (auto& [rc, v] : m.entries) a[rc.first][rc.second] = v;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = r;
        while (p < m.rows && a[p][c] == 0) ++p;
        if (p == m.rows) continue;
        std::swap(a[p], a[r]);
        for (int i = 0; i < m.rows; ++i)
            if (i != r && a[i][c] != 0) {
                Q f = a[i][c] / a[r][c];
                for (int j = 0; j < m.cols; ++j) a[i][j] -= f * a[r][j];
            }
        ++r;
    }
    return r;
}

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols, double density) {
    SparseMatrix m;
    m.rows = rows;
    m.cols = cols;
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> v(-4, 4), d(1, 3);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (u(rng) < density) m.set(i, j, Q(v(rng)) / Q(d(rng)));
    return m;
}

}  // namespace

TEST_CASE("rank examples") {
    SparseMatrix z;
    z.rows = 4;
    z.cols = 7;
    CHECK(rank(z) == 0);
    SparseMatrix id;
    id.rows = id.cols = 3;
    for (int i = 0; i < 3; ++i) id.set(i, i, Q(1));
    CHECK(rank(id) == 3);
}

TEST_CASE("rank properties on random matrices") {
    std::mt19937 rng(7);
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<int> sz(1, 9);
        auto m = random_matrix(rng, sz(rng), sz(rng), t % 3 == 0 ? 0.2 : 0.5);
        int r = rank(m);
        CHECK(r == naive_rank(m));
        CHECK(r == rank(m.transpose()));
        // reverse the row and column order
        SparseMatrix p;
        p.rows = m.rows;
        p.cols = m.cols;
        for (auto& [rc, v] : m.entries) p.set(m.rows - 1 - rc.first, m.cols - 1 - rc.second, v);
        CHECK(rank(p) == r);
    }
}

TEST_CASE("solve_preimage returns exact preimages of images") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        auto m = random_matrix(rng, 6, 5, 0.4);
        std::vector<Q> x(5);
        for (int j = 0; j < 5; ++j) x[j] = Q(int(rng() % 7) - 3);
        SVecQ b = m.apply(to_sparse(x));
        auto y = solve_preimage(m, to_dense(b, 6));
        REQUIRE(y.has_value());
        CHECK(m.apply(to_sparse(*y)) == b);
    }
    // outside the image
    SparseMatrix e;
    e.rows = 2;
    e.cols = 1;
    e.set(0, 0, Q(1));
    CHECK_FALSE(solve_preimage(e, {Q(0), Q(1)}).has_value());
}

TEST_CASE("echelon membership and reduction") {
    Echelon ec(4);
    CHECK(ec.insert({{0, Q(1)}, {2, Q(1, 2)}}));
    CHECK(ec.insert({{1, Q(3)}, {2, Q(-1)}}));
    CHECK_FALSE(ec.insert({{0, Q(2)}, {1, Q(3)}}));
    CHECK(ec.rank() == 2);
    CHECK(ec.contains({{0, Q(-2)}, {1, Q(-3)}}));
    CHECK_FALSE(ec.contains({{3, Q(1)}}));
    CHECK(ec.reduce({{0, Q(1)}, {2, Q(1, 2)}}).empty());
}

TEST_CASE("consecutive differential matrices compose to zero") {
    for (int l = 3; l <= 6; ++l) {
        BasisIndex a(enumerate(Kind::One, 0, 4, l)), b(enumerate(Kind::One, 0, 5, l + 1)),
            c(enumerate(Kind::One, 0, 6, l + 2));
        auto d = [](const Graph& g) { return delta_bb(GVec::single(g)); };
        SparseMatrix A = matrix_of(d, a, b, false), B = matrix_of(d, b, c, false);
        CHECK((B * A).is_zero());
    }
}
