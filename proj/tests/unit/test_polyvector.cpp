#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gcw/suites.hpp"

using namespace gcw;

namespace {

Polyvector P(int d, const char* s) { return Polyvector::parse(d, s); }
Graph L(int n, std::vector<std::pair<int, int>> e) { return make_graph(Kind::OneLabelled, 0, n, e); }

// d/dx^i of a polyvector
Polyvector dx(const Polyvector& a, int i) {
    Polyvector r(a.dim());
    for (auto& [m, c] : a.terms())
        if (m.x[i] > 0) {
            Mono n = m;
            --n.x[i];
            r.add(n, c * Q(int(m.x[i])));
        }
    return r;
}

// function part times p_j: split a vector field into its components
Polyvector component(const Polyvector& X, int j) {
    Polyvector r(X.dim());
    for (auto& [m, c] : X.terms())
        if (m.psi == (1u << j)) {
            Mono n = m;
            n.psi = 0;
            r.add(n, c);
        }
    return r;
}

Polyvector times(const Polyvector& f, const Polyvector& g) {
    return phi(L(2, {}), {f, g});
}

// the Lie bracket of vector fields written out by hand
Polyvector lie(const Polyvector& X, const Polyvector& Y) {
    const int d = X.dim();
    Polyvector r(d);
    for (int j = 0; j < d; ++j) {
        Polyvector c(d);
        for (int i = 0; i < d; ++i)
            c = c + times(component(X, i), dx(component(Y, j), i)) - times(component(Y, i), dx(component(X, j), i));
        Mono pj;
        pj.psi = uint8_t(1u << j);
        r = r + times(c, Polyvector::mono(d, pj));
    }
    return r;
}

int koszul(const std::vector<int>& parity, const std::vector<int>& order) {
    int s = 1;
    for (size_t a = 0; a < order.size(); ++a)
        for (size_t b = a + 1; b < order.size(); ++b)
            if (order[a] > order[b] && parity[order[a]] && parity[order[b]]) s = -s;
    return s;
}

}  // namespace

TEST_CASE("polyvector parsing and printing round trip") {
    for (const char* s : {"x1", "-p1 p3", "3/2 x1^2 x3 p1 p2 - x2", "0"}) {
        Polyvector a = P(3, s);
        CHECK(P(3, a.str().c_str()) == a);
    }
    CHECK(P(2, "p2 p1") == P(2, "-p1 p2"));
    CHECK(P(2, "p1 p1").empty());
    CHECK_THROWS_AS(P(2, "x3"), PolyError);
    CHECK_THROWS_AS(P(2, "x1 +* p1"), PolyError);
}

TEST_CASE("monomial basis sizes") {
    // d = 1: 1, x, p, x^2, x p
    CHECK(monomial_basis(1, 2).size() == 5);
    for (auto& m : monomial_basis(3, 2)) CHECK(m.even_degree() + m.odd_degree() <= 2);
}

TEST_CASE("phi examples") {
    Graph e = L(2, {{0, 1}});
    CHECK(phi(L(2, {}), {P(2, "x1 p1"), P(2, "p2")}) == P(2, "x1 p1 p2"));
    CHECK(phi(e, {P(1, "x1 p1"), P(1, "x1")}) == P(1, "x1"));
    CHECK(phi(e, {P(2, "p1 p2"), P(2, "x1")}) == P(2, "p2"));
    // the Euler field scales monomials by their degree
    for (int k = 1; k <= 4; ++k) {
        std::string m = "x1^" + std::to_string(k);
        CHECK(phi(e, {P(1, "x1 p1"), P(1, m.c_str())}) == P(1, m.c_str()) * Q(k));
    }
    CHECK(phi(e, {P(2, "x1^2"), P(2, "x2")}).empty());
}

TEST_CASE("phi(edge) on vector fields is the Lie bracket") {
    Graph e = L(2, {{0, 1}});
    std::vector<Polyvector> fields;
    for (auto& m : monomial_basis(2, 3))
        if (m.odd_degree() == 1) fields.push_back(Polyvector::mono(2, m));
    fields.push_back(P(2, "x1 x2 p1 - 2 x2^2 p2"));
    for (auto& X : fields)
        for (auto& Y : fields) {
            CAPTURE(X.str());
            CAPTURE(Y.str());
            CHECK(phi(e, {X, Y}) == lie(X, Y));
        }
    // a vector field on a function is the derivative
    Polyvector X = P(2, "x2 p1 + x1^2 p2"), f = P(2, "x1^2 x2");
    CHECK(phi(e, {X, f}) == times(component(X, 0), dx(f, 0)) + times(component(X, 1), dx(f, 1)));
}

TEST_CASE("phi is multilinear") {
    Graph g = L(3, {{0, 1}, {1, 2}});
    Polyvector a = P(2, "x1 p1 p2"), b = P(2, "x2^2 p1 p2"), c = P(2, "x1 x2 p2"), f = P(2, "x1^2 x2");
    CHECK(phi(g, {a + b, c, f}) == phi(g, {a, c, f}) + phi(g, {b, c, f}));
    CHECK(phi(g, {a, c * Q(3, 2), f}) == phi(g, {a, c, f}) * Q(3, 2));
    CHECK(phi(g, {a, Polyvector(2), f}).empty());
}

TEST_CASE("phi is equivariant under vertex relabelling") {
    std::mt19937 rng(5);
    for (int d = 1; d <= 3; ++d) {
        auto basis = monomial_basis(d, 2);
        for (auto& g : labelled_graphs(4)) {
            const int N = g.nv();
            std::vector<Polyvector> y;
            std::vector<int> par;
            for (int v = 0; v < N; ++v) {
                const Mono& m = basis[rng() % basis.size()];
                y.push_back(Polyvector::mono(d, m, Q(int(rng() % 5) + 1)));
                par.push_back(m.odd_degree() % 2);
            }
            std::vector<int> to(N);
            std::iota(to.begin(), to.end(), 0);
            do {
                Graph h = relabel(g, to, Kind::OneLabelled, 0, N);
                std::vector<Polyvector> x;
                for (int v = 0; v < N; ++v) x.push_back(y[to[v]]);
                CHECK(phi(g, x) == phi(h, y) * Q(koszul(par, to)));
            } while (std::next_permutation(to.begin(), to.end()));
        }
    }
}

TEST_CASE("operad morphism examples") {
    auto basis = monomial_basis(2, 2);
    Graph e = L(2, {{0, 1}}), unit = L(1, {}), pair = L(2, {});
    for (int s = 0; s < 2; ++s) {
        CHECK(check_operad_morphism(e, s, e, 2, basis).ok());
        CHECK(check_operad_morphism(e, s, unit, 2, basis).ok());
        CHECK(check_operad_morphism(pair, s, e, 2, basis).ok());
        CHECK(check_operad_morphism(e, s, pair, 2, basis).ok());
    }
}

TEST_CASE("the morphism comparison detects a wrong sign") {
    Graph e = L(2, {{0, 1}});
    Op lhs = op_graph(insert(e, 0, e));
    Op rhs = op_compose(op_graph(e), e, 0, op_graph(e), e);
    Op good = op_sum({{Q(1), lhs}, {Q(-1), rhs}});
    Op bad = op_sum({{Q(1), lhs}, {Q(1), rhs}});
    auto basis = monomial_basis(2, 2);
    bool good_zero = true, bad_zero = true;
    for (auto& a : basis)
        for (auto& b : basis)
            for (auto& c : basis) {
                std::vector<Polyvector> xs = {Polyvector::mono(2, a), Polyvector::mono(2, b), Polyvector::mono(2, c)};
                good_zero = good_zero && evaluate(good, xs).empty();
                bad_zero = bad_zero && evaluate(bad, xs).empty();
            }
    CHECK(good_zero);
    CHECK_FALSE(bad_zero);
}

TEST_CASE("generator relations hold") {
    for (int d = 1; d <= 2; ++d)
        for (auto& id : relation_ids()) {
            CAPTURE(id);
            CAPTURE(d);
            CHECK(relation_check(id, d, monomial_basis(d, 2)).ok());
        }
    CHECK_THROWS(relation_check("no-such-relation", 1, monomial_basis(1, 1)));
}

TEST_CASE("Schouten bracket: odd Jacobi identity") {
    Polyvector a = P(2, "p1 p2"), b = P(2, "x1 p1"), c = P(2, "x2");
    std::vector<Polyvector> xs = {a, b, c, P(2, "x1 x2 p2"), P(2, "x2^2 p1 p2"), P(2, "x1^2")};
    for (auto& u : xs)
        for (auto& v : xs)
            for (auto& w : xs) {
                int du = u.parity(), dv = v.parity();
                Polyvector lhs = schouten(u, schouten(v, w));
                Q s1((du + 1) % 2 ? -1 : 1), s2(((du + 1) * (dv + 1)) % 2 ? -1 : 1);
                Polyvector rhs = schouten(schouten(u, v), w) * s1 + schouten(v, schouten(u, w)) * s2;
                CHECK(lhs == rhs);
            }
    CHECK(schouten(lie_poisson_so3(), lie_poisson_so3()).empty());
    Polyvector np = P(3, "x2 p2 p3 + x3 p3 p1 + x1 p1 p2");
    CHECK_FALSE(schouten(np, np).empty());
}

// A linear bivector in three variables is Poisson iff its dual vector field v
// satisfies v . curl v = 0.
TEST_CASE("Schouten bracket: linear bivectors in three variables") {
    const char* p[3] = {"p2 p3", "p3 p1", "p1 p2"};
    for (int code = 0; code < 19683; code += 37) {
        int a[3][3], c = code;
        for (auto& row : a)
            for (int& x : row) {
                x = c % 3 - 1;
                c /= 3;
            }
        Polyvector pi(3);
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                if (a[k][j]) {
                    std::string t = std::to_string(a[k][j]) + " x" + std::to_string(j + 1) + " " + p[k];
                    pi = pi + P(3, t.c_str());
                }
        int curl[3] = {a[2][1] - a[1][2], a[0][2] - a[2][0], a[1][0] - a[0][1]};
        bool poisson = true;
        for (int j = 0; j < 3; ++j) poisson = poisson && curl[0] * a[0][j] + curl[1] * a[1][j] + curl[2] * a[2][j] == 0;
        CAPTURE(pi.str());
        CHECK(schouten(pi, pi).empty() == poisson);
    }
}

TEST_CASE("twisting by a bivector") {
    TwistedAss t = twist_by_poisson(gamma0(), P(2, "p1 p2"), 2);
    Series m1 = t.mu(1, {P(2, "x1")});
    REQUIRE(m1.order() == 2);
    CHECK(m1.c[0].empty());
    CHECK(m1.c[1] == P(2, "p2"));
    Series m2 = t.mu(2, {P(2, "x1 p1"), P(2, "x2")});
    CHECK(m2.c[0] == P(2, "x1 x2 p1"));
    CHECK(m2.c[1].empty());
    CHECK_THROWS(twist_by_poisson(gamma0(), P(2, "p1"), 2));
}

TEST_CASE("A-infinity relations for Poisson bivectors") {
    TwistedAss c = twist_by_poisson(gamma0(), P(2, "p1 p2"), 3);
    for (auto& r : ainf_relation_check(c, 3, monomial_basis(2, 2))) CHECK(r.ok());
    TwistedAss s = twist_by_poisson(gamma0(), lie_poisson_so3(), 3);
    auto reps = ainf_relation_check(s, 2, monomial_basis(3, 2));
    for (auto& r : reps) CHECK(r.ok());
    // not Poisson: mu1 mu1 fails
    TwistedAss n = twist_by_poisson(gamma0(), P(3, "x2 p2 p3 + x3 p3 p1 + x1 p1 p2"), 3);
    auto bad = ainf_relation_check(n, 1, monomial_basis(3, 2));
    REQUIRE(!bad.empty());
    CHECK_FALSE(bad[0].ok());
}
