#include "gcw/cohomology.hpp"

#include <algorithm>

namespace gcw {

namespace {

bool is_gc(Cx cx) { return cx == Cx::FGC2 || cx == Cx::GC2; }
bool is_quot(Cx cx) { return cx == Cx::DefGraphsQuot || cx == Cx::MacQuot; }
bool has_def(Cx cx) { return !is_gc(cx); }
bool has_gc(Cx cx) { return is_gc(cx) || cx == Cx::Mac || cx == Cx::MacQuot; }
bool graphs_only(Cx cx) { return cx == Cx::DefGraphs || cx == Cx::DefGraphsQuot || cx == Cx::MacQuot; }

Constraints gc2_constraints() {
    Constraints c;
    c.trivalent_black = c.connected = true;
    return c;
}

void append_rows(std::vector<SVecQ>& out, const Echelon& e, const BasisIndex& local, const BasisIndex& global) {
    for (auto& [piv, row] : e.rows()) {
        SVecQ q;
        for (auto& [i, z] : row) q.push_back({global.find(local.keys[i]), Q(z)});
        std::sort(q.begin(), q.end(), [](auto& a, auto& b) { return a.first < b.first; });
        out.push_back(std::move(q));
    }
}

int rank_of(const std::vector<SVecQ>& vs, int width) {
    std::vector<const SVecQ*> order;
    for (auto& v : vs)
        if (!v.empty()) order.push_back(&v);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
    Echelon e(width);
    for (auto* v : order) e.insert(*v);
    return e.rank();
}

}  // namespace

int element_degree(Cx cx, const Graph& g) {
    (void)cx;
    return two_colour(g.kind) ? def_degree(g) : gc_degree(g);
}

SectorSpace sector_space(Cx cx, int degree, int N, const Limits& lim) {
    SectorSpace s;
    s.cx = cx;
    s.degree = degree;
    s.vertices = N;
    if (N > lim.max_vertices) throw ResourceError("sector above the vertex cap");
    std::vector<Graph> keys;
    std::vector<Bigrade> def_bigrades;
    if (has_def(cx))
        for (int m = 1; m <= N; ++m) {
            int n = N - m, l = 2 * n + m - 1 - degree;
            if (l < 0 || l > lim.max_edges) continue;
            auto& b = basis(Kind::TwoOrdered, m, n, l, def_constraints(graphs_only(cx)), lim);
            keys.insert(keys.end(), b.begin(), b.end());
            def_bigrades.push_back({m, n, l});
        }
    int gl = 2 * N - 2 - degree;
    bool gc_here = has_gc(cx) && N >= 1 && gl >= 0 && gl <= lim.max_edges;
    if (gc_here) {
        Constraints c = cx == Cx::FGC2 ? Constraints{} : gc2_constraints();
        auto& b = basis(Kind::One, 0, N, gl, c, lim);
        keys.insert(keys.end(), b.begin(), b.end());
    }
    s.basis = BasisIndex(std::move(keys));
    if (is_quot(cx)) {
        for (auto [m, n, l] : def_bigrades) {
            if (n < 2) continue;
            auto span = ideal_prime_span(m, n, l, lim);
            append_rows(s.ideal, span.span, span.basis, s.basis);
        }
        if (gc_here && cx == Cx::MacQuot) {
            auto span = ideal_gc_span(N, gl, lim);
            append_rows(s.ideal, span.span, span.basis, s.basis);
        }
    }
    return s;
}

Mac as_mac(Cx cx, const GVec& v) {
    if (v.empty()) return {};
    if (two_colour(v.begin()->first.kind)) return {v, {}};
    (void)cx;
    return {{}, v};
}

Mac apply_differential(Cx cx, const Graph& g) {
    GVec v = GVec::single(g);
    switch (cx) {
        case Cx::FGC2:
        case Cx::GC2: return {{}, delta_bb(v)};
        case Cx::DefFGraphs:
        case Cx::DefGraphs:
        case Cx::DefGraphsQuot: return {delta_def(v), {}};
        case Cx::Mac:
        case Cx::MacQuot: return mac_differential(as_mac(cx, v));
    }
    return {};
}

SVecQ mac_coords(const BasisIndex& b, const Mac& x, bool strict) {
    SVecQ r = b.coords(x.def, strict);
    SVecQ g = b.coords(x.gc, strict);
    r.insert(r.end(), g.begin(), g.end());
    std::sort(r.begin(), r.end(), [](auto& a, auto& c) { return a.first < c.first; });
    return r;
}

Mac mac_vec(const BasisIndex& b, const SVecQ& x) {
    Mac r;
    for (auto& [i, c] : x) {
        const Graph& g = b.keys.at(i);
        (two_colour(g.kind) ? r.def : r.gc).add_key(g, c);
    }
    return r;
}

namespace {
SparseMatrix matrix_between(Cx cx, const SectorSpace& src, const SectorSpace& tgt) {
    SparseMatrix M;
    M.rows = tgt.basis.size();
    M.cols = src.basis.size();
    for (int j = 0; j < src.basis.size(); ++j) {
        Mac img = apply_differential(cx, src.basis.keys[j]);
        // quotient complexes: the image is taken in graphs with trivalent blacks
        if (is_quot(cx)) img.def = img.def.filter([](const Graph& g) { return min_black_valence(g) >= 3; });
        for (auto& [i, c] : mac_coords(tgt.basis, img, true)) M.entries[{i, j}] = c;
    }
    return M;
}

// rank of the induced map on quotients
int quotient_rank(const SparseMatrix& M, const SectorSpace& tgt) {
    if (!is_quot(tgt.cx)) return rank(M);
    auto cols = M.col_vectors();
    std::vector<SVecQ> all = tgt.ideal;
    int jr = rank_of(tgt.ideal, tgt.basis.size());
    all.insert(all.end(), cols.begin(), cols.end());
    return rank_of(all, tgt.basis.size()) - jr;
}
}  // namespace

SparseMatrix differential_matrix(Cx cx, int degree, int N, const Limits& lim) {
    return matrix_between(cx, sector_space(cx, degree, N, lim), sector_space(cx, degree + 1, N + 1, lim));
}

std::vector<SectorCohomology> cohomology_table(Cx cx, int degree, int max_vertices, const Limits& lim) {
    std::vector<SectorCohomology> out;
    for (int N = 1; N <= max_vertices; ++N) {
        auto here = sector_space(cx, degree, N, lim);
        if (here.basis.size() == 0) continue;
        auto next = sector_space(cx, degree + 1, N + 1, lim);
        int dim = here.basis.size() - rank_of(here.ideal, here.basis.size());
        int rout = quotient_rank(matrix_between(cx, here, next), next);
        int rin = 0;
        if (N > 1) {
            auto prev = sector_space(cx, degree - 1, N - 1, lim);
            if (prev.basis.size()) rin = quotient_rank(matrix_between(cx, prev, here), here);
        }
        out.push_back({N, dim, rout, rin, dim - rout - rin});
    }
    return out;
}

int cohomology_dim(Cx cx, int degree, int max_vertices, const Limits& lim) {
    int h = 0;
    for (auto& s : cohomology_table(cx, degree, max_vertices, lim)) h += s.h;
    return h;
}

bool is_cocycle(Cx cx, const Mac& x) {
    Mac d;
    for (auto& [g, c] : x.def) d = d + apply_differential(cx, g) * c;
    for (auto& [g, c] : x.gc) d = d + apply_differential(cx, g) * c;
    if (is_quot(cx)) {
        auto p = quotient_project(d.def, Ideal::IbbPrime);
        bool gc_ok = d.gc.empty() || quotient_project(d.gc, Ideal::Ibb).member;
        return p.member && gc_ok;
    }
    return d.empty();
}

std::optional<Mac> coboundary_preimage(Cx cx, const Mac& x, const Limits& lim) {
    if (x.empty()) return Mac{};
    int D = -1000, N = -1;
    auto check = [&](const Graph& g) {
        int d = element_degree(cx, g);
        if (N < 0) D = d, N = g.nv();
        if (d != D || g.nv() != N) throw GraphError("element is not homogeneous");
    };
    for (auto& [g, c] : x.def) check(g);
    for (auto& [g, c] : x.gc) check(g);
    auto tgt = sector_space(cx, D, N, lim);
    if (N <= 1) return std::nullopt;
    auto src = sector_space(cx, D - 1, N - 1, lim);
    SparseMatrix M = matrix_between(cx, src, tgt);
    // extra columns for the ideal, so the solve works modulo it
    for (auto& v : tgt.ideal) {
        for (auto& [i, c] : v) M.entries[{i, M.cols}] = c;
        ++M.cols;
    }
    Mac xx = x;
    if (is_quot(cx)) xx.def = xx.def.filter([](const Graph& g) { return min_black_valence(g) >= 3; });
    auto b = to_dense(mac_coords(tgt.basis, xx, true), tgt.basis.size());
    auto y = solve_preimage(M, b);
    if (!y) return std::nullopt;
    y->resize(src.basis.size());
    return mac_vec(src.basis, to_sparse(*y));
}

InjectivityCheck injectivity_check(int N, const Limits& lim) {
    InjectivityCheck r;
    r.vertices = N;
    auto here = sector_space(Cx::DefGraphsQuot, 1, N, lim);
    auto next = sector_space(Cx::DefGraphsQuot, 2, N + 1, lim);
    r.dim = here.basis.size();
    // the ambient (unquotiented) differential of Def(Ass -> Graphs)
    auto Mout = matrix_between(Cx::DefGraphs, here, next);
    r.dim_z = r.dim - rank(Mout);
    std::vector<SVecQ> bcols;
    if (N > 1) {
        auto prev = sector_space(Cx::DefGraphsQuot, 0, N - 1, lim);
        bcols = matrix_between(Cx::DefGraphs, prev, here).col_vectors();
    }
    r.dim_b = rank_of(bcols, r.dim);
    r.dim_j = rank_of(here.ideal, r.dim);
    auto bj = bcols;
    bj.insert(bj.end(), here.ideal.begin(), here.ideal.end());
    r.dim_bj = rank_of(bj, r.dim);
    // dim(Z + J) = dim Z + rank(d restricted to J)
    std::vector<SVecQ> dj;
    for (auto& v : here.ideal) dj.push_back(Mout.apply(v));
    r.dim_zj = r.dim_z + rank_of(dj, next.basis.size());
    // d(J) inside the next ideal
    int jn = rank_of(next.ideal, next.basis.size());
    auto all = next.ideal;
    all.insert(all.end(), dj.begin(), dj.end());
    r.ideal_is_subcomplex = rank_of(all, next.basis.size()) == jn;
    return r;
}

}  // namespace gcw
