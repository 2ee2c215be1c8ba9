#include "gcw/complexes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace gcw {

namespace {
inline int parity_sign(long e) { return (e & 1) ? -1 : 1; }
inline Q signed_q(const Q& c, long e) { return (e & 1) ? Q(-c) : c; }
}  // namespace

Graph g_vertex() { return make_graph(Kind::One, 0, 1, {}); }
Graph g_edge() { return make_graph(Kind::One, 0, 2, {{0, 1}}); }
Graph g_k4() { return make_graph(Kind::One, 0, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph d_ww() { return make_graph(Kind::TwoOrdered, 2, 0, {}); }
Graph d_wb() { return make_graph(Kind::TwoOrdered, 1, 1, {{0, 1}}); }
Graph d_three() { return make_graph(Kind::TwoOrdered, 3, 1, {{0, 3}, {1, 3}, {2, 3}}); }

GVec edge_mc() { return GVec::single(g_edge(), Q(1, 2)); }

GVec gamma0() {
    GVec v;
    v.add(d_ww());
    v.add(d_wb());
    return v;
}

// ---------------------------------------------------------------- graph complex

GVec gc_prelie(const GVec& x, const GVec& y) {
    GVec r;
    for (auto& [X, a] : x)
        for (auto& [Y, b] : y) {
            Q c = a * b;
            for (int v = 0; v < X.nv(); ++v) insert_into(r, X, v, Y, c);
        }
    return r;
}

GVec gc_bracket(const GVec& x, const GVec& y) {
    GVec r;
    for (auto& [X, a] : x)
        for (auto& [Y, b] : y) {
            Q c = a * b;
            for (int v = 0; v < X.nv(); ++v) insert_into(r, X, v, Y, c);
            Q c2 = signed_q(-c, long(gc_degree(X)) * gc_degree(Y));
            for (int v = 0; v < Y.nv(); ++v) insert_into(r, Y, v, X, c2);
        }
    return r;
}

GVec delta_bb(const GVec& x) {
    if (x.empty()) return {};
    if (two_colour(x.begin()->first.kind)) return delta_bb_def(x);
    return gc_bracket(edge_mc(), x);
}

// ---------------------------------------------------------------- Def complex

namespace {
// f o_i g with the sign of the pre-Lie product on coderivations
void def_prelie_term(GVec& out, const Graph& F, const Graph& G, const Q& c) {
    const int p = F.m;
    const long gD = def_degree(G), gP = op_degree(G);
    for (int i = 1; i <= p; ++i) {
        long theta = (p - i) * gD + (i - 1) * gP;
        insert_into(out, F, i - 1, G, signed_q(c, theta));
    }
}
}  // namespace

GVec def_prelie(const GVec& f, const GVec& g) {
    GVec r;
    for (auto& [F, a] : f)
        for (auto& [G, b] : g) def_prelie_term(r, F, G, a * b);
    return r;
}

GVec def_bracket(const GVec& f, const GVec& g) {
    GVec r;
    for (auto& [F, a] : f)
        for (auto& [G, b] : g) {
            Q c = a * b;
            def_prelie_term(r, F, G, c);
            def_prelie_term(r, G, F, signed_q(-c, long(def_degree(F)) * def_degree(G)));
        }
    return r;
}

GVec circ_prime(const GVec& G, const GVec& gamma) {
    GVec r;
    for (auto& [X, a] : G)
        for (auto& [g, b] : gamma) {
            Q c = signed_q(a * b, long(gc_degree(g)) * (X.m - 1));
            for (int v = X.m; v < X.nv(); ++v) insert_into(r, X, v, g, c);
        }
    return r;
}

GVec delta_oo(const GVec& x) { return def_bracket(GVec::single(d_ww()), x); }
GVec delta_ob(const GVec& x) { return def_bracket(GVec::single(d_wb()), x); }

GVec delta_bb_def(const GVec& x) {
    GVec r;
    GVec e = edge_mc();
    for (auto& [X, a] : x) {
        GVec t = circ_prime(GVec::single(X), e);
        r.add(t, signed_q(-a, def_degree(X)));
    }
    return r;
}

GVec delta_prime(const GVec& x) { return delta_ob(x) + delta_bb_def(x); }
GVec delta_def(const GVec& x) { return delta_oo(x) + delta_prime(x); }

GVec willwacher(const GVec& gamma, bool normalized) {
    GVec r;
    for (auto& [g, c] : gamma) {
        const int N = g.nv();
        if (!normalized) {
            // the host edge at the black slot runs over all vertices of g
            insert_into(r, d_wb(), 1, g, c);
            continue;
        }
        // literal variant: 1/#V! sum over v, new edge last, no sign
        Z f = 1;
        for (int i = 2; i <= N; ++i) f *= i;
        for (int v = 0; v < N; ++v) {
            Graph h;
            h.kind = Kind::TwoOrdered;
            h.m = 1;
            h.n = uint8_t(N);
            for (auto ed : g.edges) h.edges.push_back({uint8_t(ed.a + 1), uint8_t(ed.b + 1)});
            h.edges.push_back({0, uint8_t(v + 1)});
            r.add(h, c / Q(f));
        }
    }
    return r;
}

// ---------------------------------------------------------------- mapping cone

Mac Mac::truncated(int max_vertices) const {
    auto keep = [&](const Graph& g) { return g.nv() <= max_vertices; };
    return {def.filter(keep), gc.filter(keep)};
}

Mac mac_bracket(const Mac& a, const Mac& b) {
    Mac r;
    r.def = def_bracket(a.def, b.def);
    for (auto& [X, x] : a.def)
        for (auto& [g, y] : b.gc) r.def.add(circ_prime(GVec::single(X), GVec::single(g)), x * y);
    for (auto& [X, x] : b.def)
        for (auto& [g, y] : a.gc)
            r.def.add(circ_prime(GVec::single(X), GVec::single(g)), signed_q(-(x * y), long(def_degree(X)) * gc_degree(g)));
    r.gc = gc_bracket(a.gc, b.gc);
    return r;
}

Mac mac_gamma0() { return {gamma0(), edge_mc()}; }

Mac mac_differential(const Mac& a) { return mac_bracket(mac_gamma0(), a); }

// ---------------------------------------------------------------- splittings

GVec whiten(const GVec& gamma) {
    GVec r;
    for (auto& [g, c] : gamma) {
        const int N = g.nv();
        for (int v = 0; v < N; ++v) {
            std::vector<int> to(N);
            for (int u = 0, next = 1; u < N; ++u) to[u] = u == v ? 0 : next++;
            r.add(relabel(g, to, Kind::TwoOrdered, 1, N - 1), c);
        }
    }
    return r;
}

Mac splitting_s(const GVec& gamma) { return {whiten(gamma), gamma}; }

namespace {
bool has_blacks(const GVec& v) {
    for (auto& [g, c] : v)
        if (g.n > 0) return true;
    return false;
}
}  // namespace

SHat splitting_s_hat(const GVec& gamma, int max_whitenings) {
    SHat out;
    out.value.gc = gamma;
    if (gamma.empty()) {
        out.terminated = true;
        return out;
    }
    GVec piece = whiten(gamma);
    const Constraints cons = def_constraints(true);
    for (int step = 0;; ++step) {
        out.pieces.push_back(piece);
        out.value.def += piece;
        GVec res = delta_oo(piece);
        if (!has_blacks(res)) {
            out.residual = res;
            out.terminated = true;
            return out;
        }
        if (step + 1 >= max_whitenings) throw SolveError("whitening cap exceeded");
        GVec next;
        // solve delta' y = -res bigrade by bigrade
        std::map<Bigrade, GVec> parts;
        for (auto& [g, c] : res) parts[bigrade(g)].add_key(g, c);
        for (auto& [bg, part] : parts) {
            auto [m, n, l] = bg;
            if (n == 0) throw SolveError("residual mixes black-free and black terms");
            BasisIndex src(enumerate(Kind::TwoOrdered, m, n - 1, l - 1, cons));
            BasisIndex tgt(enumerate(Kind::TwoOrdered, m, n, l, cons));
            auto M = matrix_of([](const Graph& g) { return delta_prime(GVec::single(g)); }, src, tgt);
            auto b = to_dense(tgt.coords(part * Q(-1)), tgt.size());
            auto y = solve_preimage(M, b);
            if (!y) throw SolveError("no delta' preimage at bigrade (" + std::to_string(m) + "," + std::to_string(n) +
                                     "," + std::to_string(l) + ")");
            next += src.vec(*y);
        }
        piece = next;
    }
}

// ---------------------------------------------------------------- gauge action

namespace {
void check_gauge_element(const Mac& h) {
    for (auto& [g, c] : h.def) {
        if (def_degree(g) != 0) throw GraphError("gauge element must have degree 0");
        if (g.nv() < 2) throw GraphError("gauge element has a term of filtration weight 0");
    }
    for (auto& [g, c] : h.gc) {
        if (gc_degree(g) != 0) throw GraphError("gauge element must have degree 0");
        if (g.nv() < 2) throw GraphError("gauge element has a term of filtration weight 0");
    }
}
}  // namespace

Mac gauge_transform(const Mac& mc, const Mac& h, int truncation) {
    check_gauge_element(h);
    Mac term = mc.truncated(truncation);
    if (term.empty() && !mc.empty()) throw GraphError("truncation below every input term");
    Mac r = term;
    for (int k = 1; !term.empty(); ++k) {
        term = mac_bracket(h, term).truncated(truncation) * Q(1, k);
        r = r + term;
    }
    return r;
}

Mac gauge_transform_deformation(const Mac& x, const Mac& h, int truncation) {
    check_gauge_element(h);
    Mac r = x.truncated(truncation);
    Mac term = r;
    for (int k = 1; !term.empty(); ++k) {
        term = mac_bracket(h, term).truncated(truncation) * Q(1, k);
        r = r + term;
    }
    // ((e^{ad h} - 1)/ad h) dh = sum_{k>=0} ad_h^k dh / (k+1)!
    Mac dh = mac_differential(h).truncated(truncation);
    Mac t = dh;
    for (int k = 0; !t.empty(); ++k) {
        r = r - t * Q(1, k + 1);
        t = mac_bracket(h, t).truncated(truncation) * Q(1, k + 1);
    }
    return r;
}

Mac mc_residual(const Mac& x) { return mac_bracket(x, x); }

// ---------------------------------------------------------------- complexes

Cx complex_from_name(const std::string& s) {
    static const std::map<std::string, Cx> names = {
        {"fgc2", Cx::FGC2},           {"gc2", Cx::GC2},
        {"def_ass_fgraphs", Cx::DefFGraphs}, {"def_ass_graphs", Cx::DefGraphs},
        {"def_ass_graphs_quot", Cx::DefGraphsQuot}, {"mac", Cx::Mac},
        {"mac_quot", Cx::MacQuot}};
    auto it = names.find(s);
    if (it == names.end()) throw GraphError("unknown complex: " + s);
    return it->second;
}

std::string complex_name(Cx c) {
    switch (c) {
        case Cx::FGC2: return "fgc2";
        case Cx::GC2: return "gc2";
        case Cx::DefFGraphs: return "def_ass_fgraphs";
        case Cx::DefGraphs: return "def_ass_graphs";
        case Cx::DefGraphsQuot: return "def_ass_graphs_quot";
        case Cx::Mac: return "mac";
        case Cx::MacQuot: return "mac_quot";
    }
    return "?";
}

Constraints def_constraints(bool graphs) {
    Constraints c;
    c.trivalent_black = true;
    c.no_black_component = graphs;
    return c;
}

std::vector<Graph> def_sector_basis(int degree, int k, bool graphs, const Limits& lim) {
    std::vector<Graph> out;
    const int total = degree + k + 1;  // m + n
    for (int m = 1; m <= total; ++m) {
        int n = total - m, l = n + k;
        if (l < 0) continue;
        auto& b = basis(Kind::TwoOrdered, m, n, l, def_constraints(graphs), lim);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::vector<Graph> gc_sector_basis(int degree, int k, bool full, const Limits& lim) {
    const int n = degree + k + 2, l = n + k;
    if (n < 1 || l < 0) return {};
    Constraints c;
    if (!full) c.trivalent_black = c.connected = true;
    return basis(Kind::One, 0, n, l, c, lim);
}

// ---------------------------------------------------------------- ideals
//
// Both ideals are built bigrade by bigrade.  G(b) holds a spanning set of the
// ideal at bigrade b up to relabelling of the operadic inputs; compositions
// are equivariant, so the recursion only needs these representatives, and the
// full ideal at a queried bigrade is the orbit of G(b) under the input labels.

namespace {

std::mutex ideal_mutex;
std::map<Bigrade, std::vector<GVec>> prime_gen_cache;
std::map<Bigrade, std::vector<GVec>> gra_gen_cache;

// independent subset of vs, by rank over the given basis
std::vector<GVec> independent(const std::vector<GVec>& vs, const BasisIndex& b) {
    Echelon e(b.size());
    std::vector<GVec> out;
    for (auto& v : vs)
        if (!v.empty() && e.insert(b.coords(v))) out.push_back(v);
    return out;
}

const std::vector<GVec>& prime_generators(int m, int n, int l, const Limits& lim);

std::vector<GVec> prime_generators_uncached(int m, int n, int l, const Limits& lim) {
    std::vector<GVec> cand;
    if (m < 1 || n < 2 || l < 1) return {};
    // the ideal lives in the operad without the valence condition; it is cut
    // down to trivalent blacks only at the queried bigrade
    Constraints cons;
    cons.no_black_component = true;
    auto keep = [&](const Graph& g) { return satisfies(g, cons); };
    GVec e = GVec::single(g_edge());
    for (auto& G : basis(Kind::TwoOrdered, m, n - 1, l - 1, cons, lim))
        cand.push_back(act_on_blacks(GVec::single(G), e).filter(keep));
    // compositions through white slots with a smaller ideal element on either side
    for (int m1 = 1; m1 <= m; ++m1)
        for (int n1 = 0; n1 <= n; ++n1)
            for (int l1 = 0; l1 <= l; ++l1) {
                int m2 = m - m1 + 1, n2 = n - n1, l2 = l - l1;
                if (m2 < 1) continue;
                bool unit1 = m1 == 1 && n1 == 0 && l1 == 0, unit2 = m2 == 1 && n2 == 0 && l2 == 0;
                if (unit1 || unit2) continue;
                // ideal element as guest
                for (auto& X : prime_generators(m2, n2, l2, lim))
                    for (auto& A : basis(Kind::TwoOrdered, m1, n1, l1, cons, lim)) {
                        GVec r;
                        for (int i = 0; i < m1; ++i) {
                            r = GVec();
                            for (auto& [x, c] : X) insert_into(r, A, i, x, c);
                            cand.push_back(r.filter(keep));
                        }
                    }
                // ideal element as host
                for (auto& X : prime_generators(m1, n1, l1, lim))
                    for (auto& B : basis(Kind::TwoOrdered, m2, n2, l2, cons, lim))
                        for (int i = 0; i < m1; ++i) {
                            GVec r;
                            for (auto& [x, c] : X) insert_into(r, x, i, B, c);
                            cand.push_back(r.filter(keep));
                        }
            }
    BasisIndex b(basis(Kind::TwoOrdered, m, n, l, cons, lim));
    return independent(cand, b);
}

const std::vector<GVec>& prime_generators(int m, int n, int l, const Limits& lim) {
    {
        std::lock_guard<std::mutex> lk(ideal_mutex);
        auto it = prime_gen_cache.find({m, n, l});
        if (it != prime_gen_cache.end()) return it->second;
    }
    auto v = prime_generators_uncached(m, n, l, lim);
    std::lock_guard<std::mutex> lk(ideal_mutex);
    return prime_gen_cache.emplace(Bigrade{m, n, l}, std::move(v)).first->second;
}

const std::vector<GVec>& gra_generators(int n, int l, const Limits& lim);

std::vector<GVec> gra_generators_uncached(int n, int l, const Limits& lim) {
    if (n == 2 && l == 1) return {GVec::single(make_graph(Kind::OneLabelled, 0, 2, {{0, 1}}))};
    if (n < 3 || l < 1) return {};
    std::vector<GVec> cand;
    for (int n1 = 1; n1 <= n; ++n1)
        for (int l1 = 0; l1 <= l; ++l1) {
            int n2 = n - n1 + 1, l2 = l - l1;
            if (n2 < 1 || (n1 == 1 && l1 == 0) || (n2 == 1 && l2 == 0)) continue;
            for (auto& X : gra_generators(n2, l2, lim))
                for (auto& A : basis(Kind::OneLabelled, 0, n1, l1, {}, lim))
                    for (int i = 0; i < n1; ++i) {
                        GVec r;
                        for (auto& [x, c] : X) insert_into(r, A, i, x, c);
                        cand.push_back(r);
                    }
            for (auto& X : gra_generators(n1, l1, lim))
                for (auto& B : basis(Kind::OneLabelled, 0, n2, l2, {}, lim))
                    for (int i = 0; i < n1; ++i) {
                        GVec r;
                        for (auto& [x, c] : X) insert_into(r, x, i, B, c);
                        cand.push_back(r);
                    }
        }
    BasisIndex b(basis(Kind::OneLabelled, 0, n, l, {}, lim));
    return independent(cand, b);
}

const std::vector<GVec>& gra_generators(int n, int l, const Limits& lim) {
    {
        std::lock_guard<std::mutex> lk(ideal_mutex);
        auto it = gra_gen_cache.find({0, n, l});
        if (it != gra_gen_cache.end()) return it->second;
    }
    auto v = gra_generators_uncached(n, l, lim);
    std::lock_guard<std::mutex> lk(ideal_mutex);
    return gra_gen_cache.emplace(Bigrade{0, n, l}, std::move(v)).first->second;
}

GVec permute_whites(const GVec& v, const std::vector<int>& perm) {
    GVec r;
    for (auto& [g, c] : v) {
        std::vector<int> to(g.nv());
        for (int i = 0; i < g.nv(); ++i) to[i] = i < g.m ? perm[i] : i;
        r.add(relabel(g, to, g.kind, g.m, g.n), c);
    }
    return r;
}

GVec symmetrize(const GVec& v) {
    GVec r;
    for (auto& [g, c] : v) {
        std::vector<int> id(g.nv());
        std::iota(id.begin(), id.end(), 0);
        r.add(relabel(g, id, Kind::One, 0, g.n), c);
    }
    return r;
}

bool in_gc2(const Graph& g) { return is_connected(g) && min_black_valence(g) >= 3; }

// Intersection of the span of vs (over `full`) with the subspace spanned by the
// keys satisfying `inside`: order the other keys first, then echelon rows led
// by an inside key lie entirely in the subspace and span the intersection.
IdealSpan intersect_span(const BasisIndex& full, const std::vector<SVecQ>& vs,
                         const std::function<bool(const Graph&)>& inside_pred) {
    std::vector<Graph> outside, inside;
    for (auto& g : full.keys) (inside_pred(g) ? inside : outside).push_back(g);
    std::vector<Graph> ordered = outside;
    ordered.insert(ordered.end(), inside.begin(), inside.end());
    BasisIndex ob(ordered);
    Echelon e(ob.size());
    for (auto& v : vs) {
        SVecQ q;
        for (auto& [i, c] : v) q.push_back({ob.find(full.keys[i]), c});
        std::sort(q.begin(), q.end(), [](auto& a, auto& b) { return a.first < b.first; });
        e.insert(q);
    }
    IdealSpan s;
    s.basis = BasisIndex(inside);
    s.span = Echelon(s.basis.size());
    const int off = int(outside.size());
    for (auto& [piv, row] : e.rows()) {
        if (piv < off) continue;
        SVecQ q;
        for (auto& [i, z] : row) q.push_back({i - off, Q(z)});
        s.span.insert(q);
    }
    s.dim = s.span.rank();
    return s;
}

}  // namespace

IdealSpan ideal_prime_ambient_span(int m, int n, int l, const Limits& lim) {
    if (m + n > lim.max_vertices) throw ResourceError("ideal bigrade above the vertex cap");
    Constraints amb;
    amb.no_black_component = true;
    IdealSpan s;
    s.basis = BasisIndex(basis(Kind::TwoOrdered, m, n, l, amb, lim));
    s.span = Echelon(s.basis.size());
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    const auto& gens = prime_generators(m, n, l, lim);
    do {
        for (auto& v : gens) s.span.insert(s.basis.coords(permute_whites(v, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    s.dim = s.span.rank();
    return s;
}

IdealSpan ideal_prime_span(int m, int n, int l, const Limits& lim) {
    auto full = ideal_prime_ambient_span(m, n, l, lim);
    std::vector<SVecQ> vs;
    for (auto& [piv, row] : full.span.rows()) {
        SVecQ q;
        for (auto& [i, z] : row) q.push_back({i, Q(z)});
        vs.push_back(q);
    }
    return intersect_span(full.basis, vs, [](const Graph& g) { return min_black_valence(g) >= 3; });
}

namespace {
// ideal inside the full one-colour space at (n, l), natural key order
IdealSpan gra_ideal_full(int n, int l, const Limits& lim) {
    if (n > 6 || n > lim.max_vertices) throw ResourceError("edge ideal computed for at most 6 vertices");
    IdealSpan s;
    s.basis = BasisIndex(basis(Kind::One, 0, n, l, {}, lim));
    s.span = Echelon(s.basis.size());
    for (auto& v : gra_generators(n, l, lim)) s.span.insert(s.basis.coords(symmetrize(v)));
    s.dim = s.span.rank();
    return s;
}
}  // namespace

IdealSpan ideal_gc_span(int n, int l, const Limits& lim) {
    auto full = gra_ideal_full(n, l, lim);
    std::vector<SVecQ> vs;
    for (auto& [piv, row] : full.span.rows()) {
        SVecQ q;
        for (auto& [i, z] : row) q.push_back({i, Q(z)});
        vs.push_back(q);
    }
    return intersect_span(full.basis, vs, in_gc2);
}

Projection quotient_project(const GVec& x, Ideal ideal, const Limits& lim) {
    std::map<Bigrade, GVec> parts;
    for (auto& [g, c] : x) {
        bool two = two_colour(g.kind);
        if (two != (ideal == Ideal::IbbPrime)) throw GraphError("vector colour does not match the ideal");
        // the quotient lives on graphs with at least trivalent blacks; lower-valence terms are not part of it
        if (two && min_black_valence(g) < 3) continue;
        parts[bigrade(g)].add_key(g, c);
    }
    Projection p;
    p.member = true;
    for (auto& [bg, part] : parts) {
        auto [m, n, l] = bg;
        IdealSpan s = ideal == Ideal::IbbPrime ? ideal_prime_span(m, n, l, lim) : gra_ideal_full(n, l, lim);
        GVec rep = s.basis.vec(s.span.reduce(s.basis.coords(part, false)));
        rep += part.filter([&](const Graph& g) { return s.basis.find(g) < 0; });
        if (!rep.empty()) p.member = false;
        p.representative += rep;
    }
    return p;
}

}  // namespace gcw
