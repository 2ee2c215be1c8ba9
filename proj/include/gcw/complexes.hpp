#pragma once

#include <string>

#include "gcw/enumerate.hpp"
#include "gcw/linalg.hpp"
#include "gcw/operad.hpp"

namespace gcw {

// ---- standard graphs
Graph g_vertex();  // one black vertex
Graph g_edge();    // one-colour edge
Graph g_k4();      // tetrahedron
Graph d_ww();      // two whites, no edge (wedge)
Graph d_wb();      // white joined to a black
Graph d_three();   // three whites joined to one black
GVec gamma0();     // d_ww + d_wb
// The edge as a Maurer-Cartan element.  A key stands for the sum over all
// labellings of its vertices, so the single edge is half of its key.
GVec edge_mc();

// ---- graph complex, one colour.  Elements are symmetrized keys.
GVec gc_prelie(const GVec& x, const GVec& y);  // sum over vertices of x of x o_v y
GVec gc_bracket(const GVec& x, const GVec& y);
GVec delta_bb(const GVec& x);  // [edge_mc, x] on one colour; twisted splitting on two colours

// ---- Def(Ass_inf -> graphs), ordered whites, symmetrized blacks.
GVec def_prelie(const GVec& f, const GVec& g);
GVec def_bracket(const GVec& f, const GVec& g);
// action of a graph-complex element on black vertices, signed to be a derivation
GVec circ_prime(const GVec& G, const GVec& gamma);
GVec delta_oo(const GVec& x);
GVec delta_ob(const GVec& x);
GVec delta_bb_def(const GVec& x);
GVec delta_prime(const GVec& x);  // delta_ob + delta_bb_def
GVec delta_def(const GVec& x);    // delta_oo + delta_prime

// Willwacher map: the Def component of [(gamma0, edge_mc), (0, gamma)], i.e.
// the sum over vertices of gamma of gamma with a white vertex attached there,
// new edge first.  The normalized variant is the literal 1/#V! sum with the new
// edge last and no sign; it is kept for comparison and is not a chain map.
GVec willwacher(const GVec& gamma, bool normalized = false);

// ---- mapping cone
struct Mac {
    GVec def;  // two colours, ordered whites
    GVec gc;   // one colour
    Mac operator+(const Mac& o) const { return {def + o.def, gc + o.gc}; }
    Mac operator-(const Mac& o) const { return {def - o.def, gc - o.gc}; }
    Mac operator*(const Q& c) const { return {def * c, gc * c}; }
    bool empty() const { return def.empty() && gc.empty(); }
    bool operator==(const Mac& o) const { return def == o.def && gc == o.gc; }
    nlohmann::json to_json() const { return {{"def", def.to_json()}, {"gc", gc.to_json()}}; }
    Mac truncated(int max_vertices) const;
};

Mac mac_bracket(const Mac& a, const Mac& b);
Mac mac_differential(const Mac& a);  // [(gamma0, edge_mc), a]
Mac mac_gamma0();                    // (gamma0, edge_mc)

// ---- splittings
GVec whiten(const GVec& gamma);  // sum over vertices made white (m = 1)
Mac splitting_s(const GVec& gamma);

struct SHat {
    Mac value;                     // (gamma_o + gamma_oo + ... , gamma)
    std::vector<GVec> pieces;      // gamma_o, gamma_oo, ...
    GVec residual;                 // delta_oo of the last piece
    bool terminated = false;       // residual has no black vertices
};
struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
SHat splitting_s_hat(const GVec& gamma, int max_whitenings = 8);

// ---- gauge action through the vertex-count filtration
// e^{ad h} mc, keeping terms with at most `truncation` vertices.  For a total
// Maurer-Cartan element (of the bracket alone) this is the gauge action.
Mac gauge_transform(const Mac& mc, const Mac& h, int truncation);
// e^{ad h} x - ((e^{ad h} - 1)/ad h) d h with d = mac_differential; acts on
// deformations x of the base point (gamma0, edge).
Mac gauge_transform_deformation(const Mac& x, const Mac& h, int truncation);
// [x, x]
Mac mc_residual(const Mac& x);

// ---- named complexes and bases
enum class Cx { FGC2, GC2, DefFGraphs, DefGraphs, DefGraphsQuot, Mac, MacQuot };
Cx complex_from_name(const std::string& s);
std::string complex_name(Cx c);

Constraints def_constraints(bool graphs);  // graphs: no black-only components

// Bases of a (degree, k = l - n) sector.  Def graphs have m >= 1.
std::vector<Graph> def_sector_basis(int degree, int k, bool graphs, const Limits& lim = {});
std::vector<Graph> gc_sector_basis(int degree, int k, bool full, const Limits& lim = {});

// ---- quotients by the edge ideals
enum class Ideal { Ibb, IbbPrime };
// Echelon basis of the ideal inside the given key basis.
struct IdealSpan {
    BasisIndex basis;
    Echelon span;
    int dim = 0;
};
// I'_bb at bigrade (m, n, l) inside graphs without black-only components and
// without the valence condition (the generators Gamma.edge have low-valence
// terms), and its intersection with the trivalent part Def(->Graphs).
IdealSpan ideal_prime_ambient_span(int m, int n, int l, const Limits& lim = {});
IdealSpan ideal_prime_span(int m, int n, int l, const Limits& lim = {});
// I_bb inside GC2 at (n, l).
IdealSpan ideal_gc_span(int n, int l, const Limits& lim = {});

struct Projection {
    GVec representative;
    bool member = false;
};
// Reduction of x against the ideal, bigrade by bigrade.  For I'_bb, terms with a
// black vertex of valence < 3 are dropped first (they are not in the quotient).
Projection quotient_project(const GVec& x, Ideal ideal, const Limits& lim = {});

}  // namespace gcw
