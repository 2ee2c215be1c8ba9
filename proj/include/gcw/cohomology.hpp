#pragma once

#include "gcw/complexes.hpp"

namespace gcw {

// A homogeneous piece of a named complex: fixed degree and fixed total vertex
// count.  Every differential here raises both by one, so these pieces are the
// blocks of the differential.  Mapping-cone keys list the Def part first.
struct SectorSpace {
    Cx cx = Cx::GC2;
    int degree = 0, vertices = 0;
    BasisIndex basis;
    std::vector<SVecQ> ideal;  // quotient complexes: spanning set of the ideal part
};

int element_degree(Cx cx, const Graph& g);  // Def degree / graph-complex degree
SectorSpace sector_space(Cx cx, int degree, int vertices, const Limits& lim = {});

Mac apply_differential(Cx cx, const Graph& g);
SVecQ mac_coords(const BasisIndex& b, const Mac& x, bool strict = true);
Mac mac_vec(const BasisIndex& b, const SVecQ& x);
Mac as_mac(Cx cx, const GVec& v);  // places v in the matching part

// Matrix of the differential from (degree, vertices) to (degree+1, vertices+1).
SparseMatrix differential_matrix(Cx cx, int degree, int vertices, const Limits& lim = {});

// Sum over vertex counts <= max_vertices of dim H at the given degree.
int cohomology_dim(Cx cx, int degree, int max_vertices, const Limits& lim = {});
struct SectorCohomology {
    int vertices, dim, rank_out, rank_in, h;
};
std::vector<SectorCohomology> cohomology_table(Cx cx, int degree, int max_vertices, const Limits& lim = {});

bool is_cocycle(Cx cx, const Mac& x);
// A preimage y with d y = x (modulo the ideal for quotient complexes), or
// nullopt.  x must be homogeneous.
std::optional<Mac> coboundary_preimage(Cx cx, const Mac& x, const Limits& lim = {});

// Degree-1 comparison of Def(Ass -> Graphs) with its quotient by I'_bb at a
// fixed vertex count: the induced map on cohomology is injective iff
// dim Z + dim(B+J) - dim(Z+J) == dim B.
struct InjectivityCheck {
    int vertices = 0;
    int dim = 0, dim_z = 0, dim_b = 0, dim_j = 0, dim_bj = 0, dim_zj = 0;
    bool ideal_is_subcomplex = false;
    bool injective() const { return dim_z + dim_bj - dim_zj == dim_b; }
};
InjectivityCheck injectivity_check(int vertices, const Limits& lim = {});

}  // namespace gcw
