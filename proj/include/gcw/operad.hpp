#pragma once

#include "gcw/vector.hpp"

namespace gcw {

// Operadic insertion of guest into vertex `slot` (0-based, whites first) of host.
// Legal shapes: one colour into one colour; two colours into a white slot;
// one colour into a black slot.  Each term lists the host edges (endpoint at
// the slot reattached to a guest vertex) followed by the guest edges.
//
// Vertex layout of the result:
//   one colour:  host 0..slot-1, guest, host slot+1..
//   white slot:  whites host <slot, guest whites, host >slot; blacks host, guest
//   black slot:  whites host; blacks host <slot, guest, host >slot
void insert_into(GVec& out, const Graph& host, int slot, const Graph& guest, const Q& c = Q(1));
GVec insert(const Graph& host, int slot, const Graph& guest);

// Sum over black vertices v of host of insert(host, v, gamma).
GVec act_on_blacks(const GVec& host, const GVec& gamma);

// Result kind of an insertion.
Kind insert_kind(const Graph& host, int slot, const Graph& guest);

}  // namespace gcw
