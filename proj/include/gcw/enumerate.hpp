#pragma once

#include <vector>

#include "gcw/graph.hpp"

namespace gcw {

struct Constraints {
    bool trivalent_black = false;     // black valence >= 3
    bool connected = false;
    bool no_black_component = false;  // every component meets a white vertex
};

struct Limits {
    int max_vertices = 9;
    int max_edges = 24;
};

class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool satisfies(const Graph& g, const Constraints& c);

// All nonzero canonical classes with m whites, n blacks, l edges.  Sorted.
std::vector<Graph> enumerate(Kind k, int m, int n, int l, const Constraints& c = {}, const Limits& lim = {});

// Cached variant; identical output.
const std::vector<Graph>& basis(Kind k, int m, int n, int l, const Constraints& c, const Limits& lim = {});

}  // namespace gcw
