#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include "json.hpp"

namespace gcw {

using Q = mpq_class;

std::string q_str(const Q& q);
Q q_parse(const std::string& s);

// Symmetry class of a graph key.
//   One          one colour, all vertices permutable (GC keys)
//   OneLabelled  one colour, labels fixed (operad Gra)
//   TwoOrdered   whites in a fixed order, blacks permutable (Def complexes)
//   TwoSym       whites and blacks permutable within their colour
//   TwoLabelled  both colours labelled (operad Gra with two colours)
enum class Kind : uint8_t { One, OneLabelled, TwoOrdered, TwoSym, TwoLabelled };

inline bool two_colour(Kind k) { return k != Kind::One && k != Kind::OneLabelled; }
inline bool whites_fixed(Kind k) { return k == Kind::TwoOrdered || k == Kind::TwoLabelled; }
inline bool blacks_fixed(Kind k) { return k == Kind::OneLabelled || k == Kind::TwoLabelled; }
std::string kind_tag(Kind k);
Kind kind_from_tag(const std::string& s);

struct Edge {
    uint8_t a = 0, b = 0;
    auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vertices 0..m-1 are white (w1..wm), m..m+n-1 black (b1..bn).
// The edge sequence carries the orientation.
struct Graph {
    Kind kind = Kind::One;
    uint8_t m = 0, n = 0;
    std::vector<Edge> edges;

    int nv() const { return m + n; }
    int ne() const { return int(edges.size()); }
    bool is_white(int v) const { return v < m; }
    std::vector<int> degrees() const;

    auto operator<=>(const Graph& o) const {
        if (auto c = kind <=> o.kind; c != 0) return c;
        if (auto c = m <=> o.m; c != 0) return c;
        if (auto c = n <=> o.n; c != 0) return c;
        if (auto c = edges.size() <=> o.edges.size(); c != 0) return c;
        return edges <=> o.edges;
    }
    bool operator==(const Graph&) const = default;
};

Graph make_graph(Kind k, int m, int n, const std::vector<std::pair<int, int>>& edges);

struct Signed {
    Graph g;
    int sign = 1;
};

// Canonical representative within the symmetry group of g.kind, with the sign
// of the induced edge permutation.  nullopt when an automorphism acts oddly.
std::optional<Signed> canonicalize(const Graph& g);

// Degree conventions.
int gc_degree(const Graph& g);   // 2n - l - 2
int def_degree(const Graph& g);  // 2n + m - l - 1
int op_degree(const Graph& g);   // 2n - l, degree as an operation on polyvectors (blacks fed with bivectors)

bool is_connected(const Graph& g);
bool has_black_component(const Graph& g);  // a connected component made of black vertices only
int min_black_valence(const Graph& g);     // large if no blacks

// Relabel with vertex map old -> new (new vertex count and colour split given).
Graph relabel(const Graph& g, const std::vector<int>& to, Kind k, int m, int n);

std::string vname(const Graph& g, int v);
std::string to_key(const Graph& g);
Graph parse_key(const std::string& s);

nlohmann::json term_json(const Graph& g, const Q& c);
// Parses either a JSON term object or a text key; returns (graph, coefficient).
std::pair<Graph, Q> parse_term(const nlohmann::json& j);

}  // namespace gcw
