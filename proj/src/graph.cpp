#include "gcw/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace gcw {

std::string q_str(const Q& q) { return q.get_str(); }

Q q_parse(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) throw GraphError("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string kind_tag(Kind k) {
    switch (k) {
        case Kind::One: return "1";
        case Kind::OneLabelled: return "1l";
        case Kind::TwoOrdered: return "2o";
        case Kind::TwoSym: return "2s";
        case Kind::TwoLabelled: return "2l";
    }
    return "?";
}

Kind kind_from_tag(const std::string& s) {
    if (s == "1" || s == "one") return Kind::One;
    if (s == "1l") return Kind::OneLabelled;
    if (s == "2o" || s == "two") return Kind::TwoOrdered;
    if (s == "2s") return Kind::TwoSym;
    if (s == "2l") return Kind::TwoLabelled;
    throw GraphError("unknown colour spec: " + s);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(nv(), 0);
    for (auto& e : edges) d[e.a]++, d[e.b]++;
    return d;
}

Graph make_graph(Kind k, int m, int n, const std::vector<std::pair<int, int>>& edges) {
    if (!two_colour(k) && m != 0) throw GraphError("one-colour graph with white vertices");
    if (m < 0 || n < 0 || m + n > 16) throw GraphError("vertex count out of range");
    Graph g;
    g.kind = k;
    g.m = uint8_t(m);
    g.n = uint8_t(n);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= m + n || b >= m + n) throw GraphError("vertex index out of range");
        g.edges.push_back({uint8_t(a), uint8_t(b)});
    }
    return g;
}

namespace {

struct Search {
    int N;
    std::array<uint32_t, 16> adj{};
    const std::vector<Edge>* in;
    bool have = false;
    bool zero = false;
    int best_sign = 0;
    std::vector<uint16_t> best, codes, sorted;

    // Colour refinement; colours are ranks 0..k-1 and only ever split.
    int refine(std::vector<int>& col) const {
        int ncol = -1;
        std::vector<std::pair<std::vector<int>, int>> sig(N);
        for (;;) {
            for (int v = 0; v < N; ++v) {
                auto& s = sig[v].first;
                s.clear();
                s.push_back(col[v]);
                for (uint32_t r = adj[v]; r; r &= r - 1) s.push_back(col[__builtin_ctz(r)]);
                std::sort(s.begin() + 1, s.end());
                sig[v].second = v;
            }
            auto order = sig;
            std::sort(order.begin(), order.end());
            int rank = -1;
            for (int i = 0; i < N; ++i) {
                if (i == 0 || order[i].first != order[i - 1].first) ++rank;
                col[order[i].second] = rank;
            }
            if (rank + 1 == ncol) return ncol;
            ncol = rank + 1;
        }
    }

    void leaf(const std::vector<int>& lab) {
        const auto& E = *in;
        codes.resize(E.size());
        for (size_t i = 0; i < E.size(); ++i) {
            int a = lab[E[i].a], b = lab[E[i].b];
            if (a > b) std::swap(a, b);
            codes[i] = uint16_t(a * 16 + b);
        }
        int inv = 0;
        for (size_t i = 0; i < codes.size(); ++i)
            for (size_t j = i + 1; j < codes.size(); ++j) inv += codes[i] > codes[j];
        sorted = codes;
        std::sort(sorted.begin(), sorted.end());
        int s = (inv & 1) ? -1 : 1;
        if (!have || sorted < best) {
            have = true;
            best = sorted;
            best_sign = s;
            zero = false;
        } else if (sorted == best && s != best_sign) {
            zero = true;
        }
    }

    void run(std::vector<int> col) {
        int k = refine(col);
        if (k == N) {
            leaf(col);
            return;
        }
        std::vector<int> cnt(k, 0);
        for (int v = 0; v < N; ++v) cnt[col[v]]++;
        int c = 0;
        while (cnt[c] < 2) ++c;
        for (int v = 0; v < N; ++v) {
            if (col[v] != c) continue;
            std::vector<int> c2(N);
            for (int u = 0; u < N; ++u) c2[u] = 2 * col[u] + (u == v ? 0 : 1);
            run(std::move(c2));
        }
    }
};

}  // namespace

std::optional<Signed> canonicalize(const Graph& g) {
    const int N = g.nv();
    if (N > 16) throw GraphError("graph too large to canonicalize");
    if (!two_colour(g.kind) && g.m != 0) throw GraphError("one-colour graph with white vertices");
    std::vector<Edge> E = g.edges;
    for (auto& e : E) {
        if (e.a >= N || e.b >= N) throw GraphError("vertex index out of range");
        if (e.a == e.b) throw GraphError("tadpole edge");
        if (e.a > e.b) std::swap(e.a, e.b);
    }
    {
        auto s = E;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;  // parallel edges: odd swap
    }
    Search S;
    S.N = N;
    S.in = &E;
    for (auto& e : E) {
        S.adj[e.a] |= 1u << e.b;
        S.adj[e.b] |= 1u << e.a;
    }
    std::vector<std::array<int, 3>> init(N);
    auto deg = g.degrees();
    for (int v = 0; v < N; ++v) {
        bool white = v < g.m;
        bool fixed = white ? whites_fixed(g.kind) : blacks_fixed(g.kind);
        init[v] = {white ? 0 : 1, fixed ? v : -1, fixed ? 0 : deg[v]};
    }
    std::vector<int> idx(N);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return init[a] < init[b]; });
    std::vector<int> col(N);
    int r = -1;
    for (int i = 0; i < N; ++i) {
        if (i == 0 || init[idx[i]] != init[idx[i - 1]]) ++r;
        col[idx[i]] = r;
    }
    if (N == 0) {
        Signed out{g, 1};
        return out;
    }
    S.run(col);
    if (S.zero) return std::nullopt;
    Signed out;
    out.g.kind = g.kind;
    out.g.m = g.m;
    out.g.n = g.n;
    for (auto c : S.best) out.g.edges.push_back({uint8_t(c / 16), uint8_t(c % 16)});
    out.sign = S.best_sign;
    return out;
}

int gc_degree(const Graph& g) { return 2 * g.n - g.ne() - 2; }
int def_degree(const Graph& g) { return 2 * g.n + g.m - g.ne() - 1; }
int op_degree(const Graph& g) { return 2 * g.n - g.ne(); }

namespace {
std::vector<int> components(const Graph& g) {
    std::vector<int> p(g.nv());
    std::iota(p.begin(), p.end(), 0);
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    for (auto& e : g.edges) p[find(e.a)] = find(e.b);
    for (int v = 0; v < g.nv(); ++v) p[v] = find(v);
    return p;
}
}  // namespace

bool is_connected(const Graph& g) {
    if (g.nv() <= 1) return true;
    auto c = components(g);
    return std::all_of(c.begin(), c.end(), [&](int x) { return x == c[0]; });
}

bool has_black_component(const Graph& g) {
    auto c = components(g);
    std::vector<char> touches_white(g.nv(), 0);
    for (int v = 0; v < g.m; ++v) touches_white[c[v]] = 1;
    for (int v = g.m; v < g.nv(); ++v)
        if (!touches_white[c[v]]) return true;
    return false;
}

int min_black_valence(const Graph& g) {
    auto d = g.degrees();
    int best = 1 << 20;
    for (int v = g.m; v < g.nv(); ++v) best = std::min(best, d[v]);
    return best;
}

Graph relabel(const Graph& g, const std::vector<int>& to, Kind k, int m, int n) {
    Graph h;
    h.kind = k;
    h.m = uint8_t(m);
    h.n = uint8_t(n);
    h.edges.reserve(g.edges.size());
    for (auto& e : g.edges) h.edges.push_back({uint8_t(to[e.a]), uint8_t(to[e.b])});
    return h;
}

std::string vname(const Graph& g, int v) {
    return v < g.m ? "w" + std::to_string(v + 1) : "b" + std::to_string(v - g.m + 1);
}

std::string to_key(const Graph& g) {
    std::string s = "c:" + kind_tag(g.kind) + ";v:" + std::to_string(g.m) + "," + std::to_string(g.n) + ";e:";
    for (auto& e : g.edges) s += "(" + vname(g, e.a) + "," + vname(g, e.b) + ")";
    return s;
}

namespace {
int parse_vertex(const std::string& t, int m, int n) {
    if (t.size() < 2 || (t[0] != 'w' && t[0] != 'b')) throw GraphError("bad vertex name: " + t);
    int i = 0;
    try {
        i = std::stoi(t.substr(1));
    } catch (...) {
        throw GraphError("bad vertex name: " + t);
    }
    if (t[0] == 'w') {
        if (i < 1 || i > m) throw GraphError("vertex out of range: " + t);
        return i - 1;
    }
    if (i < 1 || i > n) throw GraphError("vertex out of range: " + t);
    return m + i - 1;
}
}  // namespace

Graph parse_key(const std::string& s) {
    auto c = s.find("c:"), v = s.find(";v:"), e = s.find(";e:");
    if (c != 0 || v == std::string::npos || e == std::string::npos) throw GraphError("bad key: " + s);
    Kind k = kind_from_tag(s.substr(2, v - 2));
    auto counts = s.substr(v + 3, e - v - 3);
    auto comma = counts.find(',');
    if (comma == std::string::npos) throw GraphError("bad key counts: " + s);
    int m = std::stoi(counts.substr(0, comma)), n = std::stoi(counts.substr(comma + 1));
    std::vector<std::pair<int, int>> edges;
    std::string rest = s.substr(e + 3);
    size_t p = 0;
    while (p < rest.size()) {
        if (rest[p] != '(') throw GraphError("bad key edges: " + s);
        auto q = rest.find(')', p);
        if (q == std::string::npos) throw GraphError("bad key edges: " + s);
        auto body = rest.substr(p + 1, q - p - 1);
        auto cm = body.find(',');
        if (cm == std::string::npos) throw GraphError("bad key edge: " + body);
        edges.push_back({parse_vertex(body.substr(0, cm), m, n), parse_vertex(body.substr(cm + 1), m, n)});
        p = q + 1;
    }
    return make_graph(k, m, n, edges);
}

nlohmann::json term_json(const Graph& g, const Q& c) {
    nlohmann::json e = nlohmann::json::array();
    for (auto& x : g.edges) e.push_back({x.a + 1, x.b + 1});
    return {{"colour", kind_tag(g.kind)}, {"whites", g.m}, {"blacks", g.n}, {"edges", e}, {"coeff", q_str(c)}};
}

std::pair<Graph, Q> parse_term(const nlohmann::json& j) {
    if (j.is_string()) return {parse_key(j.get<std::string>()), Q(1)};
    if (!j.is_object()) throw GraphError("graph term must be a key string or an object");
    Kind k = kind_from_tag(j.value("colour", std::string("1")));
    int m = j.value("whites", 0), n = j.value("blacks", 0);
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j.at("edges")) {
        auto idx = [&](const nlohmann::json& x) {
            if (x.is_string()) return parse_vertex(x.get<std::string>(), m, n);
            int i = x.get<int>();
            if (i < 1 || i > m + n) throw GraphError("vertex out of range");
            return i - 1;
        };
        edges.push_back({idx(e.at(0)), idx(e.at(1))});
    }
    Q c(1);
    if (j.contains("coeff")) c = j["coeff"].is_string() ? q_parse(j["coeff"].get<std::string>()) : Q(j["coeff"].get<long>());
    return {make_graph(k, m, n, edges), c};
}

}  // namespace gcw
