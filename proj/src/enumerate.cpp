#include "gcw/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace gcw {

bool satisfies(const Graph& g, const Constraints& c) {
    if (c.trivalent_black && g.n > 0 && min_black_valence(g) < 3) return false;
    if (c.connected && !is_connected(g)) return false;
    if (c.no_black_component && has_black_component(g)) return false;
    return true;
}

std::vector<Graph> enumerate(Kind k, int m, int n, int l, const Constraints& c, const Limits& lim) {
    if (m < 0 || n < 0 || l < 0) throw GraphError("negative count");
    if (!two_colour(k) && m != 0) throw GraphError("one-colour graphs have no white vertices");
    const int N = m + n;
    if (N > lim.max_vertices) throw ResourceError("vertex budget exceeded: " + std::to_string(N));
    if (l > lim.max_edges) throw ResourceError("edge budget exceeded: " + std::to_string(l));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) pairs.push_back({a, b});
    std::set<Graph> out;
    if (l > int(pairs.size())) return {};
    if (c.trivalent_black && 2 * l < 3 * n) return {};

    std::vector<int> pick;
    std::vector<int> deg(N, 0);
    // remaining-capacity pruning on black valence
    auto feasible = [&](size_t next) {
        if (!c.trivalent_black) return true;
        int need = 0;
        for (int v = m; v < N; ++v) need += std::max(0, 3 - deg[v]);
        int left = l - int(pick.size());
        (void)next;
        return need <= 2 * left;
    };
    std::function<void(size_t)> rec = [&](size_t start) {
        if (int(pick.size()) == l) {
            Graph g;
            g.kind = k;
            g.m = uint8_t(m);
            g.n = uint8_t(n);
            for (int i : pick) g.edges.push_back({uint8_t(pairs[i].first), uint8_t(pairs[i].second)});
            if (!satisfies(g, c)) return;
            if (auto s = canonicalize(g)) out.insert(s->g);
            return;
        }
        if (!feasible(start)) return;
        size_t left = l - pick.size();
        for (size_t i = start; i + left <= pairs.size(); ++i) {
            pick.push_back(int(i));
            deg[pairs[i].first]++, deg[pairs[i].second]++;
            rec(i + 1);
            deg[pairs[i].first]--, deg[pairs[i].second]--;
            pick.pop_back();
        }
    };
    rec(0);
    return {out.begin(), out.end()};
}

const std::vector<Graph>& basis(Kind k, int m, int n, int l, const Constraints& c, const Limits& lim) {
    using Key = std::tuple<int, int, int, int, bool, bool, bool>;
    static std::map<Key, std::vector<Graph>> cache;
    static std::mutex mu;
    Key key{int(k), m, n, l, c.trivalent_black, c.connected, c.no_black_component};
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto v = enumerate(k, m, n, l, c, lim);
    std::lock_guard<std::mutex> g(mu);
    return cache.emplace(key, std::move(v)).first->second;
}

}  // namespace gcw
