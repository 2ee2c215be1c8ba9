#include "gcw/operad.hpp"

namespace gcw {

Kind insert_kind(const Graph& host, int slot, const Graph& guest) {
    if (slot < 0 || slot >= host.nv()) throw GraphError("insertion slot out of range");
    if (!two_colour(host.kind)) {
        if (two_colour(guest.kind)) throw GraphError("two-colour guest in one-colour host");
        return (host.kind == Kind::OneLabelled && guest.kind == Kind::OneLabelled) ? Kind::OneLabelled : Kind::One;
    }
    if (slot < host.m) {
        if (!two_colour(guest.kind)) throw GraphError("white slot needs a two-colour guest");
    } else if (two_colour(guest.kind)) {
        throw GraphError("black slot needs a one-colour guest");
    }
    return host.kind;
}

void insert_into(GVec& out, const Graph& host, int slot, const Graph& guest, const Q& c) {
    const Kind k = insert_kind(host, slot, guest);
    const int N1 = host.nv(), N2 = guest.nv();
    std::vector<int> hm(N1, -1), gm(N2);
    int m = 0, n = 0;
    if (!two_colour(host.kind)) {
        n = N1 + N2 - 1;
        for (int j = 0; j < N1; ++j) hm[j] = j < slot ? j : j + N2 - 1;
        for (int j = 0; j < N2; ++j) gm[j] = slot + j;
    } else if (slot < host.m) {
        m = host.m + guest.m - 1;
        n = host.n + guest.n;
        for (int j = 0; j < host.m; ++j) hm[j] = j < slot ? j : j + guest.m - 1;
        for (int j = 0; j < guest.m; ++j) gm[j] = slot + j;
        for (int j = 0; j < host.n; ++j) hm[host.m + j] = m + j;
        for (int j = 0; j < guest.n; ++j) gm[guest.m + j] = m + host.n + j;
    } else {
        m = host.m;
        n = host.n + N2 - 1;
        for (int j = 0; j < N1; ++j) hm[j] = j < slot ? j : j + N2 - 1;
        for (int j = 0; j < N2; ++j) gm[j] = slot + j;
    }
    hm[slot] = -1;
    if (m + n > 16) throw GraphError("insertion result too large");

    std::vector<int> at;  // host edges incident to the slot
    for (int i = 0; i < host.ne(); ++i)
        if (host.edges[i].a == slot || host.edges[i].b == slot) at.push_back(i);
    Graph g;
    g.kind = k;
    g.m = uint8_t(m);
    g.n = uint8_t(n);
    g.edges.resize(host.ne() + guest.ne());
    for (int i = 0; i < host.ne(); ++i) {
        auto e = host.edges[i];
        if (e.a != slot && e.b != slot) g.edges[i] = {uint8_t(hm[e.a]), uint8_t(hm[e.b])};
    }
    for (int i = 0; i < guest.ne(); ++i) {
        auto e = guest.edges[i];
        g.edges[host.ne() + i] = {uint8_t(gm[e.a]), uint8_t(gm[e.b])};
    }
    if (N2 == 0) {
        if (!at.empty()) return;  // nothing to reattach to
        out.add(g, c);
        return;
    }
    std::vector<int> f(at.size(), 0);
    for (;;) {
        for (size_t t = 0; t < at.size(); ++t) {
            auto e = host.edges[at[t]];
            int other = e.a == slot ? e.b : e.a;
            g.edges[at[t]] = {uint8_t(hm[other]), uint8_t(gm[f[t]])};
        }
        out.add(g, c);
        size_t t = 0;
        while (t < f.size() && ++f[t] == N2) f[t++] = 0;
        if (t == f.size()) break;
    }
}

GVec insert(const Graph& host, int slot, const Graph& guest) {
    GVec r;
    insert_into(r, host, slot, guest);
    return r;
}

GVec act_on_blacks(const GVec& host, const GVec& gamma) {
    GVec r;
    for (auto& [h, a] : host)
        for (auto& [g, b] : gamma) {
            Q c = a * b;
            for (int v = h.m; v < h.nv(); ++v) insert_into(r, h, v, g, c);
        }
    return r;
}

}  // namespace gcw
