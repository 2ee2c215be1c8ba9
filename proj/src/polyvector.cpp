#include "gcw/polyvector.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <regex>
#include <sstream>

namespace gcw {

int Mono::even_degree() const {
    int s = 0;
    for (auto e : x) s += e;
    return s;
}

Polyvector Polyvector::mono(int d, const Mono& m, const Q& c) {
    Polyvector p(d);
    p.add(m, c);
    return p;
}

void Polyvector::add(const Mono& m, const Q& c) {
    if (sgn(c) == 0) return;
    for (int a = d_; a < kMaxDim; ++a)
        if (m.x[a] || (m.psi >> a & 1)) throw PolyError("variable index above the dimension");
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

Polyvector Polyvector::operator+(const Polyvector& o) const {
    if (o.d_ != d_) throw PolyError("dimension mismatch");
    Polyvector r = *this;
    for (auto& [m, c] : o.t_) r.add(m, c);
    return r;
}

Polyvector Polyvector::operator-(const Polyvector& o) const { return *this + o * Q(-1); }

Polyvector Polyvector::operator*(const Q& c) const {
    Polyvector r(d_);
    if (sgn(c) == 0) return r;
    for (auto& [m, v] : t_) r.t_.emplace(m, v * c);
    return r;
}

int Polyvector::parity() const {
    int p = -1;
    for (auto& [m, c] : t_) {
        int q = m.odd_degree() & 1;
        if (p >= 0 && p != q) throw PolyError("polyvector of mixed parity");
        p = q;
    }
    return p < 0 ? 0 : p;
}

std::string Polyvector::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
        Q a = c;
        if (!first) os << (sgn(a) < 0 ? " - " : " + ");
        else if (sgn(a) < 0) os << "-";
        first = false;
        a = abs(a);
        bool unit = m.even_degree() + m.odd_degree() > 0;
        bool printed = false;
        if (!(unit && a == 1)) {
            os << q_str(a);
            printed = true;
        }
        for (int i = 0; i < d_; ++i)
            if (m.x[i]) {
                os << (printed ? " " : "") << "x" << i + 1;
                if (m.x[i] > 1) os << "^" << int(m.x[i]);
                printed = true;
            }
        for (int i = 0; i < d_; ++i)
            if (m.psi >> i & 1) {
                os << (printed ? " " : "") << "p" << i + 1;
                printed = true;
            }
    }
    return os.str();
}

Polyvector Polyvector::parse(int d, const std::string& src) {
    Polyvector p(d);
    std::string s;
    for (char ch : src)
        if (!std::isspace(static_cast<unsigned char>(ch)) || (!s.empty() && s.back() != ' ')) s += ch;
    // split into signed terms at top-level + / - (a '/' inside a coefficient is not a separator)
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    auto flush = [&] {
        std::string t;
        for (char ch : cur)
            if (ch != ' ' || (!t.empty() && t.back() != ' ')) t += ch;
        while (!t.empty() && t.back() == ' ') t.pop_back();
        if (!t.empty()) terms.push_back({sign, t});
        else if (!cur.empty() || !terms.empty()) throw PolyError("empty term in polyvector literal");
        cur.clear();
    };
    bool any = false;
    for (char ch : src) {
        if (ch == '+' || ch == '-') {
            if (any) flush();
            else if (!cur.empty() && cur.find_first_not_of(' ') != std::string::npos) flush();
            sign = ch == '-' ? -1 : 1;
            any = true;
            cur.clear();
            continue;
        }
        cur += ch;
        if (!std::isspace(static_cast<unsigned char>(ch))) any = true;
    }
    flush();
    static const std::regex coef_re(R"(^\d+(/\d+)?$)");
    static const std::regex var_re(R"(^([xp])(\d+)(\^(\d+))?$)");
    for (auto& [sg, t] : terms) {
        std::istringstream is(t);
        std::string tok;
        Q c(sg);
        Mono m;
        std::vector<int> odd;
        while (is >> tok) {
            std::smatch mm;
            if (std::regex_match(tok, coef_re)) {
                c *= q_parse(tok);
            } else if (std::regex_match(tok, mm, var_re)) {
                int i = std::stoi(mm[2]) - 1;
                int e = mm[4].matched ? std::stoi(mm[4]) : 1;
                if (i < 0 || i >= d) throw PolyError("variable index out of range: " + tok);
                if (mm[1] == "x") {
                    if (m.x[i] + e > 255) throw PolyError("exponent too large");
                    m.x[i] = uint8_t(m.x[i] + e);
                } else {
                    if (e != 1) throw PolyError("odd variables square to zero: " + tok);
                    odd.push_back(i);
                }
            } else {
                throw PolyError("bad polyvector token: " + tok);
            }
        }
        // order the odd variables, tracking the sign
        for (size_t a = 0; a < odd.size(); ++a)
            for (size_t b = a + 1; b < odd.size(); ++b) {
                if (odd[a] == odd[b]) {
                    c = 0;
                } else if (odd[a] > odd[b]) {
                    c = -c;
                }
            }
        if (sgn(c) == 0) continue;
        for (int i : odd) m.psi = uint8_t(m.psi | (1u << i));
        p.add(m, c);
    }
    return p;
}

std::vector<Mono> monomial_basis(int d, int deg) {
    std::vector<Mono> out;
    std::vector<Mono> evens;
    Mono cur;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == d) {
            evens.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur.x[i] = uint8_t(e);
            rec(i + 1, left - e);
        }
        cur.x[i] = 0;
    };
    rec(0, deg);
    for (auto& e : evens)
        for (unsigned s = 0; s < (1u << d); ++s) {
            if (e.even_degree() + __builtin_popcount(s) > deg) continue;
            Mono m = e;
            m.psi = uint8_t(s);
            out.push_back(m);
        }
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
        int da = a.even_degree() + a.odd_degree(), db = b.even_degree() + b.odd_degree();
        return da != db ? da < db : a < b;
    });
    return out;
}

// ---------------------------------------------------------------- evaluation

namespace {

using Terms = std::vector<std::pair<Mono, long long>>;

void acc_add(Terms& out, const Mono& m, long long c) {
    for (auto& [k, v] : out)
        if (k == m) {
            v += c;
            return;
        }
    out.push_back({m, c});
}

void acc_clean(Terms& t) {
    t.erase(std::remove_if(t.begin(), t.end(), [](auto& p) { return p.second == 0; }), t.end());
    std::sort(t.begin(), t.end(), [](auto& a, auto& b) { return a.first < b.first; });
}

long long mul_checked(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw PolyError("coefficient overflow in monomial evaluation");
    return r;
}

struct MonoEval {
    const Graph& g;
    int d;
    std::array<Mono, 16> st;
    int nv;
    Terms& out;

    int psi_sign(int v, int a) const {
        int c = __builtin_popcount(st[v].psi & ((1u << a) - 1));
        for (int w = 0; w < v; ++w) c += __builtin_popcount(st[w].psi);
        return (c & 1) ? -1 : 1;
    }

    void finish(long long coef) {
        Mono r;
        int sign = 1;
        for (int v = 0; v < nv; ++v) {
            const Mono& m = st[v];
            for (int a = 0; a < d; ++a) r.x[a] = uint8_t(r.x[a] + m.x[a]);
            for (int b = 0; b < d; ++b)
                if (m.psi >> b & 1) {
                    if (r.psi >> b & 1) return;
                    if (__builtin_popcount(r.psi >> (b + 1)) & 1) sign = -sign;
                    r.psi = uint8_t(r.psi | (1u << b));
                }
        }
        acc_add(out, r, sign * coef);
    }

    // derivatives d/dx^a at p and d/dpsi_a at q
    void term(int k, long long coef, int p, int q, int a) {
        if (!st[p].x[a] || !(st[q].psi >> a & 1)) return;
        long long c = mul_checked(coef, st[p].x[a]) * psi_sign(q, a);
        st[p].x[a]--;
        st[q].psi = uint8_t(st[q].psi & ~(1u << a));
        run(k - 1, c);
        st[q].psi = uint8_t(st[q].psi | (1u << a));
        st[p].x[a]++;
    }

    void run(int k, long long coef) {
        if (k < 0) {
            finish(coef);
            return;
        }
        const Edge e = g.edges[k];
        for (int a = 0; a < d; ++a) {
            term(k, coef, e.a, e.b, a);
            term(k, coef, e.b, e.a, a);
        }
    }
};

void phi_mono(const Graph& g, int d, const std::vector<Mono>& args, long long coef, Terms& out) {
    if (args.size() > 16) throw PolyError("too many vertices");
    MonoEval ev{g, d, {}, int(args.size()), out};
    std::copy(args.begin(), args.end(), ev.st.begin());
    ev.run(g.ne() - 1, coef);
}

}  // namespace

Polyvector phi(const Graph& g, const std::vector<Polyvector>& args) {
    if (int(args.size()) != g.nv()) throw PolyError("argument count does not match the vertex count");
    int d = args.empty() ? 1 : args[0].dim();
    for (auto& a : args)
        if (a.dim() != d) throw PolyError("dimension mismatch among arguments");
    Polyvector r(d);
    const int N = g.nv();
    std::vector<std::vector<std::pair<Mono, Q>>> lists(N);
    for (int i = 0; i < N; ++i) {
        for (auto& t : args[i].terms()) lists[i].push_back(t);
        if (lists[i].empty()) return r;
    }
    std::vector<size_t> idx(N, 0);
    std::vector<Mono> ms(N);
    Terms out;
    for (;;) {
        Q c(1);
        for (int i = 0; i < N; ++i) {
            ms[i] = lists[i][idx[i]].first;
            c *= lists[i][idx[i]].second;
        }
        out.clear();
        phi_mono(g, d, ms, 1, out);
        for (auto& [m, v] : out)
            if (v) r.add(m, c * Q(static_cast<long>(v)));
        int i = 0;
        while (i < N && ++idx[i] == lists[i].size()) idx[i++] = 0;
        if (i == N) break;
    }
    return r;
}

Polyvector phi(const GVec& v, const std::vector<Polyvector>& args) {
    int d = args.empty() ? 1 : args[0].dim();
    Polyvector r(d);
    for (auto& [g, c] : v) r = r + phi(g, args) * c;
    return r;
}

int koszul_sign(const std::vector<int>& par, const std::vector<int>& order) {
    int s = 0;
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j] && par[order[i]] && par[order[j]]) s ^= 1;
    return s ? -1 : 1;
}

// ---------------------------------------------------------------- operations

void insertion_layout(const Graph& host, int slot, const Graph& guest, std::vector<int>& gpos, std::vector<int>& hpos) {
    insert_kind(host, slot, guest);
    const int N1 = host.nv(), N2 = guest.nv();
    gpos.assign(N2, 0);
    hpos.clear();
    std::vector<int> hm(N1, -1);
    if (!two_colour(host.kind) || slot >= host.m) {
        for (int j = 0; j < N1; ++j) hm[j] = j < slot ? j : j + N2 - 1;
        for (int j = 0; j < N2; ++j) gpos[j] = slot + j;
    } else {
        int m = host.m + guest.m - 1;
        for (int j = 0; j < host.m; ++j) hm[j] = j < slot ? j : j + guest.m - 1;
        for (int j = 0; j < guest.m; ++j) gpos[j] = slot + j;
        for (int j = 0; j < host.n; ++j) hm[host.m + j] = m + j;
        for (int j = 0; j < guest.n; ++j) gpos[guest.m + j] = m + host.n + j;
    }
    for (int j = 0; j < N1; ++j)
        if (j != slot) hpos.push_back(hm[j]);
}

Op op_graph(const GVec& v) {
    auto o = std::make_shared<Operation>();
    o->type = Operation::T::Leaf;
    o->leaf = v;
    if (v.empty()) throw PolyError("empty graph operation");
    auto& g0 = v.begin()->first;
    o->arity = g0.nv();
    o->parity = g0.ne() & 1;
    return o;
}

Op op_graph(const Graph& g) {
    auto o = std::make_shared<Operation>();
    o->type = Operation::T::Leaf;
    o->leaf.add(g);
    if (o->leaf.empty()) throw PolyError("graph is zero");
    o->arity = g.nv();
    o->parity = g.ne() & 1;
    return o;
}

Op op_compose(const Op& f, const Graph& fs, int slot, const Op& g, const Graph& gs) {
    if (f->arity != fs.nv() || g->arity != gs.nv()) throw PolyError("shape does not match the operation arity");
    auto o = std::make_shared<Operation>();
    o->type = Operation::T::Compose;
    o->f = f;
    o->g = g;
    o->slot = slot;
    std::vector<int> hpos;
    insertion_layout(fs, slot, gs, o->g_pos, hpos);
    o->arity = f->arity + g->arity - 1;
    o->parity = (f->parity + g->parity) & 1;
    return o;
}

Op op_permute(const Op& f, const std::vector<int>& perm) {
    if (int(perm.size()) != f->arity) throw PolyError("permutation size mismatch");
    auto o = std::make_shared<Operation>();
    o->type = Operation::T::Permute;
    o->f = f;
    o->perm = perm;
    o->arity = f->arity;
    o->parity = f->parity;
    return o;
}

Op op_sum(std::vector<std::pair<Q, Op>> parts) {
    if (parts.empty()) throw PolyError("empty sum");
    auto o = std::make_shared<Operation>();
    o->type = Operation::T::Sum;
    o->arity = parts[0].second->arity;
    o->parity = parts[0].second->parity;
    for (auto& [c, p] : parts)
        if (p->arity != o->arity) throw PolyError("sum of operations of different arity");
    o->parts = std::move(parts);
    return o;
}

Polyvector evaluate(const Op& op, const std::vector<Polyvector>& args) {
    if (int(args.size()) != op->arity) throw PolyError("argument count mismatch");
    int d = args.empty() ? 1 : args[0].dim();
    switch (op->type) {
        case Operation::T::Leaf: return phi(op->leaf, args);
        case Operation::T::Sum: {
            Polyvector r(d);
            for (auto& [c, p] : op->parts) r = r + evaluate(p, args) * c;
            return r;
        }
        case Operation::T::Permute: {
            std::vector<int> par(args.size());
            for (size_t i = 0; i < args.size(); ++i) par[i] = args[i].parity();
            std::vector<Polyvector> a;
            for (int v : op->perm) a.push_back(args[v]);
            return evaluate(op->f, a) * Q(koszul_sign(par, op->perm));
        }
        case Operation::T::Compose: {
            const int N = op->arity;
            std::vector<int> par(N);
            for (int i = 0; i < N; ++i) par[i] = args[i].parity();
            std::vector<bool> is_g(N, false);
            for (int p : op->g_pos) is_g[p] = true;
            std::vector<int> host;
            for (int i = 0; i < N; ++i)
                if (!is_g[i]) host.push_back(i);
            // presented order: host args before the slot, guest args, the rest
            std::vector<int> order(host.begin(), host.begin() + op->slot);
            order.insert(order.end(), op->g_pos.begin(), op->g_pos.end());
            order.insert(order.end(), host.begin() + op->slot, host.end());
            int before = 0;
            for (int k = 0; k < op->slot; ++k) before += par[host[k]];
            int sign = koszul_sign(par, order) * ((op->g->parity & before & 1) ? -1 : 1);
            std::vector<Polyvector> ga;
            for (int p : op->g_pos) ga.push_back(args[p]);
            Polyvector inner = evaluate(op->g, ga);
            std::vector<Polyvector> fa;
            for (int k = 0; k < op->slot; ++k) fa.push_back(args[host[k]]);
            fa.push_back(inner);
            for (size_t k = op->slot; k < host.size(); ++k) fa.push_back(args[host[k]]);
            return evaluate(op->f, fa) * Q(sign);
        }
    }
    return Polyvector(d);
}

// ---------------------------------------------------------------- checkers

namespace {

std::string mono_str(int d, const Mono& m) { return Polyvector::mono(d, m).str(); }

std::string tuple_str(int d, const std::vector<Mono>& ms) {
    std::string s = "(";
    for (size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + mono_str(d, ms[i]);
    return s + ")";
}

std::vector<std::pair<Graph, long long>> integral_terms(const GVec& v) {
    std::vector<std::pair<Graph, long long>> r;
    for (auto& [g, c] : v) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) throw PolyError("non-integral graph coefficient");
        r.push_back({g, c.get_num().get_si()});
    }
    return r;
}

int parity_sign(int p) { return (p & 1) ? -1 : 1; }

}  // namespace

CheckReport check_operad_morphism(const Graph& host, int slot, const Graph& guest, int d,
                                  const std::vector<Mono>& basis) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.name = "morphism " + to_key(host) + " o" + std::to_string(slot + 1) + " " + to_key(guest);
    const auto lhs = integral_terms(insert(host, slot, guest));
    std::vector<int> gpos, hpos;
    insertion_layout(host, slot, guest, gpos, hpos);
    const int N = host.nv() + guest.nv() - 1, q = guest.nv(), B = int(basis.size());
    rep.cases = 1;
    for (int i = 0; i < N; ++i) rep.cases *= B;
    if (B == 0) return rep;
    // Each edge takes one x and one psi, and every edge at a vertex takes one
    // variable from the argument there, on both sides.  Tuples violating these
    // counts vanish on both sides and are not evaluated.
    const int edges = host.ne() + guest.ne();
    std::vector<int> need(N, 0);
    {
        auto hd = host.degrees(), gd = guest.degrees();
        for (int j = 0; j < q; ++j) need[gpos[j]] = gd[j];
        for (int k = 0, j = 0; k < host.nv(); ++k)
            if (k != slot) need[hpos[j++]] = hd[k];
    }
    int max_deg = 0;
    for (auto& m : basis) max_deg = std::max(max_deg, m.even_degree() + m.odd_degree());

    std::vector<int> order(hpos.begin(), hpos.begin() + slot);
    order.insert(order.end(), gpos.begin(), gpos.end());
    order.insert(order.end(), hpos.begin() + slot, hpos.end());
    const int gpar = guest.ne() & 1;

    std::vector<Mono> args(N), ha(host.nv()), ga(q);
    std::vector<int> par(N);
    Terms L, R, inner;
    long long evaluated = 0;
    auto eval = [&] {
        ++evaluated;
        L.clear();
        R.clear();
        inner.clear();
        for (int i = 0; i < N; ++i) par[i] = args[i].odd_degree() & 1;
        for (auto& [g, c] : lhs) phi_mono(g, d, args, c, L);
        for (int j = 0; j < q; ++j) ga[j] = args[gpos[j]];
        phi_mono(guest, d, ga, 1, inner);
        if (!inner.empty()) {
            int before = 0;
            for (int k = 0; k < slot; ++k) before += par[hpos[k]];
            int sign = koszul_sign(par, order) * parity_sign(gpar * before);
            for (int k = 0, j = 0; k < host.nv(); ++k)
                if (k != slot) ha[k] = args[hpos[j++]];
            for (auto& [m, c] : inner) {
                if (!c) continue;
                ha[slot] = m;
                phi_mono(host, d, ha, sign * c, R);
            }
        }
        acc_clean(L);
        acc_clean(R);
        if (L != R && rep.failures++ == 0) rep.witness = tuple_str(d, args);
    };
    std::function<void(int, int, int)> rec = [&](int i, int xs, int ps) {
        const int left = N - i;
        if (xs + ps + left * max_deg < 2 * edges) return;
        if (xs + left * max_deg < edges || ps + left * std::min(max_deg, d) < edges) return;
        if (i == N) {
            eval();
            return;
        }
        for (auto& m : basis) {
            if (m.even_degree() + m.odd_degree() < need[i]) continue;
            args[i] = m;
            rec(i + 1, xs + m.even_degree(), ps + m.odd_degree());
        }
    };
    rec(0, 0, 0);
    rep.evaluated = evaluated;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------- relations

namespace {

Graph gen_w() { return make_graph(Kind::TwoLabelled, 2, 0, {}); }         // wedge
Graph gen_m() { return make_graph(Kind::TwoLabelled, 1, 1, {{0, 1}}); }   // white-black bracket
Graph gen_e() { return make_graph(Kind::OneLabelled, 0, 2, {{0, 1}}); }   // bracket
Graph gen_p() { return make_graph(Kind::OneLabelled, 0, 2, {}); }         // product

struct Relation {
    GVec graph_side;
    Op op;
};

struct Piece {
    Q c;
    Graph host, guest;
    int slot;
    std::vector<int> perm;  // empty for identity
};

Relation build_relation(const std::vector<Piece>& pieces) {
    Relation r;
    std::vector<std::pair<Q, Op>> parts;
    for (auto& p : pieces) {
        GVec g = insert(p.host, p.slot, p.guest);
        Op o = op_compose(op_graph(p.host), p.host, p.slot, op_graph(p.guest), p.guest);
        if (!p.perm.empty()) {
            GVec s;
            for (auto& [k, c] : g) {
                Graph x = relabel(k, p.perm, k.kind, k.m, k.n);
                s.add(x, c);
            }
            g = s;
            o = op_permute(o, p.perm);
        }
        r.graph_side.add(g, p.c);
        parts.push_back({p.c, o});
    }
    r.op = op_sum(std::move(parts));
    return r;
}

Relation relation(const std::string& id) {
    if (id == "assoc") return build_relation({{1, gen_w(), gen_w(), 0, {}}, {-1, gen_w(), gen_w(), 1, {}}});
    if (id == "jacobi")
        return build_relation({{1, gen_e(), gen_e(), 0, {}},
                               {1, gen_e(), gen_e(), 0, {1, 2, 0}},
                               {1, gen_e(), gen_e(), 0, {2, 0, 1}}});
    if (id == "gerstenhaber-compat")
        return build_relation({{1, gen_e(), gen_p(), 1, {}},
                               {-1, gen_p(), gen_e(), 0, {}},
                               {-1, gen_p(), gen_e(), 0, {0, 2, 1}}});
    if (id == "ncg-compat-1")
        return build_relation({{1, gen_m(), gen_w(), 0, {}},
                               {-1, gen_w(), gen_m(), 0, {}},
                               {-1, gen_w(), gen_m(), 1, {}}});
    if (id == "ncg-compat-2")
        return build_relation({{1, gen_m(), gen_e(), 1, {}},
                               {1, gen_m(), gen_m(), 0, {}},
                               {1, gen_m(), gen_m(), 0, {0, 2, 1}}});
    throw PolyError("unknown relation: " + id);
}

}  // namespace

std::vector<std::string> relation_ids() {
    return {"assoc", "jacobi", "gerstenhaber-compat", "ncg-compat-1", "ncg-compat-2"};
}

CheckReport relation_check(const std::string& id, int d, const std::vector<Mono>& basis) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.name = id;
    Relation r = relation(id);
    ++rep.cases;
    if (!r.graph_side.empty()) {
        ++rep.failures;
        rep.witness = "graph side: " + r.graph_side.to_json().dump();
    }
    const int N = r.op->arity, B = int(basis.size());
    if (B > 0) {
        std::vector<int> idx(N, 0);
        std::vector<Polyvector> args(N, Polyvector(d));
        for (;;) {
            for (int i = 0; i < N; ++i) args[i] = Polyvector::mono(d, basis[idx[i]]);
            Polyvector v = evaluate(r.op, args);
            ++rep.cases;
            if (!v.empty() && rep.failures++ == 0) {
                std::vector<Mono> ms;
                for (int i : idx) ms.push_back(basis[i]);
                rep.witness = tuple_str(d, ms) + " -> " + v.str();
            }
            int i = N - 1;
            while (i >= 0 && ++idx[i] == B) idx[i--] = 0;
            if (i < 0) break;
        }
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------- twisting

Polyvector schouten(const Polyvector& a, const Polyvector& b) { return phi(gen_e(), {a, b}); }

TwistedAss twist_by_poisson(const GVec& def_element, const Polyvector& pi, int K) {
    for (auto& [m, c] : pi.terms())
        if (m.odd_degree() != 2) throw PolyError("the Poisson datum must be a bivector field");
    if (K < 1) throw PolyError("hbar order must be positive");
    TwistedAss t;
    t.d = pi.dim();
    t.K = K;
    t.pi = pi;
    for (auto& [g, c] : def_element) {
        if (g.kind != Kind::TwoOrdered) throw PolyError("twisting needs a Def element");
        if (g.n < K) t.by_arity[g.m].add_key(g, c);
    }
    return t;
}

Series TwistedAss::mu(int m, const std::vector<Polyvector>& xs) const {
    if (int(xs.size()) != m) throw PolyError("argument count mismatch");
    Series s;
    s.c.assign(K, Polyvector(d));
    auto it = by_arity.find(m);
    if (it == by_arity.end()) return s;
    for (auto& [g, c] : it->second) {
        std::vector<Polyvector> args = xs;
        for (int j = 0; j < g.n; ++j) args.push_back(pi);
        s.c[g.n] = s.c[g.n] + phi(g, args) * c;
    }
    return s;
}

std::vector<CheckReport> ainf_relation_check(const TwistedAss& t, int max_arity, const std::vector<Mono>& basis) {
    std::vector<CheckReport> out;
    const int B = int(basis.size());
    for (int N = 1; N <= max_arity; ++N) {
        auto t0 = std::chrono::steady_clock::now();
        CheckReport rep;
        rep.name = "arity " + std::to_string(N);
        std::vector<int> idx(N, 0);
        std::vector<Polyvector> xs(N, Polyvector(t.d));
        std::vector<int> par(N);
        while (B > 0) {
            for (int i = 0; i < N; ++i) {
                xs[i] = Polyvector::mono(t.d, basis[idx[i]]);
                par[i] = basis[idx[i]].odd_degree() & 1;
            }
            std::vector<Polyvector> total(t.K, Polyvector(t.d));
            for (int q = 1; q <= N; ++q) {
                int p = N - q + 1;
                if (!t.by_arity.count(p) || !t.by_arity.count(q)) continue;
                for (int i = 1; i <= p; ++i) {
                    // mu_p(x_1..x_{i-1}, mu_q(x_i..x_{i+q-1}), ...)
                    int theta = (p - i) + (i - 1) * (2 - q);
                    int before = 0;
                    for (int j = 0; j < i - 1; ++j) before += par[j];
                    int sign = parity_sign(theta + (2 - q) * before);
                    Series inner = t.mu(q, std::vector<Polyvector>(xs.begin() + (i - 1), xs.begin() + (i - 1 + q)));
                    for (int k1 = 0; k1 < t.K; ++k1) {
                        if (inner.c[k1].empty()) continue;
                        std::vector<Polyvector> a(xs.begin(), xs.begin() + (i - 1));
                        a.push_back(inner.c[k1]);
                        a.insert(a.end(), xs.begin() + (i - 1 + q), xs.end());
                        Series outer = t.mu(p, a);
                        for (int k2 = 0; k1 + k2 < t.K; ++k2)
                            total[k1 + k2] = total[k1 + k2] + outer.c[k2] * Q(sign);
                    }
                }
            }
            ++rep.cases;
            for (int k = 0; k < t.K; ++k)
                if (!total[k].empty()) {
                    if (rep.failures++ == 0) {
                        std::vector<Mono> ms;
                        for (int i : idx) ms.push_back(basis[i]);
                        rep.witness = tuple_str(t.d, ms) + " hbar^" + std::to_string(k) + ": " + total[k].str();
                    }
                    break;
                }
            int i = N - 1;
            while (i >= 0 && ++idx[i] == B) idx[i--] = 0;
            if (i < 0) break;
        }
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(rep);
    }
    return out;
}

}  // namespace gcw
