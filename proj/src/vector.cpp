#include "gcw/vector.hpp"

#include <algorithm>

namespace gcw {

GVec GVec::single(const Graph& raw, const Q& c) {
    GVec v;
    v.add(raw, c);
    return v;
}

void GVec::check_kind(Kind k) {
    if (!t_.empty() && t_.begin()->first.kind != k) throw GraphError("colour-spec mismatch in graph vector");
}

void GVec::add_key(const Graph& key, const Q& c) {
    if (sgn(c) == 0) return;
    check_kind(key.kind);
    auto [it, fresh] = t_.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

void GVec::add(const Graph& raw, const Q& c) {
    if (sgn(c) == 0) return;
    auto s = canonicalize(raw);
    if (!s) return;
    add_key(s->g, s->sign > 0 ? c : Q(-c));
}

void GVec::add(const GVec& v, const Q& c) {
    if (sgn(c) == 0) return;
    for (auto& [k, x] : v.t_) add_key(k, x * c);
}

GVec GVec::operator+(const GVec& o) const {
    GVec r = *this;
    r.add(o);
    return r;
}

GVec GVec::operator-(const GVec& o) const {
    GVec r = *this;
    r.add(o, Q(-1));
    return r;
}

GVec GVec::operator*(const Q& c) const {
    GVec r;
    r.add(*this, c);
    return r;
}

Q GVec::coeff(const Graph& key) const {
    auto it = t_.find(key);
    return it == t_.end() ? Q(0) : it->second;
}

GVec GVec::extract(int m, int n, int l) const {
    return filter([&](const Graph& g) { return g.m == m && g.n == n && g.ne() == l; });
}

GVec GVec::filter(const std::function<bool(const Graph&)>& keep) const {
    GVec r;
    for (auto& [k, c] : t_)
        if (keep(k)) r.t_.emplace(k, c);
    return r;
}

int GVec::max_vertices() const {
    int r = -1;
    for (auto& [k, c] : t_) r = std::max(r, k.nv());
    return r;
}

int GVec::min_vertices() const {
    int r = 1 << 20;
    for (auto& [k, c] : t_) r = std::min(r, k.nv());
    return r;
}

nlohmann::json GVec::to_json() const {
    auto a = nlohmann::json::array();
    for (auto& [k, c] : t_) a.push_back(term_json(k, c));
    return a;
}

GVec GVec::from_json(const nlohmann::json& j) {
    GVec v;
    if (j.is_array()) {
        for (auto& t : j) {
            auto [g, c] = parse_term(t);
            v.add(g, c);
        }
    } else {
        auto [g, c] = parse_term(j);
        v.add(g, c);
    }
    return v;
}

}  // namespace gcw
