#pragma once

#include <functional>
#include <map>
#include <tuple>

#include "gcw/graph.hpp"

namespace gcw {

// Finite linear combination of canonical keys with exact coefficients.
class GVec {
public:
    using Map = std::map<Graph, Q>;

    GVec() = default;
    static GVec single(const Graph& raw, const Q& c = Q(1));

    // key must already be canonical
    void add_key(const Graph& key, const Q& c);
    // canonicalizes; silently drops zero graphs
    void add(const Graph& raw, const Q& c = Q(1));
    void add(const GVec& v, const Q& c = Q(1));

    GVec operator+(const GVec& o) const;
    GVec operator-(const GVec& o) const;
    GVec operator*(const Q& c) const;
    GVec& operator+=(const GVec& o) { add(o); return *this; }
    GVec& operator-=(const GVec& o) { add(o, Q(-1)); return *this; }

    bool empty() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const Map& terms() const { return t_; }
    Q coeff(const Graph& key) const;
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }
    bool operator==(const GVec& o) const { return t_ == o.t_; }

    // homogeneous part of one (m, n, l) bigrade
    GVec extract(int m, int n, int l) const;
    GVec filter(const std::function<bool(const Graph&)>& keep) const;
    int max_vertices() const;
    int min_vertices() const;

    nlohmann::json to_json() const;
    static GVec from_json(const nlohmann::json& j);

private:
    void check_kind(Kind k);
    Map t_;
};

using Bigrade = std::tuple<int, int, int>;  // (m, n, l)
inline Bigrade bigrade(const Graph& g) { return {g.m, g.n, g.ne()}; }

}  // namespace gcw
