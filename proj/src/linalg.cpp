#include "gcw/linalg.hpp"

#include <algorithm>

namespace gcw {

void SparseMatrix::set(int r, int c, const Q& v) {
    if (r < 0 || c < 0 || r >= rows || c >= cols) throw LinalgError("matrix index out of range");
    if (sgn(v) == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = v;
}

Q SparseMatrix::at(int r, int c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Q(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t;
    t.rows = cols;
    t.cols = rows;
    for (auto& [rc, v] : entries) t.entries[{rc.second, rc.first}] = v;
    return t;
}

std::vector<SVecQ> SparseMatrix::row_vectors() const {
    std::vector<SVecQ> r(rows);
    for (auto& [rc, v] : entries) r[rc.first].push_back({rc.second, v});
    return r;
}

std::vector<SVecQ> SparseMatrix::col_vectors() const { return transpose().row_vectors(); }

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (cols != o.rows) throw LinalgError("dimension mismatch in product");
    SparseMatrix p;
    p.rows = rows;
    p.cols = o.cols;
    auto orows = o.row_vectors();
    for (auto& [rc, v] : entries)
        for (auto& [c, w] : orows[rc.second]) {
            Q& x = p.entries[{rc.first, c}];
            x += v * w;
        }
    for (auto it = p.entries.begin(); it != p.entries.end();)
        it = sgn(it->second) == 0 ? p.entries.erase(it) : std::next(it);
    return p;
}

SVecQ SparseMatrix::apply(const SVecQ& x) const {
    std::map<int, Q> acc;
    std::map<int, Q> xs(x.begin(), x.end());
    for (auto& [rc, v] : entries) {
        auto it = xs.find(rc.second);
        if (it != xs.end()) acc[rc.first] += v * it->second;
    }
    SVecQ r;
    for (auto& [i, v] : acc)
        if (sgn(v) != 0) r.push_back({i, v});
    return r;
}

void write_matrix_market(std::ostream& os, const SparseMatrix& m) {
    os << "%%MatrixMarket matrix coordinate rational general\n";
    os << m.rows << " " << m.cols << " " << m.entries.size() << "\n";
    for (auto& [rc, v] : m.entries) os << rc.first + 1 << " " << rc.second + 1 << " " << q_str(v) << "\n";
}

namespace {

void make_primitive(SVecZ& v) {
    if (v.empty()) return;
    Z g = 0;
    for (auto& [i, x] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    if (v.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [i, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y, sparse
SVecZ combine(const Z& a, const SVecZ& x, const Z& b, const SVecZ& y) {
    SVecZ r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            r.push_back({x[i].first, a * x[i].second});
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.push_back({y[j].first, -b * y[j].second});
            ++j;
        } else {
            Z v = a * x[i].second - b * y[j].second;
            if (v != 0) r.push_back({x[i].first, v});
            ++i, ++j;
        }
    }
    return r;
}

// integer vector proportional to v, with the scale s such that result = s * v
SVecZ to_int(const SVecQ& v, Z& scale) {
    Z l = 1;
    for (auto& [i, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    SVecZ r;
    r.reserve(v.size());
    for (auto& [i, x] : v) {
        Z num = x.get_num() * (l / x.get_den());
        if (num != 0) r.push_back({i, num});
    }
    scale = l;
    return r;
}

}  // namespace

SVecZ Echelon::reduce_lead(SVecZ v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) break;
        const SVecZ& p = it->second;
        Z a = p.front().second, b = v.front().second;
        Z g = gcd(a, b);
        v = combine(a / g, v, b / g, p);
        make_primitive(v);
    }
    return v;
}

bool Echelon::insert_z(SVecZ v) {
    make_primitive(v);
    v = reduce_lead(std::move(v));
    if (v.empty()) return false;
    make_primitive(v);
    int c = v.front().first;
    rows_.emplace(c, std::move(v));
    return true;
}

bool Echelon::insert(const SVecQ& v) {
    Z s;
    return insert_z(to_int(v, s));
}

bool Echelon::contains(const SVecQ& v) const {
    Z s;
    auto z = to_int(v, s);
    make_primitive(z);
    return reduce_lead(std::move(z)).empty();
}

SVecQ Echelon::reduce(const SVecQ& v) const {
    Z scale;
    SVecZ x = to_int(v, scale);
    Q total(scale);  // x == total * v (up to the combinations applied below)
    // eliminate pivot columns in increasing order
    size_t k = 0;
    while (k < x.size()) {
        auto it = rows_.find(x[k].first);
        if (it == rows_.end()) {
            ++k;
            continue;
        }
        const SVecZ& p = it->second;
        Z a = p.front().second, b = x[k].second;
        Z g = gcd(a, b);
        Z af = a / g;
        x = combine(af, x, b / g, p);
        total *= af;
        // entries before k are non-pivot and untouched by p (p's lead is the pivot)
        k = 0;
        while (k < x.size() && rows_.find(x[k].first) == rows_.end()) ++k;
    }
    SVecQ r;
    for (auto& [i, z] : x) {
        Q q(z);
        q /= total;
        r.push_back({i, q});
    }
    return r;
}

std::vector<int> Echelon::pivots() const {
    std::vector<int> p;
    for (auto& [c, r] : rows_) p.push_back(c);
    return p;
}

int rank(const SparseMatrix& m) {
    auto rows = m.row_vectors();
    std::stable_sort(rows.begin(), rows.end(), [](const SVecQ& a, const SVecQ& b) { return a.size() < b.size(); });
    Echelon e(m.cols);
    for (auto& r : rows)
        if (!r.empty()) e.insert(r);
    return e.rank();
}

std::optional<std::vector<Q>> solve_preimage(const SparseMatrix& m, const std::vector<Q>& b) {
    if (int(b.size()) != m.rows) throw LinalgError("dimension mismatch in solve");
    auto rows = m.row_vectors();
    const int B = m.cols;  // augmented column
    std::vector<SVecZ> eq;
    for (int i = 0; i < m.rows; ++i) {
        SVecQ r = rows[i];
        if (sgn(b[i]) != 0) r.push_back({B, b[i]});
        if (r.empty()) continue;
        Z s;
        eq.push_back(to_int(r, s));
    }
    std::stable_sort(eq.begin(), eq.end(), [](const SVecZ& a, const SVecZ& c) { return a.size() < c.size(); });
    std::map<int, SVecZ> piv;
    for (auto& v : eq) {
        make_primitive(v);
        while (!v.empty()) {
            auto it = piv.find(v.front().first);
            if (it == piv.end()) break;
            Z a = it->second.front().second, c = v.front().second;
            Z g = gcd(a, c);
            v = combine(a / g, v, c / g, it->second);
            make_primitive(v);
        }
        if (v.empty()) continue;
        if (v.front().first == B) return std::nullopt;  // 0 = nonzero
        piv.emplace(v.front().first, std::move(v));
    }
    // back substitution, free variables zero
    std::vector<Q> y(B, Q(0));
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
        const SVecZ& r = it->second;
        Q acc(0);
        for (size_t k = 1; k < r.size(); ++k) {
            if (r[k].first == B)
                acc += Q(r[k].second);
            else
                acc -= Q(r[k].second) * y[r[k].first];
        }
        y[it->first] = acc / Q(r.front().second);
    }
    return y;
}

BasisIndex::BasisIndex(std::vector<Graph> k) : keys(std::move(k)) {
    for (int i = 0; i < int(keys.size()); ++i) pos.emplace(keys[i], i);
}

int BasisIndex::find(const Graph& g) const {
    auto it = pos.find(g);
    return it == pos.end() ? -1 : it->second;
}

SVecQ BasisIndex::coords(const GVec& v, bool strict) const {
    SVecQ r;
    for (auto& [k, c] : v) {
        int i = find(k);
        if (i < 0) {
            if (strict) throw LinalgError("vector term outside basis: " + to_key(k));
            continue;
        }
        r.push_back({i, c});
    }
    std::sort(r.begin(), r.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return r;
}

GVec BasisIndex::vec(const SVecQ& x) const {
    GVec v;
    for (auto& [i, c] : x) v.add_key(keys.at(i), c);
    return v;
}

GVec BasisIndex::vec(const std::vector<Q>& x) const { return vec(to_sparse(x)); }

SparseMatrix matrix_of(const std::function<GVec(const Graph&)>& op, const BasisIndex& src, const BasisIndex& tgt,
                       bool strict) {
    SparseMatrix M;
    M.rows = tgt.size();
    M.cols = src.size();
    for (int j = 0; j < src.size(); ++j)
        for (auto& [i, c] : tgt.coords(op(src.keys[j]), strict)) M.entries[{i, j}] = c;
    return M;
}

SVecQ to_sparse(const std::vector<Q>& x) {
    SVecQ r;
    for (int i = 0; i < int(x.size()); ++i)
        if (sgn(x[i]) != 0) r.push_back({i, x[i]});
    return r;
}

std::vector<Q> to_dense(const SVecQ& x, int n) {
    std::vector<Q> r(n, Q(0));
    for (auto& [i, c] : x) r.at(i) = c;
    return r;
}

}  // namespace gcw
