#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gcw/complexes.hpp"

namespace gcw {

constexpr int kMaxDim = 6;

// x^e psi_S: even exponents and a bit mask of odd variables (increasing order).
struct Mono {
    std::array<uint8_t, kMaxDim> x{};
    uint8_t psi = 0;
    auto operator<=>(const Mono&) const = default;
    int odd_degree() const { return __builtin_popcount(psi); }
    int even_degree() const;
};

class PolyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Polynomial polyvector field on R^d with exact coefficients.
class Polyvector {
public:
    explicit Polyvector(int d = 1) : d_(d) {
        if (d < 1 || d > kMaxDim) throw PolyError("dimension out of range");
    }
    static Polyvector mono(int d, const Mono& m, const Q& c = Q(1));
    // `3/2 x1^2 x3 p2 p4 + x2 - p1 p3`; p_i is the odd variable psi_i
    static Polyvector parse(int d, const std::string& s);

    int dim() const { return d_; }
    void add(const Mono& m, const Q& c);
    Polyvector operator+(const Polyvector& o) const;
    Polyvector operator-(const Polyvector& o) const;
    Polyvector operator*(const Q& c) const;
    bool operator==(const Polyvector& o) const { return d_ == o.d_ && t_ == o.t_; }
    bool empty() const { return t_.empty(); }
    const std::map<Mono, Q>& terms() const { return t_; }
    // parity of the odd degree; throws unless homogeneous
    int parity() const;
    std::string str() const;

private:
    int d_;
    std::map<Mono, Q> t_;
};

// All monomials in d variables with even degree + odd degree <= deg.
std::vector<Mono> monomial_basis(int d, int deg);

// Canonical representation: vertex slots in key order (whites first), each
// edge acting by sum_a d/dx^a_(u) d/dpsi_a(v) + d/dpsi_a(u) d/dx^a_(v) (left
// derivatives), the last edge applied first, then multiplication.
Polyvector phi(const Graph& g, const std::vector<Polyvector>& args);
Polyvector phi(const GVec& v, const std::vector<Polyvector>& args);

// Koszul sign of presenting args in the order `order` (order[k] = index of the
// k-th presented argument) relative to their natural order.
int koszul_sign(const std::vector<int>& parities, const std::vector<int>& order);

// ---- operations in End(T_poly) built from graphs
struct Operation;
using Op = std::shared_ptr<const Operation>;
struct Operation {
    enum class T { Leaf, Compose, Permute, Sum } type = T::Leaf;
    int arity = 0;
    int parity = 0;  // operator degree mod 2
    GVec leaf;        // Leaf
    Op f, g;          // Compose: f o_slot g with g's inputs placed at `g_pos`
    std::vector<int> g_pos;
    int slot = 0;
    std::vector<int> perm;  // Permute: vertex v of f reads argument perm[v]
    std::vector<std::pair<Q, Op>> parts;  // Sum
};
Op op_graph(const GVec& v);
Op op_graph(const Graph& g);
// f o_slot g in the same vertex layout as graph insertion of a guest with
// that shape into vertex `slot` of a host with f's shape.
Op op_compose(const Op& f, const Graph& f_shape, int slot, const Op& g, const Graph& g_shape);
Op op_permute(const Op& f, const std::vector<int>& perm);
Op op_sum(std::vector<std::pair<Q, Op>> parts);
Polyvector evaluate(const Op& op, const std::vector<Polyvector>& args);

// The result layout of inserting a graph of g_shape into `slot` of f_shape:
// positions (in the result) of the guest's vertices and of the host's other
// vertices (host order, slot omitted).
void insertion_layout(const Graph& f_shape, int slot, const Graph& g_shape, std::vector<int>& guest_pos,
                      std::vector<int>& host_pos);

// ---- checkers
struct CheckReport {
    std::string name;
    long long cases = 0;
    long long evaluated = -1;  // tuples actually evaluated, when some vanish by degree counting
    long long failures = 0;
    std::string witness;
    double seconds = 0;
    bool ok() const { return failures == 0; }
};

// phi(insert(host, slot, guest)) == phi(host) o_slot phi(guest) on every
// tuple of basis monomials.
CheckReport check_operad_morphism(const Graph& host, int slot, const Graph& guest, int d,
                                  const std::vector<Mono>& basis);

// Relations among the generator images, checked on the graph side (the
// combination vanishes) and on the representation side (on every tuple of
// basis monomials).  ids: assoc, jacobi, gerstenhaber-compat, ncg-compat-1, ncg-compat-2
std::vector<std::string> relation_ids();
CheckReport relation_check(const std::string& id, int d, const std::vector<Mono>& basis);

// ---- hbar series
struct Series {
    std::vector<Polyvector> c;  // c[k] multiplies hbar^k
    int order() const { return int(c.size()); }
};

// The A_inf structure of a Def element with black vertices decorated by hbar*pi.
struct TwistedAss {
    int d = 1, K = 1;
    Polyvector pi;
    std::map<int, GVec> by_arity;  // white count -> Def part
    // mu_m(x_1..x_m) as an hbar series mod hbar^K
    Series mu(int m, const std::vector<Polyvector>& xs) const;
    int max_arity() const { return by_arity.empty() ? 0 : by_arity.rbegin()->first; }
};
TwistedAss twist_by_poisson(const GVec& def_element, const Polyvector& pi, int K);
// Schouten self-bracket phi(edge)(pi, pi)
Polyvector schouten(const Polyvector& a, const Polyvector& b);

// sum over p + q - 1 = N, i of the signed mu_p o_i mu_q on every tuple of
// basis monomials, mod hbar^K, for N = 1..max_arity.
std::vector<CheckReport> ainf_relation_check(const TwistedAss& t, int max_arity, const std::vector<Mono>& basis);

}  // namespace gcw
