#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "gcw/vector.hpp"

namespace gcw {

using Z = mpz_class;
using SVecZ = std::vector<std::pair<int, Z>>;  // sorted by index, no zeros
using SVecQ = std::vector<std::pair<int, Q>>;

struct SparseMatrix {
    int rows = 0, cols = 0;
    std::map<std::pair<int, int>, Q> entries;  // (row, col) -> value, no zeros

    void set(int r, int c, const Q& v);
    Q at(int r, int c) const;
    SparseMatrix transpose() const;
    std::vector<SVecQ> row_vectors() const;
    std::vector<SVecQ> col_vectors() const;
    SparseMatrix operator*(const SparseMatrix& o) const;
    bool is_zero() const { return entries.empty(); }
    SVecQ apply(const SVecQ& x) const;
};

// MatrixMarket-style coordinate dump with exact p/q entries.
void write_matrix_market(std::ostream& os, const SparseMatrix& m);

// Row echelon form over the integers (fraction free, primitive rows).
// Rows keep the smallest column index as pivot.
class Echelon {
public:
    explicit Echelon(int width = 0) : width_(width) {}
    bool insert(const SVecQ& v);  // true if it increased the rank
    bool insert_z(SVecZ v);
    int rank() const { return int(rows_.size()); }
    bool contains(const SVecQ& v) const;
    // full reduction against the stored rows; result has no pivot columns
    SVecQ reduce(const SVecQ& v) const;
    std::vector<int> pivots() const;
    const std::map<int, SVecZ>& rows() const { return rows_; }

private:
    SVecZ reduce_lead(SVecZ v) const;
    int width_;
    std::map<int, SVecZ> rows_;  // pivot column -> row (leading entry > 0)
};

int rank(const SparseMatrix& m);
// any y with m*y = b, or nullopt
std::optional<std::vector<Q>> solve_preimage(const SparseMatrix& m, const std::vector<Q>& b);

// Ordered key basis of one bigrade (or of a union of bigrades).
struct BasisIndex {
    std::vector<Graph> keys;
    std::map<Graph, int> pos;
    BasisIndex() = default;
    explicit BasisIndex(std::vector<Graph> k);
    int size() const { return int(keys.size()); }
    int find(const Graph& g) const;
    SVecQ coords(const GVec& v, bool strict = true) const;
    GVec vec(const SVecQ& x) const;
    GVec vec(const std::vector<Q>& x) const;
};

class LinalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix of op from src to tgt.  With strict, image terms outside tgt throw.
SparseMatrix matrix_of(const std::function<GVec(const Graph&)>& op, const BasisIndex& src, const BasisIndex& tgt,
                       bool strict = true);

SVecQ to_sparse(const std::vector<Q>& x);
std::vector<Q> to_dense(const SVecQ& x, int n);

}  // namespace gcw
