#pragma once

#include <map>
#include <vector>

#include "sg/rat.hpp"

namespace sg {

using QVec = std::vector<Rat>;

// Sparse exact matrix; no explicit zeros are stored.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    static QMatrix identity(int n);
    static QMatrix from_dense(const std::vector<QVec>& rows);
    // columns of the matrix are the given vectors
    static QMatrix from_columns(const std::vector<QVec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<std::pair<int, int>, Rat>& entries() const { return e_; }

    Rat at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void add_to(int r, int c, const Rat& v) { set(r, c, at(r, c) + v); }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rat& s) const;
    bool operator==(const QMatrix& o) const;
    bool is_zero() const { return e_.empty(); }

    QMatrix transpose() const;
    QVec apply(const QVec& v) const;
    QVec column(int c) const;
    // [A,B] = AB - BA
    QMatrix commutator(const QMatrix& o) const { return *this * o - o * *this; }

    // flatten row-major into a vector of length rows*cols
    QVec flatten() const;

  private:
    int rows_, cols_;
    std::map<std::pair<int, int>, Rat> e_;
};

// Basis of the right null space { v : A v = 0 }, fraction-free elimination.
std::vector<QVec> kernel_basis(const QMatrix& a);

int rank(const QMatrix& a);

// Incremental row-echelon basis over Q; used for spans, closures, membership.
class EchelonBasis {
  public:
    explicit EchelonBasis(int dim) : dim_(dim) {}
    // returns true if v was independent (and got inserted)
    bool insert(QVec v);
    bool contains(QVec v) const;
    int size() const { return (int)rows_.size(); }
    int dim() const { return dim_; }
    const std::vector<QVec>& rows() const { return rows_; }

  private:
    void reduce(QVec& v) const;
    int dim_;
    std::vector<QVec> rows_;    // each with leading coefficient 1
    std::vector<int> pivots_;   // pivot column per row, increasing
};

// Solve B x = target where B's columns span the target (throws otherwise).
QVec solve_in_span(const QMatrix& basis_cols, const QVec& target);

// Linear basis of the unital algebra generated by gens: seed {I} + gens,
// multiply by generators until the flattened span stops growing.
std::vector<QMatrix> algebra_closure(const std::vector<QMatrix>& gens, int dim);

}  // namespace sg
