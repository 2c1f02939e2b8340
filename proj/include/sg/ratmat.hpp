#pragma once

#include <vector>

#include "sg/qmatrix.hpp"
#include "sg/ratfun.hpp"

namespace sg {

struct NonInvertibleSymbol : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense matrix of rational functions.  Most entries stay zero in practice
// (module actions are weight-homogeneous), so loops skip zero entries.
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static RatMat identity(int n);
    static RatMat from_qmatrix(const QMatrix& m);
    // constant matrix times a scalar rational function
    static RatMat scaled(const QMatrix& m, const RatFun& f);
    static RatMat scalar(int n, const RatFun& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const RatFun& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
    RatFun& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }

    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const RatMat& o) const;
    RatMat operator*(const RatFun& f) const;
    RatMat operator-() const;
    bool operator==(const RatMat& o) const;
    bool is_zero() const;
    bool is_identity() const;

    RatMat derivative() const;
    RatMat inverse() const;  // throws NonInvertibleSymbol when singular
    std::vector<RatFun> apply(const QVec& v) const;
    std::vector<RatFun> apply(const std::vector<RatFun>& v) const;

    // evaluate entrywise at a point away from all poles
    QMatrix eval(const Rat& x) const;

  private:
    int rows_, cols_;
    std::vector<RatFun> e_;
};

}  // namespace sg
