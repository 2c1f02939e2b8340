#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sg/ratmat.hpp"
#include "sg/superdata.hpp"

namespace sg {

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotUnitModU : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One term of the normal-ordering rule d^j z^k = sum_i C(j,i) C(k,i) i! z^{k-i} d^{j-i}:
// the summand with index i has monomial z^{k-i} d^{j-i} and the stated coefficient.
struct NormalOrderTerm {
    int i;
    Rat coeff;
};
std::vector<NormalOrderTerm> normal_order(int j, int k);

// A truncated pseudo-differential operator: finitely many d-powers with
// matrix coefficients.  `floor` is the lowest power whose coefficient is
// known to be correct; nothing below it is stored.  `exact` means the whole
// element is represented (no unknown tail), in which case floor is only a
// storage bound for zeros.
class OperatorElement {
  public:
    OperatorElement() : rows_(0), cols_(0), floor_(0), exact_(true) {}
    OperatorElement(int rows, int cols)
        : rows_(rows), cols_(cols), floor_(0), exact_(true) {}

    static OperatorElement zero(int rows, int cols);
    static OperatorElement one(int dim);
    // coeff * d^power
    static OperatorElement dpow(int dim, int power, const RatFun& coeff = RatFun(Rat(1)));
    static OperatorElement from_coeff(int power, RatMat m);
    // scalar (1x1) element from a rational function
    static OperatorElement scalar(const RatFun& f, int power = 0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool exact() const { return exact_; }
    int floor() const { return floor_; }
    bool is_zero() const { return coeffs_.empty(); }
    // highest stored power; `low` when nothing stored
    int top() const { return coeffs_.empty() ? floor_ - 1 : coeffs_.rbegin()->first; }
    int low() const { return coeffs_.empty() ? floor_ : coeffs_.begin()->first; }
    const std::map<int, RatMat>& coeffs() const { return coeffs_; }
    RatMat coeff(int power) const;
    bool has(int power) const { return coeffs_.count(power) > 0; }

    void set_coeff(int power, RatMat m);
    void mark_window(int floor) {
        exact_ = false;
        floor_ = floor;
        drop_below(floor);
    }

    OperatorElement operator+(const OperatorElement& o) const;
    OperatorElement operator-(const OperatorElement& o) const;
    OperatorElement operator-() const;
    OperatorElement scale(const Rat& s) const;

    std::string str(const std::string& var = "z") const;

  private:
    void drop_below(int floor);
    friend OperatorElement op_mul(const OperatorElement&, const OperatorElement&, int);
    friend OperatorElement op_invert(const OperatorElement&, int);
    int rows_, cols_;
    int floor_;
    bool exact_;
    std::map<int, RatMat> coeffs_;
};

// Product truncated below `floor`; reliability of the result accounts for
// both inputs' windows.
OperatorElement op_mul(const OperatorElement& a, const OperatorElement& b, int floor);

// Two-sided inverse within the window.  Requires the top coefficient matrix
// invertible over the rational-function field; verifies y*a = 1 as well.
OperatorElement op_invert(const OperatorElement& a, int floor);

// a applied to a constant vector: coefficients become column matrices
OperatorElement op_apply(const OperatorElement& a, const QVec& v);

// right composition with d^shift
OperatorElement op_shift(const OperatorElement& a, int shift);

// Coefficientwise comparison on every power both sides are reliable about.
// Returns the first differing power, or nullopt when equal.
std::optional<int> op_mismatch(const OperatorElement& a, const OperatorElement& b);
inline bool op_equal(const OperatorElement& a, const OperatorElement& b) {
    return !op_mismatch(a, b).has_value();
}

// Polynomial in u with operator coefficients, truncated at u^N.  All terms
// exact and differential (no negative d-powers).
class USeries {
  public:
    USeries() = default;
    USeries(int order, int dim);  // zero series mod u^{order+1}

    static USeries one(int order, int dim);
    static USeries one_plus_u(int order, const OperatorElement& x);  // 1 + u x

    int order() const { return (int)terms_.size() - 1; }
    int dim() const { return dim_; }
    const OperatorElement& term(int k) const { return terms_.at(k); }
    OperatorElement& term(int k) { return terms_.at(k); }

    USeries operator+(const USeries& o) const;
    USeries operator-(const USeries& o) const;
    USeries operator*(const USeries& o) const;
    USeries operator-() const;
    bool operator==(const USeries& o) const;

    // u^i term may only carry d-powers 0..i
    bool shape_ok() const;

  private:
    int dim_ = 0;
    std::vector<OperatorElement> terms_;
};

// Inverse mod u^{N+1}; the constant term must be a single power-0
// coefficient invertible over rational functions (throws NotUnitModU).
USeries useries_invert(const USeries& a);

// ---- matrices over the ring ------------------------------------------------

template <class T>
struct OpMatrix {
    int n = 0;
    std::vector<T> e;  // row-major
    SignSeq type;

    OpMatrix() = default;
    OpMatrix(int size, SignSeq s) : n(size), e(size_t(size) * size), type(std::move(s)) {}
    T& at(int i, int j) { return e[size_t(i - 1) * n + (j - 1)]; }            // 1-based
    const T& at(int i, int j) const { return e[size_t(i - 1) * n + (j - 1)]; }
};

// Evaluation context selecting the computation mode.
struct WindowCtx {
    int floor;
};
struct UCtx {};

inline OperatorElement ring_mul(const OperatorElement& a, const OperatorElement& b,
                                const WindowCtx& c) {
    return op_mul(a, b, c.floor);
}
inline OperatorElement ring_inv(const OperatorElement& a, const WindowCtx& c) {
    return op_invert(a, c.floor);
}
inline OperatorElement ring_one_like(const OperatorElement& a, const WindowCtx&) {
    return OperatorElement::one(a.rows());
}
inline USeries ring_mul(const USeries& a, const USeries& b, const UCtx&) { return a * b; }
inline USeries ring_inv(const USeries& a, const UCtx&) { return useries_invert(a); }
inline USeries ring_one_like(const USeries& a, const UCtx&) {
    return USeries::one(a.order(), a.dim());
}

struct QuasiminorError : std::runtime_error {
    int stage;
    QuasiminorError(int stage_, const std::string& what)
        : std::runtime_error("quasiminor stage " + std::to_string(stage_) + ": " + what),
          stage(stage_) {}
};

// Principal quasiminors d_1..d_n by iterated one-row Schur complements.
template <class T, class Ctx>
std::vector<T> quasiminors(const OpMatrix<T>& a, const Ctx& ctx) {
    std::vector<T> d;
    int size = a.n;
    std::vector<T> work = a.e;
    for (int stage = 0; stage < size; ++stage) {
        int w = size - stage;
        d.push_back(work[0]);
        if (w == 1) break;
        T pivot_inv = [&] {
            try {
                return ring_inv(work[0], ctx);
            } catch (const std::exception& ex) {
                throw QuasiminorError(stage + 1, ex.what());
            }
        }();
        std::vector<T> next(size_t(w - 1) * (w - 1));
        for (int i = 1; i < w; ++i)
            for (int j = 1; j < w; ++j) {
                T yx = ring_mul(ring_mul(work[size_t(i) * w], pivot_inv, ctx),
                                work[size_t(j)], ctx);
                next[size_t(i - 1) * (w - 1) + (j - 1)] = work[size_t(i) * w + j] - yx;
            }
        work = std::move(next);
    }
    return d;
}

// Ber^s A = d_1^{s_hat_1} ... d_k^{s_hat_k}
template <class T, class Ctx>
T berezinian(const OpMatrix<T>& a, const Ctx& ctx) {
    std::vector<T> d = quasiminors(a, ctx);
    T acc = ring_one_like(a.e[0], ctx);
    for (int i = 1; i <= a.n; ++i) {
        const T& f = d[i - 1];
        acc = a.type.s_hat(i) == 1 ? ring_mul(acc, f, ctx) : ring_mul(acc, ring_inv(f, ctx), ctx);
    }
    return acc;
}

// Column determinant: sum over permutations, first column's factor leftmost.
template <class T, class Ctx>
T cdet(const OpMatrix<T>& a, const Ctx& ctx) {
    const int size = a.n;
    std::vector<int> perm(size);
    for (int i = 0; i < size; ++i) perm[i] = i + 1;
    T acc = ring_one_like(a.e[0], ctx);
    bool first = true;
    do {
        int inv = 0;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (perm[i] > perm[j]) ++inv;
        T prod = a.at(perm[0], 1);
        for (int c = 2; c <= size; ++c) prod = ring_mul(prod, a.at(perm[c - 1], c), ctx);
        if (inv % 2) prod = -prod;
        if (first) {
            acc = prod;
            first = false;
        } else {
            acc = acc + prod;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// A^sigma = [ a_{sigma^{-1}(i), sigma^{-1}(j)} ], with the type permuted the same way.
template <class T>
OpMatrix<T> permute_matrix(const OpMatrix<T>& a, const Perm& sigma) {
    Perm inv = sigma.inverse();
    OpMatrix<T> out(a.n, permute_signs(a.type, sigma));
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) out.at(i, j) = a.at(inv(i), inv(j));
    return out;
}

// Full inverse over the ring by recursive Schur complements; used by tests
// and by the direct (boxed) quasideterminant route.
template <class T, class Ctx>
OpMatrix<T> op_matrix_inverse(const OpMatrix<T>& a, const Ctx& ctx) {
    OpMatrix<T> out(a.n, a.type);
    if (a.n == 1) {
        out.at(1, 1) = ring_inv(a.at(1, 1), ctx);
        return out;
    }
    T winv = ring_inv(a.at(1, 1), ctx);
    int k = a.n - 1;
    OpMatrix<T> s(k, SignSeq{std::vector<int>(a.type.bits.begin() + 1, a.type.bits.end())});
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            s.at(i, j) = a.at(i + 1, j + 1) -
                         ring_mul(ring_mul(a.at(i + 1, 1), winv, ctx), a.at(1, j + 1), ctx);
    OpMatrix<T> sinv = op_matrix_inverse(s, ctx);
    // top-left block
    T corner = winv;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            T t = ring_mul(ring_mul(ring_mul(ring_mul(winv, a.at(1, i + 1), ctx),
                                             sinv.at(i, j), ctx),
                                    a.at(j + 1, 1), ctx),
                           winv, ctx);
            corner = corner + t;
        }
    out.at(1, 1) = corner;
    for (int j = 1; j <= k; ++j) {
        T t = ring_one_like(a.e[0], ctx);
        bool started = false;
        for (int i = 1; i <= k; ++i) {
            T term = ring_mul(ring_mul(winv, a.at(1, i + 1), ctx), sinv.at(i, j), ctx);
            if (!started) {
                t = -term;
                started = true;
            } else {
                t = t - term;
            }
        }
        out.at(1, j + 1) = t;
    }
    for (int i = 1; i <= k; ++i) {
        T t = ring_one_like(a.e[0], ctx);
        bool started = false;
        for (int j = 1; j <= k; ++j) {
            T term = ring_mul(ring_mul(sinv.at(i, j), a.at(j + 1, 1), ctx), winv, ctx);
            if (!started) {
                t = -term;
                started = true;
            } else {
                t = t - term;
            }
        }
        out.at(i + 1, 1) = t;
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) out.at(i + 1, j + 1) = sinv.at(i, j);
    return out;
}

inline bool op_ring_is_zero(const OperatorElement& x) { return x.is_zero(); }
inline bool op_ring_is_zero(const USeries& x) {
    for (int k = 0; k <= x.order(); ++k)
        if (!x.term(k).is_zero()) return false;
    return true;
}

struct ManinViolation {
    int i, j, k, l;
};

// Manin relations [a_ij, a_kl] = (-1)^{s_i s_j + s_i s_k + s_j s_k} [a_kj, a_il],
// with supercommutators graded by the type sequence.
template <class T, class Ctx>
std::vector<ManinViolation> manin_check(const OpMatrix<T>& a, const Ctx& ctx) {
    auto parity = [&](int i, int j) { return (a.type.s(i) + a.type.s(j)) % 2; };
    auto scomm = [&](const T& x, int px, const T& y, int py) {
        T xy = ring_mul(x, y, ctx);
        T yx = ring_mul(y, x, ctx);
        return (px && py) ? xy + yx : xy - yx;
    };
    std::vector<ManinViolation> bad;
    const int size = a.n;
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j)
            for (int k = 1; k <= size; ++k)
                for (int l = 1; l <= size; ++l) {
                    T lhs = scomm(a.at(i, j), parity(i, j), a.at(k, l), parity(k, l));
                    T rhs = scomm(a.at(k, j), parity(k, j), a.at(i, l), parity(i, l));
                    int sgn = (a.type.s(i) * a.type.s(j) + a.type.s(i) * a.type.s(k) +
                               a.type.s(j) * a.type.s(k)) %
                              2;
                    T diff = sgn ? lhs + rhs : lhs - rhs;
                    if (!op_ring_is_zero(diff)) bad.push_back({i, j, k, l});
                }
    return bad;
}

// entry (i,j) must be parity-homogeneous of parity s_i + s_j with respect to
// the module grading
bool entries_parity_homogeneous(const OpMatrix<OperatorElement>& a,
                                const std::vector<int>& module_parity);
bool entries_parity_homogeneous(const OpMatrix<USeries>& a,
                                const std::vector<int>& module_parity);

}  // namespace sg
