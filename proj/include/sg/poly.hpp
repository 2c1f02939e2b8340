#pragma once

#include <utility>
#include <vector>

#include "sg/rat.hpp"

namespace sg {

// Dense univariate polynomial over Rat, coefficients lowest degree first.
// Invariant: the highest stored coefficient is nonzero (zero = empty vector).
class Poly {
  public:
    Poly() = default;
    explicit Poly(Rat constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, Rat coeff = Rat(1));
    // z - a
    static Poly linear_root(const Rat& a);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return (k >= 0 && k < (int)c_.size()) ? c_[k] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    // quotient and remainder; divisor must be nonzero
    std::pair<Poly, Poly> divrem(const Poly& d) const;

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Poly monic() const;
    // coefficients reversed: z^deg * p(1/z)
    Poly reverse() const;
    // multiplicity of root a (0 if p(a) != 0); zero polynomial -> -1
    int root_multiplicity(const Rat& a) const;

    std::string str(const std::string& var = "z") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Monic gcd, computed by a primitive PRS over the integers to avoid
// rational coefficient swell.
Poly poly_gcd(const Poly& a, const Poly& b);

// All rational roots with multiplicities, found by monicizing, clearing
// denominators and testing divisor candidates.  Returns (root, mult) pairs;
// the remaining factor after deflation is returned through `rest`.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p, Poly* rest = nullptr);

}  // namespace sg
