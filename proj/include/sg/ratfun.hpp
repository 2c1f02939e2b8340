#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sg/poly.hpp"

namespace sg {

// Rational function num/den in canonical form: den monic, gcd(num, den) = 1.
class RatFun {
  public:
    RatFun() : den_(Poly(Rat(1))) {}
    explicit RatFun(Rat constant) : num_(Poly(std::move(constant))), den_(Poly(Rat(1))) {}
    explicit RatFun(Poly num) : num_(std::move(num)), den_(Poly(Rat(1))) {}
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.degree() == 0 && num_ == den_; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator-() const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun derivative() const;
    // pole order at a; 0 when regular there
    int pole_order(const Rat& a) const { return den_.root_multiplicity(a); }
    std::optional<Rat> eval(const Rat& x) const;  // nullopt at a pole
    // substitute z -> 1/t
    RatFun at_infinity() const;

    std::string str(const std::string& var = "z") const;

    // 1/(z - a)^k
    static RatFun pole_term(const Rat& a, int k, const Rat& coeff = Rat(1));

  private:
    Poly num_, den_;
};

struct PoleTerm {
    int pole_index;  // into the supplied pole list
    int order;       // r >= 1, the (z - z_i)^{-r} part
    Rat coeff;
};

struct PartialFractions {
    Poly poly_part;
    std::vector<PoleTerm> terms;
};

struct PoleOutsideSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decompose f into poly_part + sum c * (z - poles[i])^{-r}.  Throws
// PoleOutsideSet when den has a root outside the given (distinct) poles.
PartialFractions partial_fractions(const RatFun& f, const std::vector<Rat>& poles);

RatFun recombine(const PartialFractions& pf, const std::vector<Rat>& poles);

}  // namespace sg
