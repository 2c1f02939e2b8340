#include "sg/ratfun.hpp"

namespace sg {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Poly g = poly_gcd(den_, o.den_);
    Poly da = den_.divrem(g).first;
    Poly db = o.den_.divrem(g).first;
    return RatFun(num_ * db + o.num_ * da, den_ * db);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun();
    // cross-reduce before multiplying
    Poly g1 = poly_gcd(num_, o.den_);
    Poly g2 = poly_gcd(o.num_, den_);
    Poly n1 = g1.degree() > 0 ? num_.divrem(g1).first : num_;
    Poly d2 = g1.degree() > 0 ? o.den_.divrem(g1).first : o.den_;
    Poly n2 = g2.degree() > 0 ? o.num_.divrem(g2).first : o.num_;
    Poly d1 = g2.degree() > 0 ? den_.divrem(g2).first : den_;
    return RatFun(n1 * n2, d1 * d2);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    RatFun inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    Rat lead = inv.den_.leading();
    if (lead != 1) {
        Rat s = Rat(1) / lead;
        inv.num_ = inv.num_ * s;
        inv.den_ = inv.den_ * s;
    }
    return *this * inv;
}

RatFun RatFun::derivative() const {
    if (is_zero()) return RatFun();
    if (is_polynomial()) return RatFun(num_.derivative() * (Rat(1) / den_.coeff(0)));
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::optional<Rat> RatFun::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return num_.eval(x) / d;
}

RatFun RatFun::at_infinity() const {
    if (is_zero()) return RatFun();
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.reverse(), d = den_.reverse();
    if (dd >= dn)
        n = n * Poly::monomial(dd - dn);
    else
        d = d * Poly::monomial(dn - dd);
    return RatFun(std::move(n), std::move(d));
}

std::string RatFun::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFun RatFun::pole_term(const Rat& a, int k, const Rat& coeff) {
    Poly den(Rat(1));
    Poly lin = Poly::linear_root(a);
    for (int i = 0; i < k; ++i) den = den * lin;
    return RatFun(Poly(coeff), std::move(den));
}

PartialFractions partial_fractions(const RatFun& f, const std::vector<Rat>& poles) {
    PartialFractions pf;
    auto [q, r] = f.num().divrem(f.den());
    pf.poly_part = q;
    RatFun rest(r, f.den());
    // peel off the highest-order term at some listed pole until nothing is left
    while (!rest.is_zero() && !rest.is_polynomial()) {
        bool found = false;
        for (size_t i = 0; i < poles.size(); ++i) {
            int ord = rest.pole_order(poles[i]);
            if (ord <= 0) continue;
            // c = ((z-a)^ord * rest)(a)
            Poly shifted = rest.den();
            Poly lin = Poly::linear_root(poles[i]);
            for (int t = 0; t < ord; ++t) shifted = shifted.divrem(lin).first;
            Rat c = rest.num().eval(poles[i]) / shifted.eval(poles[i]);
            pf.terms.push_back({(int)i, ord, c});
            rest = rest - RatFun::pole_term(poles[i], ord, c);
            found = true;
            break;
        }
        if (!found)
            throw PoleOutsideSet("denominator root outside the given pole set: den = " +
                                 rest.den().str());
    }
    if (!rest.is_zero()) throw PoleOutsideSet("nonzero remainder after extraction");
    return pf;
}

RatFun recombine(const PartialFractions& pf, const std::vector<Rat>& poles) {
    RatFun f(pf.poly_part);
    for (const auto& t : pf.terms)
        f = f + RatFun::pole_term(poles.at(t.pole_index), t.order, t.coeff);
    return f;
}

}  // namespace sg
