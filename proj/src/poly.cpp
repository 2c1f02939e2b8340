#include "sg/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sg {

Poly Poly::monomial(int degree, Rat coeff) {
    if (coeff == 0) return Poly();
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = std::move(coeff);
    return Poly(std::move(c));
}

Poly Poly::linear_root(const Rat& a) { return Poly(std::vector<Rat>{-a, Rat(1)}); }

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rat> c(c_);
    for (auto& x : c) x = -x;
    Poly p;
    p.c_ = std::move(c);
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            c[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& s) const {
    if (s == 0) return Poly();
    std::vector<Rat> c(c_);
    for (auto& x : c) x *= s;
    Poly p;
    p.c_ = std::move(c);
    return p;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divrem: division by zero");
    std::vector<Rat> r(c_);
    int dd = d.degree();
    if ((int)r.size() - 1 < dd) return {Poly(), *this};
    std::vector<Rat> q(r.size() - dd, Rat(0));
    const Rat lead = d.leading();
    for (int k = (int)r.size() - 1 - dd; k >= 0; --k) {
        Rat f = r[k + dd] / lead;
        if (f == 0) continue;
        q[k] = f;
        for (int i = 0; i <= dd; ++i) r[k + i] -= f * d.coeff(i);
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat((long)i);
    return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * (Rat(1) / leading());
}

Poly Poly::reverse() const {
    std::vector<Rat> c(c_.rbegin(), c_.rend());
    return Poly(std::move(c));
}

int Poly::root_multiplicity(const Rat& a) const {
    if (is_zero()) return -1;
    Poly p = *this;
    Poly lin = Poly::linear_root(a);
    int m = 0;
    while (true) {
        auto [q, r] = p.divrem(lin);
        if (!r.is_zero()) break;
        ++m;
        p = q;
    }
    return m;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat a = coeff(k);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rat mag = a > 0 ? a : Rat(-a);
        if (mag != 1 || k == 0) os << rat_to_string(mag);
        if (k > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

namespace {

// integer content of a rational-coefficient polynomial scaled integral
std::vector<Int> to_primitive_int(const Poly& p) {
    Int l(1);
    for (const Rat& q : p.coeffs()) l = boost::multiprecision::lcm(l, rat_den(q));
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    Int g(0);
    for (const Rat& q : p.coeffs()) {
        Rat s = q * Rat(l);
        v.push_back(rat_num(s));
        g = boost::multiprecision::gcd(g, v.back());
    }
    if (g != 0)
        for (auto& x : v) x /= g;
    return v;
}

Int int_content(const std::vector<Int>& v) {
    Int g(0);
    for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

// pseudo-remainder of a by b over Z, then divided by its content
std::vector<Int> prim_prem(std::vector<Int> a, const std::vector<Int>& b) {
    const Int lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Int la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    Int g = int_content(a);
    if (g > 1)
        for (auto& x : a) x /= g;
    return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Int> u = to_primitive_int(a), v = to_primitive_int(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        auto r = prim_prem(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rat> c(u.size());
    for (size_t i = 0; i < u.size(); ++i) c[i] = Rat(u[i], u.back());
    return Poly(std::move(c));
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p, Poly* rest) {
    std::vector<std::pair<Rat, int>> out;
    if (p.is_zero()) {
        if (rest) *rest = Poly();
        return out;
    }
    Poly q = p;
    // factor out z^k
    int k0 = 0;
    while (q.coeff(0) == 0 && q.degree() > 0) {
        q = q.divrem(Poly::monomial(1)).first;
        ++k0;
    }
    if (k0 > 0) out.push_back({Rat(0), k0});
    std::vector<Int> zi = to_primitive_int(q);
    if (zi.size() >= 2) {
        auto divisors = [](Int n) {
            std::vector<Int> ds;
            if (n < 0) n = -n;
            for (Int d = 1; d * d <= n; ++d)
                if (n % d == 0) {
                    ds.push_back(d);
                    ds.push_back(n / d);
                }
            return ds;
        };
        std::vector<Rat> candidates;
        for (const Int& pnum : divisors(zi.front()))
            for (const Int& qden : divisors(zi.back()))
                for (int s : {1, -1}) candidates.push_back(Rat(s * pnum, qden));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Rat& r : candidates) {
            int m = q.root_multiplicity(r);
            if (m > 0) {
                out.push_back({r, m});
                Poly lin = Poly::linear_root(r);
                for (int t = 0; t < m; ++t) q = q.divrem(lin).first;
            }
        }
    }
    if (rest) *rest = q;
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

}  // namespace sg
