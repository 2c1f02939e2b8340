#include "sg/opring.hpp"

#include <sstream>

namespace sg {

std::vector<NormalOrderTerm> normal_order(int j, int k) {
    std::vector<NormalOrderTerm> out;
    for (int i = 0;; ++i) {
        if (k >= 0 && i > k) break;
        if (j >= 0 && i > j) break;
        Rat c = binom(j, i) * binom(k, i) * Rat(factorial(i));
        if (c != 0) out.push_back({i, c});
        if (k < 0 && j < 0) throw std::invalid_argument("normal_order: nonterminating sum");
    }
    return out;
}

OperatorElement OperatorElement::zero(int rows, int cols) { return OperatorElement(rows, cols); }

OperatorElement OperatorElement::one(int dim) {
    OperatorElement e(dim, dim);
    e.set_coeff(0, RatMat::identity(dim));
    return e;
}

OperatorElement OperatorElement::dpow(int dim, int power, const RatFun& coeff) {
    OperatorElement e(dim, dim);
    e.set_coeff(power, RatMat::scalar(dim, coeff));
    return e;
}

OperatorElement OperatorElement::from_coeff(int power, RatMat m) {
    OperatorElement e(m.rows(), m.cols());
    e.set_coeff(power, std::move(m));
    return e;
}

OperatorElement OperatorElement::scalar(const RatFun& f, int power) {
    return dpow(1, power, f);
}

RatMat OperatorElement::coeff(int power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? RatMat(rows_, cols_) : it->second;
}

void OperatorElement::set_coeff(int power, RatMat m) {
    if (m.rows() != rows_ || m.cols() != cols_)
        throw DimensionMismatch("OperatorElement::set_coeff: wrong shape");
    if (m.is_zero())
        coeffs_.erase(power);
    else
        coeffs_[power] = std::move(m);
}

void OperatorElement::drop_below(int floor) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->first < floor ? coeffs_.erase(it) : ++it;
}

OperatorElement OperatorElement::operator+(const OperatorElement& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("OperatorElement::add: shape mismatch");
    OperatorElement r(rows_, cols_);
    r.exact_ = exact_ && o.exact_;
    if (!r.exact_) {
        if (exact_)
            r.floor_ = o.floor_;
        else if (o.exact_)
            r.floor_ = floor_;
        else
            r.floor_ = std::max(floor_, o.floor_);
    }
    for (const auto& [p, m] : coeffs_)
        if (r.exact_ || p >= r.floor_) r.set_coeff(p, m);
    for (const auto& [p, m] : o.coeffs_) {
        if (!r.exact_ && p < r.floor_) continue;
        r.set_coeff(p, r.has(p) ? r.coeff(p) + m : m);
    }
    return r;
}

OperatorElement OperatorElement::operator-(const OperatorElement& o) const {
    return *this + (-o);
}

OperatorElement OperatorElement::operator-() const {
    OperatorElement r = *this;
    for (auto& [p, m] : r.coeffs_) m = -m;
    return r;
}

OperatorElement OperatorElement::scale(const Rat& s) const {
    OperatorElement r(rows_, cols_);
    r.exact_ = exact_;
    r.floor_ = floor_;
    if (s == 0) return r;
    for (const auto& [p, m] : coeffs_) r.coeffs_[p] = m * RatFun(s);
    return r;
}

std::string OperatorElement::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) os << " + ";
        os << "[";
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) {
                if (it->second.at(r, c).is_zero()) continue;
                os << "(" << r << "," << c << ")=" << it->second.at(r, c).str(var) << " ";
            }
        os << "] d^" << it->first;
        first = false;
    }
    if (first) os << "0";
    if (!exact_) os << "  (floor " << floor_ << ")";
    return os.str();
}

OperatorElement op_mul(const OperatorElement& a, const OperatorElement& b, int floor) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("op_mul: shape mismatch");
    OperatorElement r(a.rows_, b.cols_);
    if (a.is_zero() && a.exact_) return r;
    if (b.is_zero() && b.exact_) return r;

    // powers >= rf are unaffected by either factor's unknown tail
    long rf = std::numeric_limits<int>::min();
    if (!a.exact_) rf = std::max(rf, (long)a.floor_ + b.top());
    if (!b.exact_) rf = std::max(rf, (long)b.floor_ + a.top());
    int cut = (int)std::max((long)floor, rf);

    bool truncated = false;
    std::map<int, RatMat> acc;
    for (const auto& [j, am] : a.coeffs_) {
        for (const auto& [k, bm] : b.coeffs_) {
            std::vector<RatMat> derivs{bm};
            for (int i = 0;; ++i) {
                int p = j + k - i;
                if (j >= 0 && i > j) break;
                if (p < cut) {
                    // only a truncation if the remaining tail is nonzero
                    if (!(j >= 0 && i > j) && !derivs.back().is_zero()) truncated = true;
                    break;
                }
                while ((int)derivs.size() <= i) derivs.push_back(derivs.back().derivative());
                if (derivs[i].is_zero()) break;
                Rat c = binom(j, i);
                if (c != 0) {
                    RatMat term = am * derivs[i];
                    if (c != 1) term = term * RatFun(c);
                    auto it = acc.find(p);
                    if (it == acc.end())
                        acc.emplace(p, std::move(term));
                    else
                        it->second = it->second + term;
                }
            }
        }
    }
    r.exact_ = a.exact_ && b.exact_ && !truncated;
    r.floor_ = cut;
    for (auto& [p, m] : acc)
        if (!m.is_zero()) r.coeffs_.emplace(p, std::move(m));
    if (!r.exact_) r.drop_below(r.floor_);
    return r;
}

OperatorElement op_invert(const OperatorElement& a, int floor) {
    if (a.rows_ != a.cols_) throw NonInvertibleSymbol("op_invert: not square");
    if (a.is_zero()) throw NonInvertibleSymbol("op_invert: zero element");
    const int t = a.top();
    const RatMat& ct = a.coeffs_.at(t);
    RatMat ct_inv = ct.inverse();  // throws NonInvertibleSymbol

    // single constant-coefficient term inverts exactly
    if (a.coeffs_.size() == 1 && a.exact_) {
        RatMat d = ct.derivative();
        if (d.is_zero()) {
            OperatorElement y(a.rows_, a.cols_);
            y.set_coeff(-t, std::move(ct_inv));
            return y;
        }
    }

    int rel = a.exact_ ? floor : std::max(floor, a.floor_ - 2 * t);
    OperatorElement y(a.rows_, a.cols_);
    y.exact_ = false;
    y.floor_ = rel;

    std::map<int, std::vector<RatMat>> derivs;  // solved coefficients and their derivatives
    for (int s = -t; s >= rel; --s) {
        const int q = s + t;
        RatMat rhs = q == 0 ? RatMat::identity(a.rows_) : RatMat(a.rows_, a.cols_);
        for (const auto& [j, am] : a.coeffs_) {
            for (auto& [sp, dv] : derivs) {
                int i = j + sp - q;
                if (i < 0) continue;
                Rat c = binom(j, i);
                if (c == 0) continue;
                while ((int)dv.size() <= i) dv.push_back(dv.back().derivative());
                if (dv[i].is_zero()) continue;
                RatMat term = am * dv[i];
                if (c != 1) term = term * RatFun(c);
                rhs = rhs - term;
            }
        }
        RatMat ys = ct_inv * rhs;
        if (!ys.is_zero()) y.coeffs_[s] = ys;
        derivs.emplace(s, std::vector<RatMat>{std::move(ys)});
    }

    // accept the one-sided solution only after checking the other side
    OperatorElement check = op_mul(y, a, rel + t >= rel ? rel : rel + t);
    OperatorElement idm = OperatorElement::one(a.rows_);
    if (auto bad = op_mismatch(check, idm))
        throw NonInvertibleSymbol("op_invert: one-sided inverse failed two-sided check at d^" +
                                  std::to_string(*bad));
    return y;
}

OperatorElement op_apply(const OperatorElement& a, const QVec& v) {
    OperatorElement r(a.rows_, 1);
    r.mark_window(a.floor());
    if (a.exact()) {
        r = OperatorElement(a.rows_, 1);
    }
    for (const auto& [p, m] : a.coeffs()) {
        std::vector<RatFun> col = m.apply(v);
        RatMat cm((int)col.size(), 1);
        for (int i = 0; i < (int)col.size(); ++i) cm.at(i, 0) = col[i];
        r.set_coeff(p, std::move(cm));
    }
    if (!a.exact()) r.mark_window(a.floor());
    return r;
}

OperatorElement op_shift(const OperatorElement& a, int shift) {
    OperatorElement s = OperatorElement::dpow(a.cols(), shift);
    return op_mul(a, s, a.exact() ? std::min(a.low() + shift, shift) : a.floor() + shift);
}

std::optional<int> op_mismatch(const OperatorElement& a, const OperatorElement& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("op_mismatch: shape mismatch");
    long from = std::numeric_limits<long>::min();
    if (!a.exact()) from = a.floor();
    if (!b.exact()) from = std::max(from, (long)b.floor());
    int hi = std::max(a.top(), b.top());
    int lo = (int)std::max(from, (long)std::min(a.low(), b.low()));
    for (int p = hi; p >= lo; --p) {
        if (!(a.coeff(p) == b.coeff(p))) return p;
    }
    return std::nullopt;
}

USeries::USeries(int order, int dim) : dim_(dim) {
    terms_.assign(order + 1, OperatorElement::zero(dim, dim));
}

USeries USeries::one(int order, int dim) {
    USeries s(order, dim);
    s.terms_[0] = OperatorElement::one(dim);
    return s;
}

USeries USeries::one_plus_u(int order, const OperatorElement& x) {
    if (order < 1) throw std::invalid_argument("USeries::one_plus_u: order must be >= 1");
    USeries s(order, x.rows());
    s.terms_[0] = OperatorElement::one(x.rows());
    s.terms_[1] = x;
    return s;
}

USeries USeries::operator+(const USeries& o) const {
    if (order() != o.order() || dim_ != o.dim_)
        throw DimensionMismatch("USeries::add: incompatible series");
    USeries s(order(), dim_);
    for (int k = 0; k <= order(); ++k) s.terms_[k] = terms_[k] + o.terms_[k];
    return s;
}

USeries USeries::operator-(const USeries& o) const {
    if (order() != o.order() || dim_ != o.dim_)
        throw DimensionMismatch("USeries::sub: incompatible series");
    USeries s(order(), dim_);
    for (int k = 0; k <= order(); ++k) s.terms_[k] = terms_[k] - o.terms_[k];
    return s;
}

USeries USeries::operator-() const {
    USeries s(order(), dim_);
    for (int k = 0; k <= order(); ++k) s.terms_[k] = -terms_[k];
    return s;
}

USeries USeries::operator*(const USeries& o) const {
    if (order() != o.order() || dim_ != o.dim_)
        throw DimensionMismatch("USeries::mul: incompatible series");
    USeries s(order(), dim_);
    for (int i = 0; i <= order(); ++i) {
        if (terms_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.terms_[j].is_zero()) continue;
            OperatorElement p = op_mul(terms_[i], o.terms_[j], 0);
            if (!p.exact())
                throw std::logic_error("USeries::mul: differential product became inexact");
            s.terms_[i + j] = s.terms_[i + j] + p;
        }
    }
    return s;
}

bool USeries::operator==(const USeries& o) const {
    if (order() != o.order() || dim_ != o.dim_) return false;
    for (int k = 0; k <= order(); ++k)
        if (op_mismatch(terms_[k], o.terms_[k])) return false;
    return true;
}

bool USeries::shape_ok() const {
    for (int k = 0; k <= order(); ++k) {
        const auto& t = terms_[k];
        if (t.is_zero()) continue;
        if (t.low() < 0 || t.top() > k) return false;
    }
    return true;
}

USeries useries_invert(const USeries& a) {
    const OperatorElement& c = a.term(0);
    if (c.is_zero() || c.top() != 0 || c.low() != 0)
        throw NotUnitModU("useries_invert: constant term is not a plain matrix");
    RatMat c0_inv;
    try {
        c0_inv = c.coeff(0).inverse();
    } catch (const NonInvertibleSymbol&) {
        throw NotUnitModU("useries_invert: constant term not invertible");
    }
    OperatorElement y0 = OperatorElement::from_coeff(0, c0_inv);
    USeries y(a.order(), a.dim());
    y.term(0) = y0;
    for (int k = 1; k <= a.order(); ++k) {
        OperatorElement acc(a.dim(), a.dim());
        for (int j = 1; j <= k; ++j) {
            if (a.term(j).is_zero() || y.term(k - j).is_zero()) continue;
            acc = acc + op_mul(a.term(j), y.term(k - j), 0);
        }
        y.term(k) = -op_mul(y0, acc, 0);
    }
    // two-sided check mod u^{N+1}
    if (!(y * a == USeries::one(a.order(), a.dim())))
        throw NotUnitModU("useries_invert: two-sided check failed");
    return y;
}

namespace {

bool matrix_parity_ok(const RatMat& m, const std::vector<int>& par, int want) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero() && (par[r] + par[c]) % 2 != want) return false;
    return true;
}

}  // namespace

bool entries_parity_homogeneous(const OpMatrix<OperatorElement>& a,
                                const std::vector<int>& module_parity) {
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) {
            int want = (a.type.s(i) + a.type.s(j)) % 2;
            for (const auto& [p, m] : a.at(i, j).coeffs())
                if (!matrix_parity_ok(m, module_parity, want)) return false;
        }
    return true;
}

bool entries_parity_homogeneous(const OpMatrix<USeries>& a,
                                const std::vector<int>& module_parity) {
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= a.n; ++j) {
            int want = (a.type.s(i) + a.type.s(j)) % 2;
            for (int k = 0; k <= a.at(i, j).order(); ++k)
                for (const auto& [p, m] : a.at(i, j).term(k).coeffs())
                    if (!matrix_parity_ok(m, module_parity, want)) return false;
        }
    return true;
}

}  // namespace sg
