#include "sg/ratmat.hpp"

namespace sg {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFun(Rat(1));
    return m;
}

RatMat RatMat::from_qmatrix(const QMatrix& q) {
    RatMat m(q.rows(), q.cols());
    for (const auto& [rc, v] : q.entries()) m.at(rc.first, rc.second) = RatFun(v);
    return m;
}

RatMat RatMat::scaled(const QMatrix& q, const RatFun& f) {
    RatMat m(q.rows(), q.cols());
    if (f.is_zero()) return m;
    for (const auto& [rc, v] : q.entries()) m.at(rc.first, rc.second) = RatFun(v) * f;
    return m;
}

RatMat RatMat::scalar(int n, const RatFun& f) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f;
    return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
    RatMat m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i].is_zero())
            m.e_[i] = o.e_[i];
        else if (o.e_[i].is_zero())
            m.e_[i] = e_[i];
        else
            m.e_[i] = e_[i] + o.e_[i];
    }
    return m;
}

RatMat RatMat::operator-(const RatMat& o) const {
    RatMat m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i].is_zero())
            m.e_[i] = e_[i];
        else
            m.e_[i] = e_[i] - o.e_[i];
    }
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat::mul: dimension mismatch");
    RatMat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RatFun& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const RatFun& b = o.at(k, j);
                if (b.is_zero()) continue;
                RatFun& t = m.at(i, j);
                t = t.is_zero() ? a * b : t + a * b;
            }
        }
    return m;
}

RatMat RatMat::operator*(const RatFun& f) const {
    RatMat m(rows_, cols_);
    if (f.is_zero()) return m;
    for (size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero()) m.e_[i] = e_[i] * f;
    return m;
}

RatMat RatMat::operator-() const {
    RatMat m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero()) m.e_[i] = -e_[i];
    return m;
}

bool RatMat::operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool RatMat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool RatMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const RatFun& x = at(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

RatMat RatMat::derivative() const {
    RatMat m(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].is_zero()) m.e_[i] = e_[i].derivative();
    return m;
}

RatMat RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat::inverse: not square");
    const int n = rows_;
    RatMat a = *this, inv = identity(n);
    for (int pc = 0; pc < n; ++pc) {
        int sel = -1;
        for (int r = pc; r < n; ++r)
            if (!a.at(r, pc).is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) throw NonInvertibleSymbol("RatMat::inverse: singular matrix");
        if (sel != pc)
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(pc, c), a.at(sel, c));
                std::swap(inv.at(pc, c), inv.at(sel, c));
            }
        RatFun piv = a.at(pc, pc);
        for (int c = 0; c < n; ++c) {
            if (!a.at(pc, c).is_zero()) a.at(pc, c) = a.at(pc, c) / piv;
            if (!inv.at(pc, c).is_zero()) inv.at(pc, c) = inv.at(pc, c) / piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == pc) continue;
            RatFun f = a.at(r, pc);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                if (!a.at(pc, c).is_zero()) a.at(r, c) = a.at(r, c) - f * a.at(pc, c);
                if (!inv.at(pc, c).is_zero()) inv.at(r, c) = inv.at(r, c) - f * inv.at(pc, c);
            }
        }
    }
    return inv;
}

std::vector<RatFun> RatMat::apply(const QVec& v) const {
    std::vector<RatFun> rf(v.size());
    for (size_t i = 0; i < v.size(); ++i) rf[i] = RatFun(v[i]);
    return apply(rf);
}

std::vector<RatFun> RatMat::apply(const std::vector<RatFun>& v) const {
    if ((int)v.size() != cols_) throw std::invalid_argument("RatMat::apply: size mismatch");
    std::vector<RatFun> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const RatFun& a = at(r, c);
            if (a.is_zero() || v[c].is_zero()) continue;
            out[r] = out[r].is_zero() ? a * v[c] : out[r] + a * v[c];
        }
    return out;
}

QMatrix RatMat::eval(const Rat& x) const {
    QMatrix q(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (at(r, c).is_zero()) continue;
            auto v = at(r, c).eval(x);
            if (!v) throw std::domain_error("RatMat::eval: hit a pole");
            q.set(r, c, *v);
        }
    return q;
}

}  // namespace sg
