#include "sg/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sg {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

QMatrix QMatrix::from_dense(const std::vector<QVec>& rows) {
    QMatrix m((int)rows.size(), rows.empty() ? 0 : (int)rows[0].size());
    for (int r = 0; r < m.rows_; ++r)
        for (int c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVec>& cols, int rows) {
    QMatrix m(rows, (int)cols.size());
    for (int c = 0; c < (int)cols.size(); ++c)
        for (int r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
    return m;
}

Rat QMatrix::at(int r, int c) const {
    auto it = e_.find({r, c});
    return it == e_.end() ? Rat(0) : it->second;
}

void QMatrix::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("QMatrix::set: index out of bounds");
    if (v == 0)
        e_.erase({r, c});
    else
        e_[{r, c}] = v;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    QMatrix m = *this;
    for (const auto& [rc, v] : o.e_) m.set(rc.first, rc.second, m.at(rc.first, rc.second) + v);
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    QMatrix m = *this;
    for (const auto& [rc, v] : o.e_) m.set(rc.first, rc.second, m.at(rc.first, rc.second) - v);
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix::mul: dimension mismatch");
    QMatrix m(rows_, o.cols_);
    // sparse row x sparse row accumulation
    std::map<int, std::vector<std::pair<int, Rat>>> orows;
    for (const auto& [rc, v] : o.e_) orows[rc.first].push_back({rc.second, v});
    std::map<std::pair<int, int>, Rat> acc;
    for (const auto& [rc, v] : e_) {
        auto it = orows.find(rc.second);
        if (it == orows.end()) continue;
        for (const auto& [c2, v2] : it->second) acc[{rc.first, c2}] += v * v2;
    }
    for (const auto& [rc, v] : acc)
        if (v != 0) m.e_[rc] = v;
    return m;
}

QMatrix QMatrix::operator*(const Rat& s) const {
    QMatrix m(rows_, cols_);
    if (s == 0) return m;
    for (const auto& [rc, v] : e_) m.e_[rc] = v * s;
    return m;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (const auto& [rc, v] : e_) m.e_[{rc.second, rc.first}] = v;
    return m;
}

QVec QMatrix::apply(const QVec& v) const {
    if ((int)v.size() != cols_) throw std::invalid_argument("QMatrix::apply: size mismatch");
    QVec out(rows_, Rat(0));
    for (const auto& [rc, x] : e_) out[rc.first] += x * v[rc.second];
    return out;
}

QVec QMatrix::column(int c) const {
    QVec out(rows_, Rat(0));
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

QVec QMatrix::flatten() const {
    QVec out((size_t)rows_ * cols_, Rat(0));
    for (const auto& [rc, v] : e_) out[(size_t)rc.first * cols_ + rc.second] = v;
    return out;
}

std::vector<QVec> kernel_basis(const QMatrix& a) {
    const int m = a.rows(), n = a.cols();
    // row-scale to integers, then Bareiss fraction-free elimination
    std::vector<std::vector<Int>> w(m, std::vector<Int>(n, Int(0)));
    for (int r = 0; r < m; ++r) {
        Int l(1);
        for (int c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, rat_den(a.at(r, c)));
        for (int c = 0; c < n; ++c) {
            Rat s = a.at(r, c) * Rat(l);
            w[r][c] = rat_num(s);
        }
    }
    std::vector<int> pivot_col;
    Int denom(1);
    int pr = 0;
    for (int pc = 0; pc < n && pr < m; ++pc) {
        int sel = -1;
        for (int r = pr; r < m; ++r)
            if (w[r][pc] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(w[pr], w[sel]);
        for (int r = pr + 1; r < m; ++r) {
            for (int c = pc + 1; c < n; ++c) {
                w[r][c] = (w[pr][pc] * w[r][c] - w[r][pc] * w[pr][c]) / denom;
            }
            w[r][pc] = 0;
        }
        denom = w[pr][pc];
        pivot_col.push_back(pc);
        ++pr;
    }
    // back-substitute one basis vector per free column
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        QVec v(n, Rat(0));
        v[fc] = 1;
        for (int r = (int)pivot_col.size() - 1; r >= 0; --r) {
            int pc = pivot_col[r];
            Rat s(0);
            for (int c = pc + 1; c < n; ++c)
                if (v[c] != 0) s += Rat(w[r][c]) * v[c];
            v[pc] = -s / Rat(w[r][pc]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const QMatrix& a) { return a.cols() - (int)kernel_basis(a).size(); }

void EchelonBasis::reduce(QVec& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& x = v[pivots_[i]];
        if (x == 0) continue;
        Rat f = x;  // rows are pivot-normalized
        for (int c = 0; c < dim_; ++c)
            if (rows_[i][c] != 0) v[c] -= f * rows_[i][c];
    }
}

bool EchelonBasis::insert(QVec v) {
    if ((int)v.size() != dim_) throw std::invalid_argument("EchelonBasis: wrong length");
    reduce(v);
    int p = -1;
    for (int c = 0; c < dim_; ++c)
        if (v[c] != 0) {
            p = c;
            break;
        }
    if (p < 0) return false;
    Rat inv = Rat(1) / v[p];
    for (auto& x : v) x *= inv;
    // keep pivots ordered
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

bool EchelonBasis::contains(QVec v) const {
    reduce(v);
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

QVec solve_in_span(const QMatrix& basis_cols, const QVec& target) {
    const int n = basis_cols.rows(), k = basis_cols.cols();
    // Gaussian elimination on [B | t]
    std::vector<QVec> aug(n, QVec(k + 1, Rat(0)));
    for (const auto& [rc, v] : basis_cols.entries()) aug[rc.first][rc.second] = v;
    for (int r = 0; r < n; ++r) aug[r][k] = target[r];
    int pr = 0;
    std::vector<int> pivot_of_col(k, -1);
    for (int pc = 0; pc < k && pr < n; ++pc) {
        int sel = -1;
        for (int r = pr; r < n; ++r)
            if (aug[r][pc] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(aug[pr], aug[sel]);
        Rat inv = Rat(1) / aug[pr][pc];
        for (int c = pc; c <= k; ++c) aug[pr][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == pr || aug[r][pc] == 0) continue;
            Rat f = aug[r][pc];
            for (int c = pc; c <= k; ++c) aug[r][c] -= f * aug[pr][c];
        }
        pivot_of_col[pc] = pr;
        ++pr;
    }
    for (int r = pr; r < n; ++r)
        if (aug[r][k] != 0) throw std::domain_error("solve_in_span: target not in span");
    QVec x(k, Rat(0));
    for (int c = 0; c < k; ++c)
        if (pivot_of_col[c] >= 0) x[c] = aug[pivot_of_col[c]][k];
    // rows without pivots: check consistency above already handled
    return x;
}

std::vector<QMatrix> algebra_closure(const std::vector<QMatrix>& gens, int dim) {
    for (const auto& g : gens)
        if (g.rows() != dim || g.cols() != dim)
            throw std::invalid_argument("algebra_closure: generators must be dim x dim");
    EchelonBasis span(dim * dim);
    std::vector<QMatrix> basis;
    auto push = [&](const QMatrix& m) {
        if (span.insert(m.flatten())) {
            basis.push_back(m);
            return true;
        }
        return false;
    };
    push(QMatrix::identity(dim));
    for (const auto& g : gens) push(g);
    size_t frontier = 0;
    while (frontier < basis.size()) {
        size_t end = basis.size();
        for (size_t i = frontier; i < end; ++i)
            for (const auto& g : gens) push(basis[i] * g);
        frontier = end;
    }
    return basis;
}

}  // namespace sg
