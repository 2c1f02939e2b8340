#include "sg/superdata.hpp"

#include <algorithm>
#include <sstream>

namespace sg {

IndexSet::IndexSet(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 0) throw BadRange("IndexSet: need m >= 1, n >= 0");
    for (int i = 1; i <= m; ++i) labels_.push_back(Idx::integral(i));
    for (int i = 1; i <= n; ++i) labels_.push_back(Idx::half(i));
}

Idx IndexSet::pi(int position) const {
    if (position < 1 || position > size()) throw BadRange("IndexSet::pi: bad position");
    return labels_[position - 1];
}

int IndexSet::position(Idx label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw BadRange("IndexSet::position: unknown label");
    return (int)(it - labels_.begin()) + 1;
}

SignSeq SignSeq::standard(int m, int n) {
    SignSeq s;
    s.bits.assign(m, 0);
    s.bits.insert(s.bits.end(), n, 1);
    return s;
}

int SignSeq::zeros() const {
    return (int)std::count(bits.begin(), bits.end(), 0);
}

Perm Perm::identity(int n) {
    Perm p;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = i + 1;
    return p;
}

Perm Perm::transposition(int n, int a, int b) {
    Perm p = identity(n);
    std::swap(p.images[a - 1], p.images[b - 1]);
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.images.resize(images.size());
    for (int i = 0; i < (int)images.size(); ++i) p.images[images[i] - 1] = i + 1;
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < (int)images.size(); ++i)
        if (images[i] != i + 1) return false;
    return true;
}

SignSeq permute_signs(const SignSeq& s, const Perm& sigma) {
    Perm inv = sigma.inverse();
    SignSeq out;
    out.bits.resize(s.bits.size());
    for (int i = 1; i <= (int)s.bits.size(); ++i) out.bits[i - 1] = s.s(inv(i));
    return out;
}

Perm sigma_p(int m, int n, int p) {
    if (p < 1 || p > m) throw BadRange("sigma_p: need 1 <= p <= m");
    Perm s;
    s.images.resize(m + n);
    for (int i = 1; i <= m + n; ++i) {
        int img;
        if (i <= p)
            img = i;
        else if (i <= m)
            img = i + n;
        else
            img = i - (m - p);
        s.images[i - 1] = img;
    }
    return s;
}

bool less_sigma(const IndexSet& ix, const Perm& sigma, Idx a, Idx b) {
    return sigma(ix.position(a)) < sigma(ix.position(b));
}

HookPartition::HookPartition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw std::invalid_argument("HookPartition: not weakly decreasing positive");
    }
}

int HookPartition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

HookPartition HookPartition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= (parts.empty() ? 0 : parts[0]); ++j) {
        int h = 0;
        for (int p : parts)
            if (p >= j) ++h;
        c.push_back(h);
    }
    return HookPartition(std::move(c));
}

std::string HookPartition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

bool hook_check(const HookPartition& lambda, int m, int n) {
    return lambda.part(m + 1) <= n;
}

Weight Weight::operator+(const Weight& o) const {
    Weight w = *this;
    for (const auto& [i, v] : o.v_) w.add(i, v);
    return w;
}

bool Weight::operator<(const Weight& o) const {
    return std::lexicographical_compare(
        v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first < b.first : a.second < b.second;
        });
}

bool Weight::nonnegative() const {
    for (const auto& [i, v] : v_)
        if (v < 0) return false;
    return true;
}

std::string Weight::str() const {
    if (v_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : v_) {
        if (!first) os << "+";
        os << v << "e(" << i.str() << ")";
        first = false;
    }
    return os.str();
}

namespace {
int pos_part(int r) { return r > 0 ? r : 0; }
}  // namespace

Weight partition_weight(const HookPartition& lambda, int m, int n) {
    if (!hook_check(lambda, m, n)) throw NotHook("partition is not (m|n)-hook: " + lambda.str());
    Weight w;
    for (int i = 1; i <= m; ++i) w.set(Idx::integral(i), lambda.part(i));
    HookPartition conj = lambda.conjugate();
    for (int i = 1; i <= n; ++i) w.set(Idx::half(i), pos_part(conj.part(i) - m));
    return w;
}

Weight partition_weight_sigma(const HookPartition& lambda, int m, int n, int p) {
    if (!hook_check(lambda, m, n)) throw NotHook("partition is not (m|n)-hook: " + lambda.str());
    if (p < 1 || p > m) throw BadRange("partition_weight_sigma: need 1 <= p <= m");
    Weight w;
    for (int i = 1; i <= p; ++i) w.set(Idx::integral(i), lambda.part(i));
    HookPartition conj = lambda.conjugate();
    for (int i = 1; i <= n; ++i) w.set(Idx::half(i), pos_part(conj.part(i) - p));
    for (int i = p + 1; i <= m; ++i) w.set(Idx::integral(i), pos_part(lambda.part(i) - n));
    return w;
}

HookPartition weight_to_partition(const Weight& mu, int m, int n) {
    std::vector<int> rows;
    for (int i = 1; i <= m; ++i) rows.push_back(mu(Idx::integral(i)));
    std::vector<int> nu;
    for (int i = 1; i <= n; ++i) nu.push_back(mu(Idx::half(i)));
    // rows below m are the conjugate of the odd values
    int k = 1;
    while (true) {
        int h = 0;
        for (int v : nu)
            if (v >= k) ++h;
        if (h == 0) break;
        rows.push_back(h);
        ++k;
    }
    HookPartition lambda;
    try {
        lambda = HookPartition(rows);
    } catch (const std::invalid_argument&) {
        throw NotHook("weight is not of highest-weight shape: " + mu.str());
    }
    if (!(partition_weight(lambda, m, n) == mu))
        throw NotHook("weight does not match its reconstructed partition: " + mu.str());
    return lambda;
}

bool weight_in_truncation(const Weight& mu, int m, int n, int p, int k) {
    for (int i = p + 1; i <= m; ++i)
        if (mu(Idx::integral(i)) != 0) return false;
    for (int i = k + 1; i <= n; ++i)
        if (mu(Idx::half(i)) != 0) return false;
    return true;
}

bool additivity_check(const Weight& mu, const Weight& gamma) {
    if (!mu.nonnegative() || !gamma.nonnegative())
        throw std::invalid_argument("additivity_check: weights must be nonnegative");
    Weight sum = mu + gamma;
    std::vector<Idx> support;
    for (const auto& [i, v] : mu.values()) support.push_back(i);
    for (const auto& [i, v] : gamma.values()) support.push_back(i);
    for (Idx i : support) {
        bool lhs = sum(i) == 0;
        bool rhs = mu(i) == 0 && gamma(i) == 0;
        if (lhs != rhs) return false;
    }
    return true;
}

Weight RootData::alpha(int i) const {
    if (i < 1 || i >= m) throw BadRange("RootData::alpha: index out of range");
    Weight w;
    w.set(Idx::integral(i), 1);
    w.set(Idx::integral(i + 1), -1);
    return w;
}

int RootData::coroot_pairing(const Weight& mu, int i) const {
    if (i < 1 || i >= m) throw BadRange("RootData::coroot_pairing: index out of range");
    return mu(Idx::integral(i)) - mu(Idx::integral(i + 1));
}

}  // namespace sg
