#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sg/rat.hpp"

namespace sg {

struct BadRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotHook : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Index label: integers 1..m and half-integers 1/2..n-1/2, stored doubled
// so that everything stays integral.  Even labels are the integral ones.
struct Idx {
    int twice = 0;
    static Idx integral(int i) { return Idx{2 * i}; }
    static Idx half(int i) { return Idx{2 * i - 1}; }  // i - 1/2
    bool even() const { return twice % 2 == 0; }
    bool odd() const { return !even(); }
    std::string str() const {
        if (even()) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }
    auto operator<=>(const Idx&) const = default;
};

// The index set of gl(m|n) in its standard total order 1 < ... < m < 1/2 <
// ... < n-1/2, together with the bijection pi from matrix positions 1..m+n.
class IndexSet {
  public:
    IndexSet(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return m_ + n_; }
    const std::vector<Idx>& labels() const { return labels_; }  // in standard order
    Idx pi(int position) const;         // 1-based position -> label
    int position(Idx label) const;      // label -> 1-based position
    bool parity_odd(Idx label) const { return label.odd(); }
    // row sign (-1)^{2 pi(i)}: +1 on even rows, -1 on odd rows
    int row_sign(int position) const { return pi(position).even() ? 1 : -1; }

  private:
    int m_, n_;
    std::vector<Idx> labels_;
};

// 0^m 1^n sequence; s_hat(i) = (-1)^{s_i}.
struct SignSeq {
    std::vector<int> bits;
    static SignSeq standard(int m, int n);
    int size() const { return (int)bits.size(); }
    int s(int i) const { return bits.at(i - 1); }  // 1-based
    int s_hat(int i) const { return s(i) == 0 ? 1 : -1; }
    int zeros() const;
    bool operator==(const SignSeq& o) const { return bits == o.bits; }
};

// Permutation of {1..n} in one-line notation (1-based images).
struct Perm {
    std::vector<int> images;
    static Perm identity(int n);
    static Perm transposition(int n, int a, int b);
    int size() const { return (int)images.size(); }
    int operator()(int i) const { return images.at(i - 1); }
    Perm inverse() const;
    bool is_identity() const;
};

// s^sigma = (s_{sigma^{-1}(1)}, ..., s_{sigma^{-1}(k)})
SignSeq permute_signs(const SignSeq& s, const Perm& sigma);

// The permutation moving the odd block to positions p+1..p+n.
Perm sigma_p(int m, int n, int p);

// i <_sigma j  iff  sigma(pi^{-1}(i)) < sigma(pi^{-1}(j))
bool less_sigma(const IndexSet& ix, const Perm& sigma, Idx a, Idx b);

// Weakly decreasing partition; context-free storage, hook tests take (m,n).
struct HookPartition {
    std::vector<int> parts;  // positive, weakly decreasing
    HookPartition() = default;
    explicit HookPartition(std::vector<int> p);
    int length() const { return (int)parts.size(); }
    int size() const;  // |lambda|
    int part(int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; }
    HookPartition conjugate() const;
    bool operator==(const HookPartition& o) const { return parts == o.parts; }
    bool operator<(const HookPartition& o) const { return parts < o.parts; }
    std::string str() const;
};

bool hook_check(const HookPartition& lambda, int m, int n);

// Weight = finitely supported integer map on index labels (zero values pruned).
class Weight {
  public:
    Weight() = default;
    int operator()(Idx i) const {
        auto it = v_.find(i);
        return it == v_.end() ? 0 : it->second;
    }
    void set(Idx i, int value) {
        if (value == 0)
            v_.erase(i);
        else
            v_[i] = value;
    }
    void add(Idx i, int value) { set(i, (*this)(i) + value); }
    Weight operator+(const Weight& o) const;
    bool operator==(const Weight& o) const { return v_ == o.v_; }
    bool operator<(const Weight& o) const;  // for use as map key
    const std::map<Idx, int>& values() const { return v_; }
    bool nonnegative() const;
    std::string str() const;

  private:
    std::map<Idx, int> v_;
};

// sum_{i<=m} lambda_i eps_i + sum_{i<=n} <lambda'_i - m> eps_{i-1/2}
Weight partition_weight(const HookPartition& lambda, int m, int n);

// highest weight with respect to the sigma_p Borel:
// sum_{i<=p} lambda_i eps_i + sum_{i<=n} <lambda'_i - p> eps_{i-1/2}
//   + sum_{p<i<=m} <lambda_i - n> eps_i
Weight partition_weight_sigma(const HookPartition& lambda, int m, int n, int p);

// inverse of partition_weight on weights of that shape; throws NotHook if
// mu is not of the form lambda_bar for a hook partition
HookPartition weight_to_partition(const Weight& mu, int m, int n);

// mu(E_ii) = 0 for all integral i > p and all half-integral i > k - 1/2
bool weight_in_truncation(const Weight& mu, int m, int n, int p, int k);

// (mu+gamma)(E_ii) = 0  iff  mu(E_ii) = 0 and gamma(E_ii) = 0; holds for
// nonnegative weights, which is what this op asserts.
bool additivity_check(const Weight& mu, const Weight& gamma);

// Root data of gl_m: simple roots alpha_i = eps_i - eps_{i+1} and the
// pairing with coroots alpha_i_check = E_ii - E_{i+1,i+1}.
struct RootData {
    int m;
    explicit RootData(int m_) : m(m_) {}
    Weight alpha(int i) const;
    // <mu, alpha_i_check>
    int coroot_pairing(const Weight& mu, int i) const;
};

}  // namespace sg
