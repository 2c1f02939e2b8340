#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace sg {

// Exact scalars. mpq_rational keeps gcd(num,den)=1 and den>0 canonically.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

std::string rat_to_string(const Rat& q);   // "p/q", or "p" when q = 1
Rat rat_from_string(const std::string& s);

// Generalized binomial: top may be any integer, bottom >= 0.
Rat binom(long j, long i);

Int factorial(long n);

// Deterministic RNG for tests and randomized witnesses.  mt19937_64 output
// is specified by the standard, so sequences are reproducible everywhere;
// we avoid std::uniform_int_distribution on purpose (not portable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [lo, hi]
    long uniform(long lo, long hi) {
        if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat(long lo, long hi, long max_den = 1) {
        long d = max_den > 1 ? uniform(1, max_den) : 1;
        return Rat(uniform(lo * d, hi * d), d);
    }

    // k pairwise distinct integers in [lo, hi], as exact rationals
    std::vector<Rat> distinct_ints(int k, long lo, long hi);

  private:
    std::mt19937_64 eng_;
};

}  // namespace sg
