#include "sg/rat.hpp"

#include <algorithm>

namespace sg {

std::string rat_to_string(const Rat& q) {
    if (rat_den(q) == 1) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

Rat rat_from_string(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

Rat binom(long j, long i) {
    if (i < 0) return Rat(0);
    Rat r(1);
    for (long t = 0; t < i; ++t) r *= Rat(j - t, t + 1);
    return r;
}

Int factorial(long n) {
    Int r(1);
    for (long t = 2; t <= n; ++t) r *= t;
    return r;
}

std::vector<Rat> Rng::distinct_ints(int k, long lo, long hi) {
    if (hi - lo + 1 < k) throw std::invalid_argument("range too small for distinct sample");
    std::vector<long> got;
    while ((int)got.size() < k) {
        long v = uniform(lo, hi);
        if (std::find(got.begin(), got.end(), v) == got.end()) got.push_back(v);
    }
    std::vector<Rat> out;
    for (long v : got) out.emplace_back(v);
    return out;
}

}  // namespace sg
