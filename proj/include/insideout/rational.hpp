#pragma once

// Exact arithmetic base: arbitrary-precision integers and rationals (GMP),
// vectors over them, and the small numeric helpers used everywhere else.
// No floating point appears anywhere in a result path.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace insideout {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

template <typename Vec>
Rat dot(const Vec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Int dot_int(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

// gcd of all entries (nonnegative; 0 for the zero vector).
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

// lcm of the denominators of all entries (1 for an integer vector).
inline Int denominator_lcm(const RatVec& v) {
    Int l = 1;
    for (const Rat& x : v) l = lcm(l, x.get_den());
    return l;
}

// Scale a rational vector to a primitive integer vector pointing the same way.
// The zero vector maps to itself.
inline IntVec to_primitive(const RatVec& v) {
    Int l = denominator_lcm(v);
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = Int(v[i].get_num() * (l / v[i].get_den()));
    Int g = content(w);
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Deterministic lexicographic order on vectors, used wherever output order matters.
template <typename Vec>
bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
}

} // namespace insideout
