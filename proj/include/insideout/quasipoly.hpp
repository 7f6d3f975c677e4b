#pragma once

// Quasipolynomials: one polynomial constituent per residue class modulo a
// period.  q(t) = constituent[t mod period](t), with a true nonnegative
// remainder so negative arguments (reciprocity) pick the right class.

#include "insideout/polynomial.hpp"
#include "insideout/rational.hpp"

#include <cassert>
#include <cstddef>
#include <numeric>
#include <vector>

namespace insideout {

class Quasipolynomial {
public:
    Quasipolynomial() : cons_(1) {}
    Quasipolynomial(long period, std::vector<Polynomial> constituents)
        : cons_(std::move(constituents)) {
        assert(period >= 1 && cons_.size() == static_cast<std::size_t>(period));
    }

    static Quasipolynomial zero() { return Quasipolynomial(); }
    static Quasipolynomial from_polynomial(Polynomial p) {
        return Quasipolynomial(1, {std::move(p)});
    }

    long period() const { return static_cast<long>(cons_.size()); }
    const std::vector<Polynomial>& constituents() const { return cons_; }
    const Polynomial& constituent(long residue) const {
        long p = period();
        return cons_[static_cast<std::size_t>(((residue % p) + p) % p)];
    }

    int degree() const {
        int d = -1;
        for (const Polynomial& c : cons_) d = std::max(d, c.degree());
        return d;
    }

    bool is_zero() const {
        for (const Polynomial& c : cons_)
            if (!c.is_zero()) return false;
        return true;
    }

    Rat evaluate(const Int& t) const {
        Int r = t % period();
        if (r < 0) r += period();
        return cons_[r.get_ui()].evaluate(t);
    }
    Rat evaluate(long t) const { return evaluate(Int(t)); }

    // Same function expressed with a period that is a multiple of the current one.
    Quasipolynomial with_period(long p) const {
        assert(p % period() == 0);
        std::vector<Polynomial> cs(static_cast<std::size_t>(p));
        for (long r = 0; r < p; ++r) cs[r] = cons_[r % period()];
        return Quasipolynomial(p, std::move(cs));
    }

    Quasipolynomial operator+(const Quasipolynomial& o) const {
        long p = std::lcm(period(), o.period());
        Quasipolynomial a = with_period(p), b = o.with_period(p);
        std::vector<Polynomial> cs(static_cast<std::size_t>(p));
        for (long r = 0; r < p; ++r) cs[r] = a.cons_[r] + b.cons_[r];
        return Quasipolynomial(p, std::move(cs));
    }

    Quasipolynomial operator*(const Rat& s) const {
        std::vector<Polynomial> cs = cons_;
        for (Polynomial& c : cs) c = c * s;
        return Quasipolynomial(period(), std::move(cs));
    }

    // Zero out every residue class not divisible by m (lattice-compatibility mask).
    Quasipolynomial masked_to_multiples_of(long m) const {
        if (m == 1) return *this;
        long p = std::lcm(period(), m);
        Quasipolynomial a = with_period(p);
        for (long r = 0; r < p; ++r)
            if (r % m != 0) a.cons_[r] = Polynomial();
        return a;
    }

    // Smallest period representing the same function (merge equal constituents).
    Quasipolynomial minimal_period() const {
        long p = period();
        for (long q = 1; q <= p / 2; ++q) {
            if (p % q != 0) continue;
            bool ok = true;
            for (long r = 0; ok && r < p; ++r) ok = (cons_[r] == cons_[r % q]);
            if (ok)
                return Quasipolynomial(
                    q, std::vector<Polynomial>(cons_.begin(), cons_.begin() + q));
        }
        return *this;
    }

    bool operator==(const Quasipolynomial& o) const {
        Quasipolynomial a = minimal_period(), b = o.minimal_period();
        return a.period() == b.period() && a.cons_ == b.cons_;
    }

private:
    std::vector<Polynomial> cons_;
};

// Value of the open-polytope counting function obtained from the closed
// Ehrhart quasipolynomial by Ehrhart-Macdonald reciprocity.
inline Rat reciprocity_value(const Quasipolynomial& closed, int dim, const Int& t) {
    Rat v = closed.evaluate(Int(-t));
    return (dim % 2 == 0) ? v : -v;
}

// The open counting function itself as a quasipolynomial.
inline Quasipolynomial reciprocity_quasipolynomial(const Quasipolynomial& closed, int dim) {
    long p = closed.period();
    std::vector<Polynomial> cs(static_cast<std::size_t>(p));
    for (long r = 0; r < p; ++r) {
        Polynomial refl = closed.constituent(-r).reflected();
        cs[r] = (dim % 2 == 0) ? refl : refl * Rat(-1);
    }
    return Quasipolynomial(p, std::move(cs));
}

} // namespace insideout
