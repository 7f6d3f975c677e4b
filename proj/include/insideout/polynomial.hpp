#pragma once

// Univariate polynomials with rational coefficients, plus exact Lagrange
// interpolation.  Coefficient index equals degree; no trailing zeros.

#include "insideout/rational.hpp"

#include <cassert>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace insideout {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const Rat& v) { return Polynomial(RatVec{v}); }

    const RatVec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    Rat evaluate(const Rat& t) const {
        Rat v = 0;
        for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
        return v;
    }
    Rat evaluate(const Int& t) const { return evaluate(Rat(t)); }

    // p(-t): flips the sign of odd coefficients.
    Polynomial reflected() const {
        RatVec r = c_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator+(const Polynomial& o) const {
        RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (o * Rat(-1)); }
    Polynomial operator*(const Rat& s) const {
        RatVec r = c_;
        for (Rat& x : r) x *= s;
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        RatVec r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Unique polynomial of degree < points.size() through the given nodes.
    static Polynomial interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
        Polynomial acc;
        for (std::size_t i = 0; i < points.size(); ++i) {
            Polynomial basis = constant(1);
            Rat denom = 1;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (i == j) continue;
                basis = basis * Polynomial(RatVec{-points[j].first, Rat(1)});
                denom *= points[i].first - points[j].first;
            }
            acc = acc + basis * (points[i].second / denom);
        }
        return acc;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rat a = c_[i];
            if (!s.empty()) {
                s += (a > 0) ? " + " : " - ";
                if (a < 0) a = -a;
            } else if (a < 0) {
                s += "-";
                a = -a;
            }
            bool unit = (a == 1) && i > 0;
            if (!unit) s += insideout::to_string(a);
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    RatVec c_;
};

} // namespace insideout
