#pragma once

// H-representation of rational polyhedra.  Constraints are stored with
// primitive integer data and a canonical sign so that syntactic equality
// decides geometric equality of constraints.
//
// Dilation semantics: the polyhedron P given by {a·x ≥ b} has dilates
// tP = {a·x ≥ t·b}; every right-hand side scales with t.

#include "insideout/errors.hpp"
#include "insideout/rational.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace insideout {

// a·x ≥ b, or a·x > b when strict.
struct Constraint {
    IntVec a;
    Int b;
    bool strict = false;

    auto key() const { return std::tuple(a, b, strict); }
    bool operator==(const Constraint& o) const { return key() == o.key(); }
    bool operator<(const Constraint& o) const { return key() < o.key(); }
};

// a·x = b.
struct Equation {
    IntVec a;
    Int b;

    auto key() const { return std::tuple(a, b); }
    bool operator==(const Equation& o) const { return key() == o.key(); }
    bool operator<(const Equation& o) const { return key() < o.key(); }
};

namespace detail {

// Divide (a, b) jointly by the gcd of all entries.  Returns false for a
// zero normal (caller resolves those separately).
inline bool make_primitive(IntVec& a, Int& b) {
    Int g = content(a);
    if (g == 0) return false;
    g = gcd(g, b);
    if (g > 1) {
        for (Int& x : a) x /= g;
        b /= g;
    }
    return true;
}

inline void fix_equation_sign(IntVec& a, Int& b) {
    for (const Int& x : a) {
        if (x == 0) continue;
        if (x < 0) {
            for (Int& y : a) y = -y;
            b = -b;
        }
        break;
    }
}

} // namespace detail

class HPolyhedron {
public:
    HPolyhedron() = default;
    explicit HPolyhedron(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    const std::vector<Equation>& equalities() const { return eqs_; }
    const std::vector<Constraint>& inequalities() const { return ineqs_; }

    // A constraint with zero normal and unsatisfiable sign was added; the
    // polyhedron is empty at every positive dilation.
    bool trivially_infeasible() const { return infeasible_; }

    void add_inequality(IntVec a, Int b, bool strict) {
        if (!detail::make_primitive(a, b)) {
            // 0 ≥ t·b (or >): sign analysis is dilation-independent for t > 0.
            bool ok = strict ? (b < 0) : (b <= 0);
            if (!ok) infeasible_ = true;
            return;
        }
        Constraint c{std::move(a), std::move(b), strict};
        for (auto it = ineqs_.begin(); it != ineqs_.end(); ++it) {
            if (it->a == c.a && it->b == c.b) {
                it->strict = it->strict || c.strict;  // strict subsumes weak
                return;
            }
        }
        ineqs_.push_back(std::move(c));
    }

    void add_equality(IntVec a, Int b) {
        if (!detail::make_primitive(a, b)) {
            if (b != 0) infeasible_ = true;
            return;
        }
        detail::fix_equation_sign(a, b);
        Equation e{std::move(a), std::move(b)};
        if (std::find(eqs_.begin(), eqs_.end(), e) == eqs_.end()) eqs_.push_back(std::move(e));
    }

    bool has_strict() const {
        for (const Constraint& c : ineqs_)
            if (c.strict) return true;
        return false;
    }

    HPolyhedron closure() const {
        HPolyhedron p = *this;
        for (Constraint& c : p.ineqs_) c.strict = false;
        return p;
    }

    HPolyhedron with_all_strict() const {
        HPolyhedron p = *this;
        for (Constraint& c : p.ineqs_) c.strict = true;
        return p;
    }

    // Membership of the dilate t·P; t = 1 gives plain membership.
    bool contains(const RatVec& x, const Rat& t = Rat(1)) const {
        if (infeasible_) return false;
        for (const Equation& e : eqs_)
            if (dot(e.a, x) != t * Rat(e.b)) return false;
        for (const Constraint& c : ineqs_) {
            Rat v = dot(c.a, x);
            Rat rhs = t * Rat(c.b);
            if (c.strict ? !(v > rhs) : !(v >= rhs)) return false;
        }
        return true;
    }

    // Deterministic text form; equal canonical keys mean equal constraint sets.
    std::string canonical_key() const {
        std::vector<Equation> es = eqs_;
        std::vector<Constraint> is = ineqs_;
        std::sort(es.begin(), es.end());
        std::sort(is.begin(), is.end());
        std::ostringstream out;
        if (infeasible_) out << "infeasible;";
        for (const Equation& e : es) {
            out << "e " << e.b.get_str();
            for (const Int& x : e.a) out << " " << x.get_str();
            out << ";";
        }
        for (const Constraint& c : is) {
            out << (c.strict ? "s " : "w ") << c.b.get_str();
            for (const Int& x : c.a) out << " " << x.get_str();
            out << ";";
        }
        return out.str();
    }

private:
    std::size_t dim_ = 0;
    std::vector<Equation> eqs_;
    std::vector<Constraint> ineqs_;
    bool infeasible_ = false;
};

// Fixture file format: first line "d m k"; then m inequality lines
// "b a1 .. ad s" meaning a·x ≥ b (s=0) or a·x > b (s=1); then k equality
// lines "b a1 .. ad".  All integers, decimal.
inline HPolyhedron parse_hrep(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            ++lineno;
            std::string trimmed = line;
            auto pos = trimmed.find('#');
            if (pos != std::string::npos) trimmed.erase(pos);
            if (trimmed.find_first_not_of(" \t\r\n") != std::string::npos) return trimmed;
        }
        throw ParseError(lineno + 1, "unexpected end of file");
    };
    auto parse_ints = [&](const std::string& s, std::size_t want) {
        std::istringstream iss(s);
        std::vector<Int> vals;
        std::string tok;
        while (iss >> tok) {
            try {
                vals.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw ParseError(lineno, "not an integer: '" + tok + "'");
            }
        }
        if (vals.size() != want)
            throw ParseError(lineno, "expected " + std::to_string(want) + " integers, got " +
                                         std::to_string(vals.size()));
        return vals;
    };

    std::vector<Int> header = parse_ints(next_line(), 3);
    if (header[0] < 0 || header[1] < 0 || header[2] < 0)
        throw ParseError(lineno, "negative count in header");
    std::size_t d = header[0].get_ui(), m = header[1].get_ui(), k = header[2].get_ui();

    HPolyhedron p(d);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Int> v = parse_ints(next_line(), d + 2);
        if (v[d + 1] != 0 && v[d + 1] != 1)
            throw ParseError(lineno, "strictness flag must be 0 or 1");
        IntVec a(v.begin() + 1, v.begin() + 1 + d);
        p.add_inequality(std::move(a), v[0], v[d + 1] == 1);
    }
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> v = parse_ints(next_line(), d + 1);
        IntVec a(v.begin() + 1, v.end());
        p.add_equality(std::move(a), v[0]);
    }
    return p;
}

inline void print_hrep(std::ostream& out, const HPolyhedron& p) {
    out << p.dim() << " " << p.inequalities().size() << " " << p.equalities().size() << "\n";
    for (const Constraint& c : p.inequalities()) {
        out << c.b.get_str();
        for (const Int& x : c.a) out << " " << x.get_str();
        out << " " << (c.strict ? 1 : 0) << "\n";
    }
    for (const Equation& e : p.equalities()) {
        out << e.b.get_str();
        for (const Int& x : e.a) out << " " << x.get_str();
        out << "\n";
    }
}

} // namespace insideout
