#pragma once

#include <stdexcept>
#include <string>

namespace insideout {

struct EmptyPolyhedron : std::runtime_error {
    explicit EmptyPolyhedron(const std::string& what = "polyhedron is empty")
        : std::runtime_error(what) {}
};

struct UnboundedPolyhedron : std::runtime_error {
    explicit UnboundedPolyhedron(const std::string& what = "polyhedron is unbounded")
        : std::runtime_error(what) {}
};

// A hyperplane contains the whole affine hull of the polytope, so every
// point of the polytope lies on the arrangement.
struct DegenerateArrangement : std::runtime_error {
    explicit DegenerateArrangement(const std::string& what) : std::runtime_error(what) {}
};

// The dilated affine hull family never meets the integer lattice.
struct NoLatticeCompatibleOrigin : std::runtime_error {
    explicit NoLatticeCompatibleOrigin(const std::string& what) : std::runtime_error(what) {}
};

// An interpolated quasipolynomial failed its extra-sample recount.
struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

struct SymmetryViolation : std::runtime_error {
    explicit SymmetryViolation(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace insideout
