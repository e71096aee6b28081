#ifndef SNAKEDIM_ERRORS_HPP
#define SNAKEDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace snakedim {

// Base for all domain errors. `name()` is the stable identifier surfaced
// by the CLI; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

struct AsymmetricMatrix : Error {
    AsymmetricMatrix(int i, int j)
        : Error("AsymmetricMatrix",
                "dist(" + std::to_string(i) + "," + std::to_string(j) + ") != dist(" +
                    std::to_string(j) + "," + std::to_string(i) + ")") {}
};

struct NegativeDistance : Error {
    NegativeDistance(int i, int j)
        : Error("NegativeDistance",
                "dist(" + std::to_string(i) + "," + std::to_string(j) + ") invalid") {}
};

struct TriangleViolation : Error {
    TriangleViolation(int i, int j, int k)
        : Error("TriangleViolation",
                "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                    std::to_string(k) + ")") {}
};

struct BadParams : Error {
    explicit BadParams(const std::string& detail) : Error("BadParams", detail) {}
};

struct NotGenerated : Error {
    explicit NotGenerated(const std::string& detail) : Error("NotGenerated", detail) {}
};

struct NotAPermutation : Error {
    explicit NotAPermutation(const std::string& detail) : Error("NotAPermutation", detail) {}
};

struct SamePoint : Error {
    explicit SamePoint(int x) : Error("SamePoint", "x = y = " + std::to_string(x)) {}
};

struct NoDisjointPairs : Error {
    explicit NoDisjointPairs(double eps)
        : Error("NoDisjointPairs", "every ball pair overlaps at eps = " + std::to_string(eps)) {}
};

struct MultiplicityExceeded : Error {
    MultiplicityExceeded(int mult, int bound, int worst_point)
        : Error("MultiplicityExceeded",
                "multiplicity " + std::to_string(mult) + " > " + std::to_string(bound) +
                    " at point " + std::to_string(worst_point)) {}
};

struct CannotRefine : Error {
    explicit CannotRefine(const std::string& detail) : Error("CannotRefine", detail) {}
};

struct NotSeparating : Error {
    NotSeparating(int x, int y)
        : Error("NotSeparating",
                "points " + std::to_string(x) + " and " + std::to_string(y) +
                    " share the same code") {}
};

struct EmptyExterior : Error {
    explicit EmptyExterior(double r)
        : Error("EmptyExterior", "no point at distance >= " + std::to_string(r)) {}
};

struct TooLarge : Error {
    TooLarge(int n, int limit)
        : Error("TooLarge", std::to_string(n) + " points; exhaustive search capped at " +
                                std::to_string(limit)) {}
};

struct IoError : Error {
    explicit IoError(const std::string& detail) : Error("IoError", detail) {}
};

} // namespace snakedim

#endif
