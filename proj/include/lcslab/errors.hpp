#pragma once

#include "lcslab/matrix.hpp"

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace lcslab {

/// Base class for every structured rejection the library reports. The
/// what() text is stable and shows up verbatim in CLI reports.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct JacobiViolation : Error {
    // (i, j, k, defect vector) per violated basis triple, 1-based indices
    std::vector<std::tuple<int, int, int, QVec>> defects;
    explicit JacobiViolation(std::vector<std::tuple<int, int, int, QVec>> d)
        : Error("Jacobi identity violated on " + std::to_string(d.size()) + " basis triple(s)"),
          defects(std::move(d)) {}
};

struct ThetaNotClosed : Error {
    ThetaNotClosed() : Error("theta is not closed") {}
};
struct ThetaZero : Error {
    ThetaZero() : Error("theta is zero") {}
};
struct NotTransversal : Error {
    NotTransversal() : Error("theta(A) != 1") {}
};
struct NotClosed : Error {
    NotClosed() : Error("form is not d_theta-closed") {}
};
struct NotLcs : Error {
    // dw - theta ^ w, the failed condition
    std::string defect;
    explicit NotLcs(std::string defect_form)
        : Error("d(omega) != theta ^ omega, defect " + defect_form), defect(std::move(defect_form)) {}
};
struct Degenerate : Error {
    Degenerate() : Error("2-form is degenerate (Pfaffian 0)") {}
};
struct EvenDimension : Error {
    EvenDimension() : Error("contact structures need odd dimension") {}
};
struct NotContact : Error {
    NotContact() : Error("eta ^ (d eta)^n = 0, not a contact form") {}
};
struct NotADerivation : Error {
    std::vector<std::pair<int, int>> defect_pairs;
    explicit NotADerivation(std::vector<std::pair<int, int>> pairs)
        : Error("matrix is not a derivation (" + std::to_string(pairs.size()) + " defect pair(s))"),
          defect_pairs(std::move(pairs)) {}
};
struct EtaDNotZero : Error {
    EtaDNotZero() : Error("eta o D != 0") {}
};
struct NotSymplectic : Error {
    NotSymplectic() : Error("beta is not a symplectic form") {}
};
struct NotSymplecticDerivation : Error {
    NotSymplecticDerivation() : Error("E is not a symplectic derivation") {}
};
struct NotFirstKind : Error {
    NotFirstKind() : Error("LCS structure is not of the first kind") {}
};
struct UnsupportedAngle : Error {
    explicit UnsupportedAngle(const std::string& angle)
        : Error("trigonometric evaluation only at integer multiples of pi/2, got " + angle) {}
};
struct NonCommutingDecomposition : Error {
    NonCommutingDecomposition()
        : Error("matrix does not split into commuting semisimple and nilpotent parts") {}
};
struct SingularA : Error {
    SingularA() : Error("matrix is singular") {}
};
struct UnsupportedT0 : Error {
    UnsupportedT0() : Error("t0 must be one of pi/2, pi, 2pi") {}
};
struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown catalog name '" + name + "'") {}
};
struct MissingParam : Error {
    explicit MissingParam(const std::string& what) : Error("missing or invalid parameter: " + what) {}
};
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

} // namespace lcslab
