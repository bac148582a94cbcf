#pragma once

#include <stdexcept>
#include <string>

namespace mrlrc {

enum class Err {
    // field / number theory
    NotPrime,
    Overflow,
    DivideByZero,
    NotInGroup,
    NotFound,
    // matrices
    DuplicateElements,
    Collision,
    NotSquare,
    ShapeMismatch,
    // codes
    LocalNotMDS,
    RankDeficient,
    LengthMismatch,
    BudgetExceeded,
    TooManyErasures,
    Inconsistent,
    OutOfScope,
    // constructions
    PreconditionViolated,
    OmegaTooSmall,
    SweepExhausted,
    // curves / triple families
    NotOnCurve,
    SingularPoint,
    ZeroInput,
    NotCollinear,
    DegenerateScaling,
    // file formats / CLI
    ParseError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::NotPrime: return "NotPrime";
        case Err::Overflow: return "Overflow";
        case Err::DivideByZero: return "DivideByZero";
        case Err::NotInGroup: return "NotInGroup";
        case Err::NotFound: return "NotFound";
        case Err::DuplicateElements: return "DuplicateElements";
        case Err::Collision: return "Collision";
        case Err::NotSquare: return "NotSquare";
        case Err::ShapeMismatch: return "ShapeMismatch";
        case Err::LocalNotMDS: return "LocalNotMDS";
        case Err::RankDeficient: return "RankDeficient";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::TooManyErasures: return "TooManyErasures";
        case Err::Inconsistent: return "Inconsistent";
        case Err::OutOfScope: return "OutOfScope";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::OmegaTooSmall: return "OmegaTooSmall";
        case Err::SweepExhausted: return "SweepExhausted";
        case Err::NotOnCurve: return "NotOnCurve";
        case Err::SingularPoint: return "SingularPoint";
        case Err::ZeroInput: return "ZeroInput";
        case Err::NotCollinear: return "NotCollinear";
        case Err::DegenerateScaling: return "DegenerateScaling";
        case Err::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Err kind, const std::string& what)
        : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}

    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

} // namespace mrlrc
