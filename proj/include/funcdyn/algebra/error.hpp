#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace funcdyn {

enum class Errc {
    CompositeP,
    NotPrimePower,
    FieldTooLarge,
    FieldMismatch,
    ReducibleModulus,
    ZeroElement,
    BothZero,
    ZeroPolynomial,
    NotDivisible,
    EqualPoints,
    DegenerateMap,
    DegreeMismatch,
    BadReductionPlace,
    IterateZero,
    SingularMobius,
    TooFewSamples,
    DuplicateSample,
    HypothesisViolated,
    NotUnitLeadingPolynomial,
    InfinitePeriodicSet,
    DegenerateResidueMap,
    NotClosed,
    NotACycle,
    DegreeTooSmall,
    DuplicateInput,
    PowersCollide,
    UnitOrderOne,
    ParseError,
    UsageError,
};

constexpr std::string_view errc_name(Errc e) {
    switch (e) {
        case Errc::CompositeP: return "CompositeP";
        case Errc::NotPrimePower: return "NotPrimePower";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::BothZero: return "BothZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::EqualPoints: return "EqualPoints";
        case Errc::DegenerateMap: return "DegenerateMap";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::BadReductionPlace: return "BadReductionPlace";
        case Errc::IterateZero: return "IterateZero";
        case Errc::SingularMobius: return "SingularMobius";
        case Errc::TooFewSamples: return "TooFewSamples";
        case Errc::DuplicateSample: return "DuplicateSample";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::NotUnitLeadingPolynomial: return "NotUnitLeadingPolynomial";
        case Errc::InfinitePeriodicSet: return "InfinitePeriodicSet";
        case Errc::DegenerateResidueMap: return "DegenerateResidueMap";
        case Errc::NotClosed: return "NotClosed";
        case Errc::NotACycle: return "NotACycle";
        case Errc::DegreeTooSmall: return "DegreeTooSmall";
        case Errc::DuplicateInput: return "DuplicateInput";
        case Errc::PowersCollide: return "PowersCollide";
        case Errc::UnitOrderOne: return "UnitOrderOne";
        case Errc::ParseError: return "ParseError";
        case Errc::UsageError: return "UsageError";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace funcdyn
