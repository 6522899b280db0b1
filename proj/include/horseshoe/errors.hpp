#ifndef HORSESHOE_ERRORS_HPP
#define HORSESHOE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace horseshoe {

// Base class for all failures raised by the rigorous layers.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZeroInterval : Error {
    explicit DivisionByZeroInterval(const std::string& msg = "interval division by interval containing 0")
        : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

struct NonFiniteError : Error {
    explicit NonFiniteError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte offset " + std::to_string(offset) + ")"), byte_offset(offset) {}
    std::size_t byte_offset;
};

// Fixed point certification failures.
struct NoContraction : Error {
    explicit NoContraction(const std::string& msg) : Error(msg) {}
};
struct AmbiguousRotation : Error {
    explicit AmbiguousRotation(const std::string& msg) : Error(msg) {}
};
struct SingularJacobian : Error {
    explicit SingularJacobian(const std::string& msg) : Error(msg) {}
};
struct FamilyMismatch : Error {
    explicit FamilyMismatch(const std::string& msg) : Error(msg) {}
};

// Orbit enclosure failures.
struct BlowupError : Error {
    explicit BlowupError(const std::string& msg) : Error(msg) {}
};

// dpn / Birkhoff failures.
struct GapTooLarge : Error {
    explicit GapTooLarge(const std::string& msg) : Error(msg) {}
};
struct SampleEscaped : Error {
    SampleEscaped(int step_, std::size_t index_, const std::string& msg)
        : Error(msg), step(step_), index(index_) {}
    int step;
    std::size_t index;
};
struct BoxesOverlap : Error {
    explicit BoxesOverlap(const std::string& msg) : Error(msg) {}
};
struct DpnFailure : Error {
    explicit DpnFailure(const std::string& msg) : Error(msg) {}
};
struct NoTransitFound : Error {
    explicit NoTransitFound(const std::string& msg) : Error(msg) {}
};

// Certifier pipeline failures.
struct NoFixedPointPair : Error {
    explicit NoFixedPointPair(const std::string& msg) : Error(msg) {}
};
struct FreeCurveFailure : Error {
    explicit FreeCurveFailure(const std::string& msg) : Error(msg) {}
};
struct NoWitnessFound : Error {
    explicit NoWitnessFound(const std::string& msg) : Error(msg) {}
};
struct InequalityFails : Error {
    explicit InequalityFails(const std::string& msg) : Error(msg) {}
};
struct NoCrossingFound : Error {
    explicit NoCrossingFound(const std::string& msg) : Error(msg) {}
};

// Exact-geometry failures.
struct DegeneratePosition : Error {
    explicit DegeneratePosition(const std::string& msg) : Error(msg) {}
};
struct NoIntersection : Error {
    explicit NoIntersection(const std::string& msg) : Error(msg) {}
};
struct EmptyI : Error {
    explicit EmptyI(const std::string& msg) : Error(msg) {}
};
struct IncidenceMismatch : Error {
    explicit IncidenceMismatch(const std::string& msg) : Error(msg) {}
};
struct NotEssential : Error {
    explicit NotEssential(const std::string& msg) : Error(msg) {}
};
struct TooManyLifts : Error {
    explicit TooManyLifts(const std::string& msg) : Error(msg) {}
};

} // namespace horseshoe

#endif
