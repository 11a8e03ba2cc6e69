#pragma once

// Error taxonomy shared by all modules.  Every failure mode that callers are
// expected to handle gets its own type so tests can match on it precisely;
// all of them carry a human-readable message.

#include <stdexcept>
#include <string>

namespace a2zeta {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- domain / input errors -------------------------------------------------
struct NotPrimePower : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct TypeRuleViolation : Error { using Error::Error; };
struct DanglingReference : Error { using Error::Error; };
struct InvalidPresentation : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };

// --- precondition / usage errors ------------------------------------------
struct PreconditionFailed : Error { using Error::Error; };
struct NotComposable : Error { using Error::Error; };
struct InvalidLength : Error { using Error::Error; };
struct NonSquare : Error { using Error::Error; };

// --- exact-arithmetic errors -----------------------------------------------
struct DivisionByZero : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct DegreeBoundViolated : Error { using Error::Error; };

// --- operator-algebra errors -----------------------------------------------
struct StabilizationFailure : Error { using Error::Error; };
struct AxiomViolation : Error { using Error::Error; };

}  // namespace a2zeta
