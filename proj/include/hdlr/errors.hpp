#pragma once

#include <stdexcept>
#include <string>

namespace hdlr {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact arithmetic
struct IdenticallyZeroDenominator : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct EssentialOrUndetermined : Error { using Error::Error; };

// fans and shellings
struct ConeNotInFan : Error { using Error::Error; };
struct NotAPermutation : Error { using Error::Error; };
struct DegenerateShelling : Error { using Error::Error; };
struct UnknownSpace : Error { using Error::Error; };

// cohomology
struct RankMismatch : Error { using Error::Error; };
struct SingularBasis : Error { using Error::Error; };
struct UnsupportedSpace : Error { using Error::Error; };

// closed forms and weight functions
struct IndexOutOfRange : Error { using Error::Error; };
struct NonPolynomialResult : Error { using Error::Error; };
struct NotAPieriTriple : Error { using Error::Error; };
struct NotPolynomial : Error { using Error::Error; };
struct NotPolynomialAfterRestriction : Error { using Error::Error; };

// limits
struct PoleAtOrigin : Error { using Error::Error; };
struct PoleAtOne : Error { using Error::Error; };

// driver
struct BudgetExceeded : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };

} // namespace hdlr
