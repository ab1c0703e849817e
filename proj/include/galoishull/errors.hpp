#pragma once

#include <stdexcept>
#include <string>

namespace ghl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction / element arithmetic
struct NonPrimeP : Error { using Error::Error; };
struct ReducibleModulus : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct NotInE : Error { using Error::Error; };
struct EDoesNotDivideH : Error { using Error::Error; };
struct NoSuchOrder : Error { using Error::Error; };

// matrices
struct DimMismatch : Error { using Error::Error; };

// GRS codes
struct DuplicatePoints : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct TooLargeForExact : Error { using Error::Error; };
struct ExtendedUnsupported : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };

// constructions
struct InvalidParams : Error { using Error::Error; };
struct NormEquationFailed : Error { using Error::Error; };
struct HOverENotOdd : Error { using Error::Error; };
struct SeedInvalidWitness : Error { using Error::Error; };
struct GcdNotTwo : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };

// eaqecc tables
struct InvalidRanges : Error { using Error::Error; };

}  // namespace ghl
