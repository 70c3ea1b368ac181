#pragma once

#include <stdexcept>
#include <string>

namespace crystden {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct OrderExceedsCap : Error { using Error::Error; };
struct GroupTooLarge : Error { using Error::Error; };
struct InfiniteOrderGenerator : Error { using Error::Error; };
struct NotUnimodular : Error { using Error::Error; };
struct NotInvariant : Error { using Error::Error; };
struct NotFiniteOrder : Error { using Error::Error; };
struct BallTooLarge : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct EmptyCoset : Error { using Error::Error; };
struct EigenvalueOnePresent : Error { using Error::Error; };
struct InvalidRational : Error { using Error::Error; };
struct CatalogValidationFailed : Error { using Error::Error; };
struct ConstructionInvariantFailed : Error { using Error::Error; };
struct DimensionNotOdd : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };
struct StepTooHigh : Error { using Error::Error; };
struct DimensionOutOfRange : Error { using Error::Error; };
struct NotNonabelian : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace crystden
