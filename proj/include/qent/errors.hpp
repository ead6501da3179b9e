#pragma once

#include <stdexcept>
#include <string>

namespace qent {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidQ : Error { using Error::Error; };
struct ZeroConditioningEvent : Error { using Error::Error; };
struct InvalidProbability : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct TraceNotOne : Error { using Error::Error; };
struct WrongLabelScheme : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace qent
