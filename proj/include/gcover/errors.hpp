#pragma once

#include <stdexcept>
#include <string>

namespace gcover {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoSnapError : Error { using Error::Error; };
struct AmbiguousSnapError : Error { using Error::Error; };
struct NotFiniteOrderError : Error { using Error::Error; };
struct GroupMismatchError : Error { using Error::Error; };
struct NotSubgroupError : Error { using Error::Error; };
struct NotARepresentationError : Error { using Error::Error; };
struct NotSimpleError : Error { using Error::Error; };
struct NotScalarPowerError : Error { using Error::Error; };
struct NotScalarCommutatorError : Error { using Error::Error; };
struct ZeroCharacterError : Error { using Error::Error; };
struct ZeroVectorError : Error { using Error::Error; };
struct NotCategoryCError : Error { using Error::Error; };
struct LabelNotInHError : Error { using Error::Error; };
struct NotThinError : Error { using Error::Error; };
struct NotCompletelyReducibleError : Error { using Error::Error; };
struct GradingInvalidError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };

}  // namespace gcover
