#pragma once

#include <stdexcept>
#include <string>

namespace mono {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct BothZero : Error {
  using Error::Error;
};
struct DegenerateCurve : Error {
  using Error::Error;
};
struct DegenerateFamily : Error {
  using Error::Error;
};
struct IsotrivialFamily : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct PrecisionExhausted : Error {
  using Error::Error;
};
struct DiscriminantHit : Error {
  using Error::Error;
};
struct NonGenericProjection : Error {
  using Error::Error;
};
struct WrongStrandCount : Error {
  using Error::Error;
};
struct RequiresClosedTable : Error {
  using Error::Error;
};
struct InvalidRank : Error {
  using Error::Error;
};
struct GenusTooSmall : Error {
  using Error::Error;
};
struct ZeroTwist : Error {
  using Error::Error;
};
struct ZeroOnLoop : Error {
  using Error::Error;
};
struct UnclassifiablePlace : Error {
  using Error::Error;
};
struct NonSmoothQuartic : Error {
  using Error::Error;
};
struct NonGenericPencil : Error {
  using Error::Error;
};
struct InternalError : Error {
  using Error::Error;
};

}  // namespace mono
