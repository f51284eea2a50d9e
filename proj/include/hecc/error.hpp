#pragma once

#include <stdexcept>
#include <string>

namespace hecc {

enum class Errc {
  NotPrimitive,
  BadDegree,
  DivideByZero,
  BothZero,
  ZeroPolynomial,
  PointCollision,
  ZeroScaling,
  NotSquare,
  BadDimensions,
  RankDeficient,
  LengthMismatch,
  BadIndexSet,
  ConfigInvalid,
  TooLarge,
  OutOfRange,
  BadArchive,
  IoError,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

} // namespace hecc
