#pragma once
#include <stdexcept>
#include <string>

namespace dnc {

enum class Errc {
  MixedRings,
  ZeroSaturant,
  UnknownVariable,
  DuplicateVariable,
  DSquareNonzero,
  WeightMismatch,
  DegreeMismatch,
  NotDegreeZero,
  BaseMismatch,
  NameCollision,
  CellNotCancellable,
  CutoffTooSmall,
  EmptyCenter,
  IndexOutOfRange,
  ParseError,
  CorruptCache,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace dnc
