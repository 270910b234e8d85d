#pragma once

#include <stdexcept>
#include <string>

namespace coxlab {

enum class Errc {
  DiagonalNotOne,
  OffDiagonalBelowTwo,
  Asymmetric,
  NotSquare,
  RankTooLarge,
  InvalidLetter,
  CapExceeded,
  ElementCapExceeded,
  LengthParityMismatch,
  NotABraidStep,
  InvalidArgument,
  ParseError,
  UnknownCatalogType,
  Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace coxlab
