#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superlie {

enum class Errc {
  DuplicateNodes,
  MixedArity,
  IndexOutOfRange,
  ShapeMismatch,
  BadParameters,
  DimensionMismatch,
  NotDiagonal,
  NotRegularizable,
  NotSemisimpleAction,
  OddSpacesNotOneDim,
  NotAModule,
  ConstructionFailed,
  ParseError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// Errors caused by the caller's input (bad family parameters, malformed files).
  bool is_input_error() const noexcept {
    switch (code_) {
      case Errc::BadParameters:
      case Errc::ParseError:
      case Errc::DimensionMismatch:
      case Errc::IndexOutOfRange:
      case Errc::MixedArity:
      case Errc::ShapeMismatch:
      case Errc::DuplicateNodes:
      case Errc::OddSpacesNotOneDim:
        return true;
      default:
        return false;
    }
  }

 private:
  Errc code_;
};

}  // namespace superlie
