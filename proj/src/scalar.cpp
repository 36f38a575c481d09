#include <superlie/error.hpp>
#include <superlie/scalar.hpp>

#include <cctype>

namespace superlie {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateNodes: return "DuplicateNodes";
    case Errc::MixedArity: return "MixedArity";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BadParameters: return "BadParameters";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotDiagonal: return "NotDiagonal";
    case Errc::NotRegularizable: return "NotRegularizable";
    case Errc::NotSemisimpleAction: return "NotSemisimpleAction";
    case Errc::OddSpacesNotOneDim: return "OddSpacesNotOneDim";
    case Errc::NotAModule: return "NotAModule";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Scalar& s) { return s.str(); }

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole, bool allow_sign) {
  std::size_t pos = 0;
  if (allow_sign && !digits.empty() && digits[0] == '-') pos = 1;
  if (pos == digits.size())
    throw Error(Errc::ParseError, "malformed rational \"" + std::string(whole) + "\"");
  for (std::size_t i = pos; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw Error(Errc::ParseError, "malformed rational \"" + std::string(whole) + "\"");
  return Integer(std::string(digits));
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text, text, true));
  const Integer num = parse_integer(text.substr(0, slash), text, true);
  const Integer den = parse_integer(text.substr(slash + 1), text, false);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  return Scalar(num, den);
}

}  // namespace superlie

namespace superlie {

std::string format_combination(const std::vector<std::pair<Scalar, std::string>>& terms) {
  std::string out;
  for (const auto& [coeff, name] : terms) {
    if (coeff == 0) continue;
    const bool negative = coeff < 0;
    const Scalar magnitude = negative ? Scalar(-coeff) : coeff;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (name.empty()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + " ";
      out += name;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace superlie
