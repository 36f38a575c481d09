#include <superlie/error.hpp>
#include <superlie/family.hpp>

namespace superlie {

namespace {

void require(bool cond, const std::string& name, const std::string& constraint) {
  if (!cond) throw Error(Errc::BadParameters, name + " requires " + constraint);
}

}  // namespace

int CartanFamilySpec::height() const {
  switch (family) {
    case CartanFamily::W: return n - 1;
    case CartanFamily::S: return n - 2;
    case CartanFamily::Stilde: return n - 2;
    case CartanFamily::H: return n - 3;
  }
  return 0;
}

void validate(const FamilySpec& spec) {
  const std::string name = algebra_name(spec);
  const int m = spec.m, n = spec.n;
  switch (spec.family) {
    case ClassicalFamily::gl:
      require(m >= 0 && n >= 0 && m + n >= 1, name, "m, n >= 0 and m + n >= 1");
      break;
    case ClassicalFamily::A:
      require(m >= 0 && n >= 0 && (m != n || m > 0), name, "m, n >= 0 and (m != n or m = n > 0)");
      break;
    case ClassicalFamily::B:
      require(m >= 0 && n > 0, name, "m >= 0, n > 0");
      break;
    case ClassicalFamily::D:
      require(m >= 2 && n > 0, name, "m >= 2, n > 0");
      break;
    case ClassicalFamily::C:
    case ClassicalFamily::P:
    case ClassicalFamily::Q:
      require(n >= 2, name, "n >= 2");
      break;
  }
  require(m <= 12 && n <= 12, name, "parameters <= 12");
}

void validate(const CartanFamilySpec& spec) {
  const std::string name = algebra_name(spec);
  const int n = spec.n;
  switch (spec.family) {
    case CartanFamily::W: require(n >= 3, name, "n >= 3"); break;
    case CartanFamily::S: require(n >= 4, name, "n >= 4"); break;
    case CartanFamily::Stilde: require(n >= 4 && n % 2 == 0, name, "even arity 2m with m >= 2"); break;
    case CartanFamily::H: require(n >= 5, name, "n >= 5"); break;
  }
  require(n <= 10, name, "n <= 10");
}

std::string family_tag(const AlgebraFamily& family) {
  if (const auto* c = std::get_if<FamilySpec>(&family)) {
    switch (c->family) {
      case ClassicalFamily::gl: return "gl";
      case ClassicalFamily::A: return "A";
      case ClassicalFamily::B: return "B";
      case ClassicalFamily::C: return "C";
      case ClassicalFamily::D: return "D";
      case ClassicalFamily::P: return "P";
      case ClassicalFamily::Q: return "Q";
    }
  }
  if (const auto* c = std::get_if<CartanFamilySpec>(&family)) {
    switch (c->family) {
      case CartanFamily::W: return "W";
      case CartanFamily::S: return "S";
      case CartanFamily::Stilde: return "Stilde";
      case CartanFamily::H: return "H";
    }
  }
  return "";
}

namespace {

bool one_parameter(ClassicalFamily f) {
  return f == ClassicalFamily::C || f == ClassicalFamily::P || f == ClassicalFamily::Q;
}

}  // namespace

std::vector<int> family_params(const AlgebraFamily& family) {
  if (const auto* c = std::get_if<FamilySpec>(&family)) {
    if (one_parameter(c->family)) return {c->n};
    return {c->m, c->n};
  }
  if (const auto* c = std::get_if<CartanFamilySpec>(&family)) return {c->n};
  return {};
}

std::string algebra_name(const AlgebraFamily& family) {
  const std::string tag = family_tag(family);
  const auto params = family_params(family);
  if (tag.empty()) return "";
  if (tag == "gl") return "gl(" + std::to_string(params[0]) + "|" + std::to_string(params[1]) + ")";
  std::string out = tag + "(";
  for (std::size_t i = 0; i < params.size(); ++i)
    out += (i ? "," : "") + std::to_string(params[i]);
  return out + ")";
}

AlgebraFamily parse_family(std::string_view tag, const std::vector<int>& params) {
  static const std::pair<std::string_view, ClassicalFamily> classical[] = {
      {"gl", ClassicalFamily::gl}, {"A", ClassicalFamily::A}, {"B", ClassicalFamily::B},
      {"C", ClassicalFamily::C},   {"D", ClassicalFamily::D}, {"P", ClassicalFamily::P},
      {"Q", ClassicalFamily::Q}};
  static const std::pair<std::string_view, CartanFamily> cartan[] = {
      {"W", CartanFamily::W}, {"S", CartanFamily::S}, {"Stilde", CartanFamily::Stilde},
      {"H", CartanFamily::H}};

  for (const auto& [name, f] : classical) {
    if (name != tag) continue;
    const std::size_t expected = one_parameter(f) ? 1 : 2;
    if (params.size() != expected)
      throw Error(Errc::BadParameters, std::string(tag) + " takes " + std::to_string(expected) +
                                           " integer parameter(s)");
    FamilySpec spec{f, expected == 2 ? params[0] : 0, params.back()};
    validate(spec);
    return spec;
  }
  for (const auto& [name, f] : cartan) {
    if (name != tag) continue;
    if (params.size() != 1)
      throw Error(Errc::BadParameters, std::string(tag) + " takes 1 integer parameter");
    CartanFamilySpec spec{f, params[0]};
    validate(spec);
    return spec;
  }
  throw Error(Errc::BadParameters, "unknown family '" + std::string(tag) + "'");
}

}  // namespace superlie
