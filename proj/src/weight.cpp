#include <superlie/weight.hpp>

namespace superlie {

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.values.size(); ++i) out += (i ? ", " : "") + to_string(w.values[i]);
  return out + ")";
}

}  // namespace superlie
