#pragma once

#include <superlie/scalar.hpp>

#include <algorithm>
#include <vector>

namespace superlie {

/// Values (gamma(h_1), ..., gamma(h_r)) of a functional on the stored Cartan basis.
struct Weight {
  std::vector<Scalar> values;

  Weight() = default;
  explicit Weight(std::vector<Scalar> v) : values(std::move(v)) {}

  std::size_t rank() const { return values.size(); }
  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s == 0; });
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.values == b.values; }
  friend bool operator<(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.values.begin(), a.values.end(), b.values.begin(),
                                        b.values.end());
  }
  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
  }
  friend Weight operator-(const Weight& a) {
    Weight out = a;
    for (auto& v : out.values) v = -v;
    return out;
  }
};

/// gamma(h) for h = sum_k coeffs[k] * h_k.
template <class Derived>
Scalar evaluate(const Weight& w, const Eigen::DenseBase<Derived>& coeffs) {
  Scalar out(0);
  for (std::size_t k = 0; k < w.values.size(); ++k)
    if (coeffs(static_cast<Index>(k)) != 0) out += w.values[k] * coeffs(static_cast<Index>(k));
  return out;
}

std::string to_string(const Weight& w);

}  // namespace superlie
