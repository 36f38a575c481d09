#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace superlie {

/// Exact rational number, always in lowest terms with a positive denominator.
using Scalar = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <class T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <class T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Coordinate vector over the homogeneous basis of a superalgebra.
using SuperVector = VectorX<Scalar>;
using ExactMatrix = MatrixX<Scalar>;

/// "p/q", or "p" when q = 1; the sign is carried by the numerator.
std::string to_string(const Scalar& s);

/// Parses "p/q" or "p" (optional leading '-'); throws Error(ParseError).
Scalar parse_scalar(std::string_view text);

/// Renders sum c_i * name_i as "x2 d2 - x1 d1", "2 e11 + 1/2 e22"; "0" when empty.
/// An empty name denotes the unit.
std::string format_combination(const std::vector<std::pair<Scalar, std::string>>& terms);

template <class Derived>
bool is_zero(const Eigen::DenseBase<Derived>& v) {
  for (Index c = 0; c < v.cols(); ++c)
    for (Index r = 0; r < v.rows(); ++r)
      if (v(r, c) != 0) return false;
  return true;
}

template <class Derived>
Index nonzero_count(const Eigen::DenseBase<Derived>& v) {
  Index count = 0;
  for (Index c = 0; c < v.cols(); ++c)
    for (Index r = 0; r < v.rows(); ++r)
      if (v(r, c) != 0) ++count;
  return count;
}

}  // namespace superlie
