#pragma once

#include "oracles.hpp"

#include <superlie/superlie.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string_view>
#include <vector>

namespace superlie::test {

inline Index label_index(const SuperAlgebra& L, std::string_view label) {
  for (Index i = 0; i < L.dim(); ++i)
    if (L.label(i) == label) return i;
  FAIL("no basis vector labelled " << label);
  return -1;
}

/// sum c * b_label over the given labels.
inline SuperVector combo(const SuperAlgebra& L,
                         std::initializer_list<std::pair<int, std::string_view>> terms) {
  SuperVector v = SuperVector::Zero(L.dim());
  for (const auto& [c, label] : terms) v(label_index(L, label)) += c;
  return v;
}

inline SuperVector random_vector(std::mt19937_64& rng, Index dim, int bound = 3) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  SuperVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = Scalar(num(rng)) / den(rng);
  return v;
}

using oracle::naive_closure_dim;
using oracle::rank_of;

inline std::set<Weight> as_set(const std::vector<Weight>& ws) { return {ws.begin(), ws.end()}; }

inline FamilySpec classical(ClassicalFamily f, int m, int n) { return FamilySpec{f, m, n}; }
inline CartanFamilySpec cartan(CartanFamily f, int n) { return CartanFamilySpec{f, n}; }

}  // namespace superlie::test
