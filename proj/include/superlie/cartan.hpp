#pragma once

#include <superlie/grassmann.hpp>
#include <superlie/superalgebra.hpp>

#include <span>
#include <vector>

namespace superlie {

/// Basis of the standard Cartan subalgebra of L_0: xi_i d_i (W),
/// xi_1 d_1 - xi_j d_j (S, Stilde), xi_i d_i - xi_{i'} d_{i'} (H).
std::vector<Superderivation> cartan_basis(const CartanFamilySpec& spec);

/// A Cartan family realized inside W(n) = der Lambda(n).
struct CartanModel {
  CartanFamilySpec spec;
  SuperAlgebra algebra;
  std::vector<Superderivation> basis;

  /// Throws Error(DimensionMismatch) when d is not in the model.
  SuperVector coordinates(const Superderivation& d) const;
  Superderivation derivation(const SuperVector& v) const;

  /// Weight of sum_k eps[k] * epsilon_{k+1}, epsilon_k being dual to xi_k d_k.
  Weight weight_of(std::span<const Scalar> eps) const;
  Weight weight_of(std::initializer_list<int> eps) const;
};

/// Throws Error(BadParameters) for out-of-range parameters.
CartanModel cartan_model(const CartanFamilySpec& spec);
SuperAlgebra build_cartan(const CartanFamilySpec& spec);

}  // namespace superlie
