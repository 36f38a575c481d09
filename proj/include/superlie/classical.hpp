#pragma once

#include <superlie/superalgebra.hpp>

#include <optional>
#include <span>
#include <vector>

namespace superlie {

/// tr(A) - tr(D) for x = [[A, B], [C, D]] with A of size p x p.
Scalar supertrace(const ExactMatrix& x, Index p);

/// E_ij (1-based) of size n x n.
ExactMatrix matrix_unit(Index n, Index i, Index j);

/// A classical family realized inside gl(p|q).
struct ClassicalModel {
  FamilySpec spec;
  Index p = 0;
  Index q = 0;
  SuperAlgebra algebra;
  /// Matrix of each basis vector.
  std::vector<ExactMatrix> basis;
  /// Spans the center that is factored out (A(n,n), Q(n)).
  std::optional<ExactMatrix> modulus;

  Index size() const { return p + q; }

  /// Coordinates of a matrix of the model (modulo the center when factored out).
  /// Throws Error(DimensionMismatch) when x is not in the model.
  SuperVector coordinates(const ExactMatrix& x) const;
  ExactMatrix matrix(const SuperVector& v) const;

  /// Weight of the functional diag(d_1, ..., d_{p+q}) -> sum f_k d_k.
  Weight weight_of(std::span<const Scalar> diagonal_functional) const;
  Weight weight_of(std::initializer_list<int> diagonal_functional) const;
};

/// Throws Error(BadParameters) for out-of-range parameters.
ClassicalModel classical_model(const FamilySpec& spec);
SuperAlgebra build_classical(const FamilySpec& spec);

}  // namespace superlie
