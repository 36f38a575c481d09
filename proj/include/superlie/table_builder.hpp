#pragma once

#include <superlie/superalgebra.hpp>

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace superlie {

/// Sparse vector in some ambient coordinate space; stored values are nonzero.
using SparseVector = std::map<Index, Scalar>;

/// dst += c * src, dropping cancelled entries.
void axpy(SparseVector& dst, const Scalar& c, const SparseVector& src);

/// Expresses ambient vectors in a fixed basis, optionally modulo a subspace
/// (e.g. a center being quotiented out).
class CoordinateSolver {
 public:
  /// Throws Error(ConstructionFailed) if basis and modulus are not jointly independent.
  CoordinateSolver(const std::vector<SparseVector>& basis, const std::vector<SparseVector>& modulus);

  Index dim() const { return basis_dim_; }

  /// Coordinates over the basis (modulus part dropped), or nullopt when v is
  /// outside span(basis) + span(modulus).
  std::optional<SparseVector> solve(const SparseVector& v) const;

 private:
  struct Row {
    SparseVector vector;
    SparseVector combination;
  };
  Index basis_dim_ = 0;
  std::map<Index, Row> rows_;  // keyed by pivot
};

struct TableInput {
  std::string name;
  AlgebraFamily family;
  std::vector<SparseVector> basis;
  std::vector<SparseVector> modulus;
  std::vector<Parity> parity;
  std::vector<std::string> labels;
  std::vector<Index> cartan;
  std::optional<std::vector<int>> degree;
  std::optional<std::vector<int>> component;
  /// Ambient bracket of basis vectors i and j.
  std::function<SparseVector(Index, Index)> bracket;
};

/// Computes the structure constants on all ordered basis pairs and the Cartan
/// weights. Throws ConstructionFailed if a bracket leaves the span and
/// NotDiagonal if a basis vector is not a Cartan eigenvector.
SuperAlgebra build_table(const TableInput& input);

}  // namespace superlie
