#pragma once

#include <superlie/exactlin.hpp>
#include <superlie/family.hpp>
#include <superlie/weight.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace superlie {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int sign_of_swap(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}
inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

/// c_{ij}^k for a fixed (i, j).
struct StructureTerm {
  Index index = 0;
  Scalar coeff;

  friend bool operator==(const StructureTerm&, const StructureTerm&) = default;
};

/// Row-major dim x dim table: entry i * dim + j lists [b_i, b_j].
using StructureTable = std::vector<std::vector<StructureTerm>>;

struct SuperAlgebraParts {
  std::string name;
  AlgebraFamily family;
  std::vector<Parity> parity;
  std::vector<std::string> labels;
  std::vector<Index> cartan;
  std::vector<Weight> weights;
  std::optional<std::vector<int>> degree;
  std::optional<std::vector<int>> component;
  StructureTable structure;
};

/// A finite-dimensional Lie superalgebra given by a parity-tagged basis and
/// sparse structure constants. Each basis vector is a simultaneous
/// ad-eigenvector of the Cartan basis with eigenvalues `weight(i)`.
class SuperAlgebra {
 public:
  explicit SuperAlgebra(SuperAlgebraParts parts);

  const std::string& name() const { return parts_.name; }
  const AlgebraFamily& family() const { return parts_.family; }
  Index dim() const { return static_cast<Index>(parts_.parity.size()); }

  Parity parity(Index i) const { return parts_.parity[static_cast<std::size_t>(i)]; }
  bool is_odd(Index i) const { return parity(i) == Parity::Odd; }
  const std::string& label(Index i) const { return parts_.labels[static_cast<std::size_t>(i)]; }
  const std::vector<Index>& cartan() const { return parts_.cartan; }
  Index rank() const { return static_cast<Index>(parts_.cartan.size()); }
  bool is_cartan(Index i) const;
  const Weight& weight(Index i) const { return parts_.weights[static_cast<std::size_t>(i)]; }

  bool has_degree() const { return parts_.degree.has_value(); }
  int degree(Index i) const { return (*parts_.degree)[static_cast<std::size_t>(i)]; }
  bool has_component() const { return parts_.component.has_value(); }
  /// 0 when untagged, otherwise the odd-component tag 1 or 2.
  int component(Index i) const {
    return has_component() ? (*parts_.component)[static_cast<std::size_t>(i)] : 0;
  }

  std::span<const StructureTerm> structure(Index i, Index j) const {
    return parts_.structure[static_cast<std::size_t>(i * dim() + j)];
  }

  const SuperAlgebraParts& parts() const { return parts_; }

 private:
  SuperAlgebraParts parts_;
};

using Subspace = Echelon<Scalar>;

SuperVector basis_vector(const SuperAlgebra& L, Index i);

/// Bilinear extension of the structure constants.
SuperVector bracket(const SuperAlgebra& L, const SuperVector& x, const SuperVector& y);

Subspace span_of(const SuperAlgebra& L, std::span<const Index> indices);
Subspace span_of(Index ambient, std::span<const SuperVector> vectors);

std::vector<Index> even_indices(const SuperAlgebra& L);
std::vector<Index> odd_indices(const SuperAlgebra& L);
std::vector<Index> degree_indices(const SuperAlgebra& L, int k);
/// Basis of the reductive part acting on the rest: L_0 when Z-graded
/// (Cartan type), the even part otherwise.
std::vector<Index> reductive_indices(const SuperAlgebra& L);

struct Closure {
  Subspace space;
  /// Dimension after each growing round, then the final dimension once more.
  std::vector<Index> trace;
};

/// Subalgebra generated by `gens` (ungraded). Right-normed brackets
/// [g1,[g2,...]] are accumulated first; if they do not already fill L, the
/// span is completed by bracketing all pairs until no rank growth.
Closure closure(const SuperAlgebra& L, std::span<const SuperVector> gens);

/// Breadth-first closure over all pairs of spanning vectors, without the
/// right-normed shortcut.
Closure closure_pairwise(const SuperAlgebra& L, std::span<const SuperVector> gens);

/// Least subspace containing the seeds and stable under ad(a), a in `acting`.
Subspace module_closure(const SuperAlgebra& L, const Subspace& acting,
                        std::span<const SuperVector> seeds);
Subspace module_closure(const SuperAlgebra& L, const Subspace& acting, const SuperVector& seed);

/// Ideal generated by `gens`.
Subspace ideal_closure(const SuperAlgebra& L, std::span<const SuperVector> gens);

/// Weight vectors spanning an H-stable subspace, grouped by weight
/// (Cartan directions count as weight zero).
struct WeightVector {
  Weight weight;
  SuperVector vector;
  Index multiplicity = 0;  ///< dim of subspace intersected with the weight space
};
std::vector<WeightVector> weight_vectors(const SuperAlgebra& L, const Subspace& subspace);

/// Splits an `acting`-stable subspace into irreducible submodules, each the
/// module closure of a weight vector not yet covered.
std::vector<Subspace> module_components(const SuperAlgebra& L, const Subspace& subspace,
                                        const Subspace& acting);
/// Same, acting by the reductive part.
std::vector<Subspace> module_components(const SuperAlgebra& L, const Subspace& subspace);

/// Elements of span(indices) commuting with every basis vector in `indices`.
Subspace center_of(const SuperAlgebra& L, std::span<const Index> indices);

/// Center of the reductive part (even part, or L_0 for Cartan types).
Subspace even_center(const SuperAlgebra& L);

struct StructureCheckOptions {
  Index exhaustive_limit = 60;
  std::size_t sampled_triples = 10000;
  std::uint64_t seed = 0x5eed2009u;
};

struct StructureReport {
  bool parity_consistent = true;
  bool skew_symmetric = true;
  bool jacobi = true;
  bool cartan_eigenvectors = true;
  /// Set when the algebra carries Z-degrees.
  std::optional<bool> z_graded;
  bool jacobi_exhaustive = true;
  std::size_t jacobi_triples = 0;
  /// First failure, e.g. "jacobi (3, 7, 12)".
  std::optional<std::string> counterexample;

  bool ok() const { return parity_consistent && skew_symmetric && jacobi && cartan_eigenvectors; }
};

/// Super skew-symmetry on all pairs, super Jacobi on all triples i <= j <= k
/// (or seeded random triples above the exhaustive limit), and the Cartan
/// eigenvector invariant.
StructureReport check_structure(const SuperAlgebra& L, const StructureCheckOptions& options = {});

}  // namespace superlie
