#pragma once

#include <superlie/superalgebra.hpp>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace superlie {

/// Weight-space decomposition of L relative to its stored Cartan basis.
struct RootTable {
  /// Non-Cartan basis indices grouped by weight (the weight spaces L^gamma).
  std::map<Weight, std::vector<Index>> spaces;
  /// Weights of even / odd non-Cartan basis vectors.
  std::vector<Weight> even_roots;
  std::vector<Weight> odd_weights;
  /// Nonzero weights of the reductive part: Delta_0bar, or Delta_0 when Z-graded.
  std::vector<Weight> reductive_roots;
  /// Delta_k for each Z-degree k.
  std::map<int, std::vector<Weight>> by_degree;
  /// Odd weights of each tagged component.
  std::map<int, std::vector<Weight>> components;
  /// Simple roots of the reductive part.
  std::vector<Weight> simple;

  /// Basis indices of L^gamma (empty when gamma is not a weight).
  const std::vector<Index>& space(const Weight& gamma) const;
  bool contains(const std::vector<Weight>& set, const Weight& gamma) const;
};

/// Throws Error(NotDiagonal) if a basis vector is not a Cartan eigenvector.
RootTable weight_table(const SuperAlgebra& L);

/// Simple roots of a reduced root system, by the first regular integer
/// functional in the search order of `coefficient_tuples`.
std::vector<Weight> simple_roots(std::span<const Weight> roots);
std::vector<Weight> simple_roots(const RootTable& table);

/// Calls visit(tuple) on the integer tuples of the given length with
/// max |c_k| = 1, 2, ..., each level in descending lexicographic order, until
/// visit returns true. Throws Error(NotRegularizable) after `max_level`.
void coefficient_tuples(std::size_t length, const std::function<bool(const std::vector<int>&)>& visit,
                        int max_level = 64);

struct SeparatingElement {
  SuperVector h;
  /// Coordinates of h on the Cartan basis.
  std::vector<Scalar> coeffs;
  std::vector<std::pair<Weight, Scalar>> values;
};

/// True when gamma(h) is nonzero for every nonzero gamma in phi and the values
/// are pairwise distinct.
bool is_separating(const SuperAlgebra& L, const SuperVector& h, std::span<const Weight> phi);

/// Deterministic search for h in the Cartan span separating phi and 0.
/// Throws Error(BadParameters) when phi is empty.
SeparatingElement find_separating(const SuperAlgebra& L, std::span<const Weight> phi);

/// Eigencomponents of x under ad(a) for a in the Cartan span, extracted from
/// (ad a)^k x by a Vandermonde solve. Eigenvalues ascending.
/// Throws Error(NotSemisimpleAction) when a is outside the Cartan span.
std::vector<std::pair<Scalar, SuperVector>> split_by_ad(const SuperAlgebra& L, const SuperVector& a,
                                                        const SuperVector& x);

/// Projection of x onto each weight space (Cartan directions at weight 0).
std::map<Weight, SuperVector> weight_projections(const SuperAlgebra& L, const SuperVector& x);

enum class BalanceMode { full, simple, odd };

/// Coefficient-1 sum of one root vector per weight: every reductive root
/// (full), every simple root (simple) or every odd weight (odd).
/// mode odd throws Error(OddSpacesNotOneDim) if an odd weight space is not
/// one-dimensional.
SuperVector balanced(const SuperAlgebra& L, BalanceMode mode);
SuperVector balanced(const SuperAlgebra& L, const RootTable& table, BalanceMode mode);

/// First basis index of weight gamma among `allowed`, if any.
std::optional<Index> root_vector(const RootTable& table, const Weight& gamma,
                                 std::span<const Index> allowed);

/// Weights gamma != 0 with dim L^gamma > 1 (even and odd parts together).
std::vector<Weight> multidimensional_weights(const RootTable& table);

}  // namespace superlie
