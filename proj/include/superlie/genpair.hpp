#pragma once

#include <superlie/rootsys.hpp>
#include <superlie/superalgebra.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superlie {

enum class Recipe {
  even_part,
  classical_case1,
  classical_2_1,
  classical_2_1_Q,
  classical_2_2,
  homogeneous,
  cartan_generic,
  cartan_H6,
  cartan_Hodd,
  gl_variant,
  given,
};

std::string recipe_name(Recipe r);
Recipe parse_recipe(std::string_view name);

struct GeneratorCertificate {
  AlgebraFamily family;
  std::string algebra;
  Recipe recipe = Recipe::given;
  std::vector<SuperVector> generators;
  /// Weights the construction picked (odd weights, alpha_{-1}, alpha_t, ...).
  std::vector<Weight> chosen_weights;
  /// gamma(h) for each gamma in the separated set.
  std::vector<std::pair<Weight, Scalar>> separator;
  std::vector<Index> trace;
  Index final_dim = 0;
  Index ambient_dim = 0;

  bool generated() const { return final_dim == ambient_dim; }
};

/// Closure of {x, y}; verdict generated iff it is all of L.
GeneratorCertificate verify_pair(const SuperAlgebra& L, const SuperVector& x, const SuperVector& y);

/// Recomputes the closure of the certificate's generators. The target is all
/// of L, or the reductive part for the even_part recipe.
GeneratorCertificate verify_certificate(const SuperAlgebra& L, const GeneratorCertificate& claimed);

struct EvenPair {
  SuperVector x;
  SuperVector y;
  SeparatingElement separator;
  /// Spanning element of the center of the reductive part, or zero.
  SuperVector z;
  Closure closure;
};

/// x = full-balanced element of the semisimple part, y = h + z with h
/// separating the reductive roots and z central in the reductive part.
EvenPair even_part_pair(const SuperAlgebra& L);

/// Throws Error(ConstructionFailed) if the closure is not L.
GeneratorCertificate classical_pair(const SuperAlgebra& L);

/// Odd Delta_1bar-balanced x and even h separating the odd weights.
/// Throws Error(OddSpacesNotOneDim) for classical algebras with a
/// multi-dimensional odd weight space.
GeneratorCertificate homogeneous_pair(const SuperAlgebra& L);

GeneratorCertificate cartan_pair(const SuperAlgebra& L);

/// gl(m|n), m != n: the classical pair of sl(m|n) with the identity added to
/// the separating element.
GeneratorCertificate gl_pair(const SuperAlgebra& L);

/// Dispatches on the family of L.
GeneratorCertificate generator_pair(const SuperAlgebra& L);

/// even_part_pair packaged as a certificate whose target is the reductive part.
GeneratorCertificate even_part_certificate(const SuperAlgebra& L);

}  // namespace superlie
