#include <superlie/genpair.hpp>

#include <algorithm>
#include <array>

namespace superlie {

namespace {

constexpr std::array<std::pair<Recipe, std::string_view>, 11> kRecipeNames{{
    {Recipe::even_part, "even_part"},
    {Recipe::classical_case1, "classical_case1"},
    {Recipe::classical_2_1, "classical_2_1"},
    {Recipe::classical_2_1_Q, "classical_2_1_Q"},
    {Recipe::classical_2_2, "classical_2_2"},
    {Recipe::homogeneous, "homogeneous"},
    {Recipe::cartan_generic, "cartan_generic"},
    {Recipe::cartan_H6, "cartan_H6"},
    {Recipe::cartan_Hodd, "cartan_Hodd"},
    {Recipe::gl_variant, "gl_variant"},
    {Recipe::given, "given"},
}};

bool contains(const std::vector<Weight>& set, const Weight& w) {
  return std::find(set.begin(), set.end(), w) != set.end();
}

/// Lexicographically smallest weight of `candidates` passing `eligible`.
template <class Pred>
Weight smallest(const std::vector<Weight>& candidates, Pred eligible, const std::string& what) {
  std::vector<Weight> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& w : sorted)
    if (eligible(w)) return w;
  throw Error(Errc::ConstructionFailed, "no eligible weight for " + what);
}

Index vector_of(const RootTable& table, const Weight& w, std::span<const Index> allowed,
                const std::string& what) {
  const auto i = root_vector(table, w, allowed);
  if (!i) throw Error(Errc::ConstructionFailed, "no " + what + " vector of weight " + to_string(w));
  return *i;
}

GeneratorCertificate certify(const SuperAlgebra& L, Recipe recipe, const SuperVector& x,
                             const SuperVector& y, std::vector<Weight> chosen,
                             std::vector<std::pair<Weight, Scalar>> separator) {
  GeneratorCertificate c = verify_pair(L, x, y);
  c.recipe = recipe;
  c.chosen_weights = std::move(chosen);
  c.separator = std::move(separator);
  return c;
}

GeneratorCertificate require_generated(GeneratorCertificate c) {
  if (!c.generated())
    throw Error(Errc::ConstructionFailed, c.algebra + ": recipe " + recipe_name(c.recipe) +
                                              " generated a subalgebra of dimension " +
                                              std::to_string(c.final_dim) + " out of " +
                                              std::to_string(c.ambient_dim));
  return c;
}

SuperVector first_center_vector(const SuperAlgebra& L) {
  const Subspace center = even_center(L);
  return center.dim() ? center.rows().front() : SuperVector(SuperVector::Zero(L.dim()));
}

}  // namespace

std::string recipe_name(Recipe r) {
  for (const auto& [recipe, name] : kRecipeNames)
    if (recipe == r) return std::string(name);
  return "given";
}

Recipe parse_recipe(std::string_view name) {
  for (const auto& [recipe, n] : kRecipeNames)
    if (n == name) return recipe;
  throw Error(Errc::ParseError, "unknown recipe '" + std::string(name) + "'");
}

GeneratorCertificate verify_pair(const SuperAlgebra& L, const SuperVector& x, const SuperVector& y) {
  if (x.size() != L.dim() || y.size() != L.dim())
    throw Error(Errc::DimensionMismatch, "generators must have length " + std::to_string(L.dim()));
  GeneratorCertificate c;
  c.family = L.family();
  c.algebra = L.name();
  c.generators = {x, y};
  const Closure cl = closure(L, c.generators);
  c.trace = cl.trace;
  c.final_dim = cl.space.dim();
  c.ambient_dim = L.dim();
  return c;
}

GeneratorCertificate verify_certificate(const SuperAlgebra& L, const GeneratorCertificate& claimed) {
  GeneratorCertificate c;
  c.family = L.family();
  c.algebra = L.name();
  c.recipe = claimed.recipe;
  c.generators = claimed.generators;
  c.chosen_weights = claimed.chosen_weights;
  c.separator = claimed.separator;
  for (const auto& g : c.generators)
    if (g.size() != L.dim())
      throw Error(Errc::DimensionMismatch, "generators must have length " + std::to_string(L.dim()));
  const Closure cl = closure(L, c.generators);
  c.trace = cl.trace;
  c.final_dim = cl.space.dim();
  c.ambient_dim = claimed.recipe == Recipe::even_part
                      ? static_cast<Index>(reductive_indices(L).size())
                      : L.dim();
  return c;
}

EvenPair even_part_pair(const SuperAlgebra& L) {
  const RootTable table = weight_table(L);
  EvenPair p;
  p.x = balanced(L, table, BalanceMode::full);
  p.z = first_center_vector(L);
  std::vector<Weight> phi = table.reductive_roots;
  if (phi.empty()) phi.push_back(Weight(std::vector<Scalar>(static_cast<std::size_t>(L.rank()))));
  p.separator = find_separating(L, phi);
  p.y = p.separator.h + p.z;
  const std::vector<SuperVector> gens{p.x, p.y};
  p.closure = closure(L, gens);
  return p;
}

GeneratorCertificate classical_pair(const SuperAlgebra& L) {
  const auto* spec = std::get_if<FamilySpec>(&L.family());
  if (!spec || spec->family == ClassicalFamily::gl)
    throw Error(Errc::BadParameters, L.name() + " is not a simple classical superalgebra");
  const RootTable table = weight_table(L);
  const auto& even_roots = table.reductive_roots;
  const auto even = even_indices(L);
  const auto odd = odd_indices(L);
  const SuperVector x0 = balanced(L, table, BalanceMode::full);
  const Index center_dim = even_center(L).dim();

  auto odd_eligible = [&](const Weight& w) { return !w.is_zero() && !contains(even_roots, w); };
  std::vector<Weight> chosen;
  SuperVector x = x0;
  std::vector<Weight> phi = even_roots;
  Recipe recipe;

  const bool a_equal = spec->family == ClassicalFamily::A && spec->m == spec->n;
  if (spec->family == ClassicalFamily::C || (spec->family == ClassicalFamily::A && !a_equal) ||
      a_equal || spec->family == ClassicalFamily::P) {
    const bool case1 = !(a_equal || spec->family == ClassicalFamily::P);
    recipe = case1 ? Recipe::classical_case1 : Recipe::classical_2_2;
    if (center_dim != (case1 ? 1 : 0))
      throw Error(Errc::ConstructionFailed, L.name() + ": unexpected even center dimension");
    if (table.components.size() != 2)
      throw Error(Errc::ConstructionFailed, L.name() + ": odd part is not tagged with two components");
    const Weight a1 = smallest(table.components.at(1), odd_eligible, "component 1");
    const Weight a2 = smallest(
        table.components.at(2), [&](const Weight& w) { return odd_eligible(w) && !(w == a1); },
        "component 2");
    for (const auto& [tag, a] : {std::pair{1, a1}, std::pair{2, a2}}) {
      std::vector<Index> in_component;
      for (Index i : odd)
        if (L.component(i) == tag) in_component.push_back(i);
      x(vector_of(table, a, in_component, "odd")) += 1;
    }
    if (case1) x += first_center_vector(L);
    chosen = {a1, a2};
  } else if (spec->family == ClassicalFamily::Q) {
    recipe = Recipe::classical_2_1_Q;
    std::optional<Weight> alpha;
    for (std::size_t i = 0; i < table.simple.size() && !alpha; ++i)
      for (std::size_t j = i + 1; j < table.simple.size() && !alpha; ++j) {
        const Weight sum = table.simple[i] + table.simple[j];
        if (contains(even_roots, sum)) alpha = sum;
      }
    if (!alpha) throw Error(Errc::ConstructionFailed, "no pair of simple roots sums to a root");
    x(vector_of(table, *alpha, odd, "odd")) += 1;
    chosen = {*alpha};
  } else {
    recipe = Recipe::classical_2_1;
    const Weight a = smallest(table.odd_weights, odd_eligible, "the odd part");
    x(vector_of(table, a, odd, "odd")) += 1;
    chosen = {a};
    phi.push_back(a);
  }
  if (recipe != Recipe::classical_2_1_Q && recipe != Recipe::classical_2_1)
    phi.insert(phi.end(), chosen.begin(), chosen.end());

  const SeparatingElement h = find_separating(L, phi);
  return require_generated(certify(L, recipe, x, h.h, chosen, h.values));
}

GeneratorCertificate homogeneous_pair(const SuperAlgebra& L) {
  const RootTable table = weight_table(L);
  SuperVector x = SuperVector::Zero(L.dim());
  if (std::holds_alternative<CartanFamilySpec>(L.family())) {
    for (Index i : odd_indices(L)) x(i) = 1;
  } else {
    x = balanced(L, table, BalanceMode::odd);
  }
  const SeparatingElement h = find_separating(L, table.odd_weights);
  return certify(L, Recipe::homogeneous, x, h.h, {}, h.values);
}

GeneratorCertificate cartan_pair(const SuperAlgebra& L) {
  const auto* spec = std::get_if<CartanFamilySpec>(&L.family());
  if (!spec) throw Error(Errc::BadParameters, L.name() + " is not a Cartan superalgebra");
  const RootTable table = weight_table(L);
  const auto& pi = table.simple;
  SuperVector x = balanced(L, table, BalanceMode::simple);
  const auto minus_one = degree_indices(L, -1);
  auto weights_at = [&](int k) {
    const auto it = table.by_degree.find(k);
    return it == table.by_degree.end() ? std::vector<Weight>{} : it->second;
  };
  auto outside_pi = [&](const Weight& w) { return !w.is_zero() && !contains(pi, w); };

  std::vector<Weight> chosen;
  Recipe recipe = Recipe::cartan_generic;
  const bool odd_h = spec->family == CartanFamily::H && spec->n % 2 == 1;
  const bool h6 = spec->family == CartanFamily::H && spec->n == 6;
  if (h6) {
    recipe = Recipe::cartan_H6;
    const Weight a = smallest(weights_at(-1), outside_pi, "degree -1");
    x(vector_of(table, a, minus_one, "degree -1")) += 1;
    chosen.push_back(a);
    for (int tag : {1, 2}) {
      std::vector<Index> in_component;
      for (Index i : degree_indices(L, 1))
        if (L.component(i) == tag) in_component.push_back(i);
      const Weight b = smallest(
          table.components.at(tag),
          [&](const Weight& w) { return outside_pi(w) && !contains(chosen, w); },
          "degree 1 component");
      x(vector_of(table, b, in_component, "degree 1")) += 1;
      chosen.push_back(b);
    }
  } else {
    const int t = (spec->family == CartanFamily::W || spec->family == CartanFamily::S)
                      ? spec->height()
                      : 1;
    Weight a;
    if (odd_h) {
      recipe = Recipe::cartan_Hodd;
      a = Weight(std::vector<Scalar>(static_cast<std::size_t>(L.rank())));
    } else {
      a = smallest(weights_at(-1), outside_pi, "degree -1");
    }
    x(vector_of(table, a, minus_one, "degree -1")) += 1;
    const Weight b = smallest(
        weights_at(t), [&](const Weight& w) { return outside_pi(w) && !(w == a); },
        "degree " + std::to_string(t));
    x(vector_of(table, b, degree_indices(L, t), "degree " + std::to_string(t))) += 1;
    chosen = {a, b};
    if (spec->family == CartanFamily::W) x += first_center_vector(L);
  }
  std::vector<Weight> phi = pi;
  phi.insert(phi.end(), chosen.begin(), chosen.end());
  const SeparatingElement h = find_separating(L, phi);
  return require_generated(certify(L, recipe, x, h.h, chosen, h.values));
}

GeneratorCertificate gl_pair(const SuperAlgebra& L) {
  const auto* spec = std::get_if<FamilySpec>(&L.family());
  if (!spec || spec->family != ClassicalFamily::gl || spec->m == spec->n || spec->m == 0 ||
      spec->n == 0)
    throw Error(Errc::BadParameters, "gl pair needs gl(m|n) with m != n and m, n > 0");
  const Index m = spec->m, n = spec->n;
  const RootTable table = weight_table(L);
  const auto odd = odd_indices(L);
  SuperVector x = balanced(L, table, BalanceMode::full);
  auto eligible = [&](const Weight& w) { return !w.is_zero() && !contains(table.reductive_roots, w); };
  const Weight a1 = smallest(table.components.at(1), eligible, "component 1");
  const Weight a2 = smallest(
      table.components.at(2), [&](const Weight& w) { return eligible(w) && !(w == a1); },
      "component 2");
  for (const auto& [tag, a] : {std::pair{1, a1}, std::pair{2, a2}}) {
    std::vector<Index> in_component;
    for (Index i : odd)
      if (L.component(i) == tag) in_component.push_back(i);
    x(vector_of(table, a, in_component, "odd")) += 1;
  }
  // Cartan vector k is E_{k+1,k+1}; z = n I_m + m I_n is central with supertrace 0.
  for (Index k = 0; k < L.rank(); ++k) x(L.cartan()[static_cast<std::size_t>(k)]) += k < m ? n : m;

  std::vector<Weight> phi = table.reductive_roots;
  phi.push_back(a1);
  phi.push_back(a2);
  const SeparatingElement h = find_separating(L, phi);
  Scalar str(0);
  for (Index k = 0; k < L.rank(); ++k) str += k < m ? h.coeffs[k] : Scalar(-h.coeffs[k]);
  const Scalar shift = str / Scalar(m - n);
  SuperVector y = h.h;
  for (Index k = 0; k < L.rank(); ++k) y(L.cartan()[static_cast<std::size_t>(k)]) += 1 - shift;
  return require_generated(certify(L, Recipe::gl_variant, x, y, {a1, a2}, h.values));
}

GeneratorCertificate generator_pair(const SuperAlgebra& L) {
  if (const auto* spec = std::get_if<FamilySpec>(&L.family()))
    return spec->family == ClassicalFamily::gl ? gl_pair(L) : classical_pair(L);
  if (std::holds_alternative<CartanFamilySpec>(L.family())) return cartan_pair(L);
  throw Error(Errc::BadParameters, L.name() + " has no family to choose a recipe from");
}

GeneratorCertificate even_part_certificate(const SuperAlgebra& L) {
  const EvenPair p = even_part_pair(L);
  GeneratorCertificate c;
  c.family = L.family();
  c.algebra = L.name();
  c.recipe = Recipe::even_part;
  c.generators = {p.x, p.y};
  c.separator = p.separator.values;
  c.trace = p.closure.trace;
  c.final_dim = p.closure.space.dim();
  c.ambient_dim = static_cast<Index>(reductive_indices(L).size());
  return c;
}

}  // namespace superlie
