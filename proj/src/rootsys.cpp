#include <superlie/rootsys.hpp>

#include <algorithm>
#include <set>

namespace superlie {

namespace {

std::vector<Weight> sorted_unique(std::vector<Weight> w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

Scalar value_at(const Weight& w, const std::vector<int>& c) {
  Scalar s(0);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) s += w.values[k] * c[k];
  return s;
}

std::vector<Scalar> cartan_coefficients(const SuperAlgebra& L, const SuperVector& a) {
  std::vector<Scalar> coeffs;
  for (Index h : L.cartan()) coeffs.push_back(a(h));
  SuperVector rest = a;
  for (Index h : L.cartan()) rest(h) = 0;
  if (!is_zero(rest))
    throw Error(Errc::NotSemisimpleAction, "element is not in the Cartan subalgebra");
  return coeffs;
}

Scalar value_at(const Weight& w, const std::vector<Scalar>& c) {
  Scalar s(0);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) s += w.values[k] * c[k];
  return s;
}

}  // namespace

const std::vector<Index>& RootTable::space(const Weight& gamma) const {
  static const std::vector<Index> empty;
  const auto it = spaces.find(gamma);
  return it == spaces.end() ? empty : it->second;
}

bool RootTable::contains(const std::vector<Weight>& set, const Weight& gamma) const {
  return std::binary_search(set.begin(), set.end(), gamma);
}

RootTable weight_table(const SuperAlgebra& L) {
  RootTable t;
  for (std::size_t c = 0; c < L.cartan().size(); ++c) {
    const Index h = L.cartan()[c];
    for (Index i = 0; i < L.dim(); ++i) {
      const auto terms = L.structure(h, i);
      const Scalar& lambda = L.weight(i).values[c];
      const bool ok = lambda == 0 ? terms.empty()
                                  : (terms.size() == 1 && terms[0].index == i &&
                                     terms[0].coeff == lambda);
      if (!ok)
        throw Error(Errc::NotDiagonal, L.label(i) + " is not an eigenvector of " + L.label(h) +
                                           " with its stored weight");
    }
  }

  const auto reductive = reductive_indices(L);
  const std::set<Index> reductive_set(reductive.begin(), reductive.end());
  for (Index i = 0; i < L.dim(); ++i) {
    if (L.is_cartan(i)) continue;
    const Weight& w = L.weight(i);
    t.spaces[w].push_back(i);
    (L.is_odd(i) ? t.odd_weights : t.even_roots).push_back(w);
    if (reductive_set.count(i) && !w.is_zero()) t.reductive_roots.push_back(w);
    if (L.has_degree()) t.by_degree[L.degree(i)].push_back(w);
    if (L.is_odd(i) && L.component(i) != 0) t.components[L.component(i)].push_back(w);
  }
  t.even_roots = sorted_unique(std::move(t.even_roots));
  t.odd_weights = sorted_unique(std::move(t.odd_weights));
  t.reductive_roots = sorted_unique(std::move(t.reductive_roots));
  for (auto& [k, w] : t.by_degree) w = sorted_unique(std::move(w));
  for (auto& [k, w] : t.components) w = sorted_unique(std::move(w));
  t.simple = simple_roots(t);
  return t;
}

void coefficient_tuples(std::size_t length,
                        const std::function<bool(const std::vector<int>&)>& visit, int max_level) {
  for (int level = 1; level <= max_level; ++level) {
    std::vector<int> c(length, level);
    while (true) {
      const bool at_level = std::any_of(c.begin(), c.end(), [&](int v) { return std::abs(v) == level; });
      if (at_level && visit(c)) return;
      // Next tuple in descending lexicographic order.
      std::size_t k = length;
      while (k > 0 && c[k - 1] == -level) --k;
      if (k == 0) break;
      --c[k - 1];
      for (std::size_t j = k; j < length; ++j) c[j] = level;
    }
  }
  throw Error(Errc::NotRegularizable, "no suitable integer functional up to height " +
                                          std::to_string(max_level));
}

std::vector<Weight> simple_roots(std::span<const Weight> roots) {
  std::vector<Weight> nonzero;
  for (const auto& r : roots)
    if (!r.is_zero()) nonzero.push_back(r);
  if (nonzero.empty()) return {};
  const std::size_t rank = nonzero.front().rank();
  std::vector<int> regular;
  coefficient_tuples(rank, [&](const std::vector<int>& c) {
    for (const auto& r : nonzero)
      if (value_at(r, c) == 0) return false;
    regular = c;
    return true;
  });
  std::vector<Weight> positive;
  for (const auto& r : nonzero)
    if (value_at(r, regular) > 0) positive.push_back(r);
  const std::set<Weight> positive_set(positive.begin(), positive.end());
  std::vector<Weight> simple;
  for (const auto& r : positive) {
    bool decomposable = false;
    for (const auto& a : positive) {
      Weight rest = r + (-a);
      if (positive_set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  std::sort(simple.begin(), simple.end(), [](const Weight& a, const Weight& b) { return b < a; });
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
  return simple;
}

std::vector<Weight> simple_roots(const RootTable& table) { return simple_roots(table.reductive_roots); }

bool is_separating(const SuperAlgebra& L, const SuperVector& h, std::span<const Weight> phi) {
  const auto coeffs = cartan_coefficients(L, h);
  std::set<Scalar> seen{Scalar(0)};
  std::set<Weight> distinct(phi.begin(), phi.end());
  for (const auto& w : distinct) {
    if (w.is_zero()) continue;
    if (!seen.insert(value_at(w, coeffs)).second) return false;
  }
  return true;
}

SeparatingElement find_separating(const SuperAlgebra& L, std::span<const Weight> phi) {
  if (phi.empty()) throw Error(Errc::BadParameters, "separator target set is empty");
  std::set<Weight> distinct(phi.begin(), phi.end());
  SeparatingElement out;
  coefficient_tuples(static_cast<std::size_t>(L.rank()), [&](const std::vector<int>& c) {
    std::set<Scalar> seen{Scalar(0)};
    for (const auto& w : distinct)
      if (!w.is_zero() && !seen.insert(value_at(w, c)).second) return false;
    out.coeffs.assign(c.begin(), c.end());
    return true;
  });
  out.h = SuperVector::Zero(L.dim());
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.h(L.cartan()[k]) = out.coeffs[k];
  for (const auto& w : phi) out.values.emplace_back(w, value_at(w, out.coeffs));
  return out;
}

std::vector<std::pair<Scalar, SuperVector>> split_by_ad(const SuperAlgebra& L, const SuperVector& a,
                                                        const SuperVector& x) {
  if (a.size() != L.dim() || x.size() != L.dim())
    throw Error(Errc::DimensionMismatch, "split_by_ad arguments must have length " +
                                             std::to_string(L.dim()));
  const auto coeffs = cartan_coefficients(L, a);
  std::set<Scalar> eigen;
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) eigen.insert(value_at(L.weight(i), coeffs));
  const std::vector<Scalar> nodes(eigen.begin(), eigen.end());

  std::vector<SuperVector> krylov{x};
  for (std::size_t k = 1; k <= nodes.size(); ++k) krylov.push_back(bracket(L, a, krylov.back()));
  const SuperVector closing = krylov.back();
  krylov.pop_back();
  const auto parts = solve_vandermonde(nodes, krylov);

  std::vector<std::pair<Scalar, SuperVector>> out;
  SuperVector total = SuperVector::Zero(L.dim());
  SuperVector power_sum = SuperVector::Zero(L.dim());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (bracket(L, a, parts[k]) != nodes[k] * parts[k])
      throw Error(Errc::NotSemisimpleAction, "component is not an ad-eigenvector");
    total += parts[k];
    Scalar p(1);
    for (std::size_t e = 0; e < nodes.size(); ++e) p *= nodes[k];
    power_sum += p * parts[k];
    out.emplace_back(nodes[k], parts[k]);
  }
  if (total != x || power_sum != closing)
    throw Error(Errc::NotSemisimpleAction, "iterates do not close on the eigenvalue set");
  return out;
}

std::map<Weight, SuperVector> weight_projections(const SuperAlgebra& L, const SuperVector& x) {
  std::map<Weight, SuperVector> out;
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) continue;
    auto [it, inserted] = out.try_emplace(L.weight(i), SuperVector::Zero(L.dim()));
    it->second(i) = x(i);
  }
  return out;
}

std::optional<Index> root_vector(const RootTable& table, const Weight& gamma,
                                 std::span<const Index> allowed) {
  for (Index i : table.space(gamma))
    if (std::find(allowed.begin(), allowed.end(), i) != allowed.end()) return i;
  return std::nullopt;
}

SuperVector balanced(const SuperAlgebra& L, BalanceMode mode) {
  return balanced(L, weight_table(L), mode);
}

SuperVector balanced(const SuperAlgebra& L, const RootTable& table, BalanceMode mode) {
  SuperVector x = SuperVector::Zero(L.dim());
  if (mode == BalanceMode::odd) {
    for (const auto& gamma : table.odd_weights) {
      std::vector<Index> odd;
      for (Index i : table.space(gamma))
        if (L.is_odd(i)) odd.push_back(i);
      if (odd.size() != 1)
        throw Error(Errc::OddSpacesNotOneDim, L.name() + ": odd weight space " + to_string(gamma) +
                                                  " has dimension " + std::to_string(odd.size()));
      x(odd.front()) += 1;
    }
    return x;
  }
  const auto reductive = reductive_indices(L);
  const auto& weights = mode == BalanceMode::full ? table.reductive_roots : table.simple;
  for (const auto& gamma : weights) {
    const auto i = root_vector(table, gamma, reductive);
    if (!i) throw Error(Errc::ConstructionFailed, "no root vector for " + to_string(gamma));
    x(*i) += 1;
  }
  return x;
}

std::vector<Weight> multidimensional_weights(const RootTable& table) {
  std::vector<Weight> out;
  for (const auto& [gamma, indices] : table.spaces)
    if (!gamma.is_zero() && indices.size() > 1) out.push_back(gamma);
  return out;
}

}  // namespace superlie
