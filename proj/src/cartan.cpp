#include <superlie/cartan.hpp>
#include <superlie/table_builder.hpp>

#include <algorithm>

namespace superlie {

namespace {

std::vector<int> indices_of(Monomial u) {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (u.contains(i)) out.push_back(i);
  return out;
}

/// Monomials of size k in lexicographic order of their index sequences.
std::vector<Monomial> monomials_of_size(int n, int k) {
  std::vector<Monomial> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    if (std::popcount(mask) == k) out.push_back(Monomial{mask});
  std::sort(out.begin(), out.end(),
            [](Monomial a, Monomial b) { return indices_of(a) < indices_of(b); });
  return out;
}

SparseVector to_sparse(const Superderivation& d) {
  SparseVector out;
  for (const auto& [t, c] : d.terms) out.emplace(w_index(d.arity, t), c);
  return out;
}

Superderivation euler_term(int n, int i) { return derivation_term(n, monomial({i}), i); }

struct Element {
  Superderivation d;
  int degree;
};

std::vector<Element> candidates(const CartanFamilySpec& spec) {
  const int n = spec.n;
  std::vector<Element> out;
  auto seed_cartan = [&] {
    for (const auto& h : cartan_basis(spec)) out.push_back({h, 0});
  };
  switch (spec.family) {
    case CartanFamily::W:
      for (int k = 0; k <= n; ++k) {
        if (k == 1) seed_cartan();
        for (Monomial u : monomials_of_size(n, k))
          for (int i = 1; i <= n; ++i) out.push_back({derivation_term(n, u, i), k - 1});
      }
      break;
    case CartanFamily::S:
    case CartanFamily::Stilde: {
      const bool tilde = spec.family == CartanFamily::Stilde;
      if (tilde) {
        const Monomial top{(1u << n) - 1};
        for (int j = 1; j <= n; ++j)
          out.push_back({derivation_term(n, Monomial{}, j) + derivation_term(n, top, j), -1});
      }
      for (int k = tilde ? 2 : 1; k <= n; ++k) {
        if (k == 2) seed_cartan();
        for (Monomial u : monomials_of_size(n, k))
          for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
              out.push_back({d_ij(i, j, monomial_element(n, u)), k - 2});
      }
      break;
    }
    case CartanFamily::H: {
      const auto inv = hamiltonian_involution(n);
      for (int k = 1; k < n; ++k) {
        if (k == 2) seed_cartan();
        for (Monomial u : monomials_of_size(n, k)) out.push_back({d_h(n, u, inv), k - 2});
      }
      break;
    }
  }
  return out;
}

CartanModel assemble(const CartanFamilySpec& spec, std::vector<Element> elements,
                     std::optional<std::vector<int>> component) {
  CartanModel model{spec, SuperAlgebra(SuperAlgebraParts{}), {}};
  TableInput in;
  in.name = algebra_name(spec);
  in.family = spec;
  std::vector<int> degree;
  const auto cartan = cartan_basis(spec);
  const std::size_t rank = cartan.size();
  std::size_t seen_cartan = 0;
  for (auto& e : elements) {
    if (seen_cartan < rank && e.d == cartan[seen_cartan]) {
      in.cartan.push_back(static_cast<Index>(model.basis.size()));
      ++seen_cartan;
    }
    in.parity.push_back(e.d.parity() == 1 ? Parity::Odd : Parity::Even);
    in.labels.push_back(to_string(e.d));
    in.basis.push_back(to_sparse(e.d));
    degree.push_back(e.degree);
    model.basis.push_back(std::move(e.d));
  }
  if (seen_cartan != rank)
    throw Error(Errc::ConstructionFailed, in.name + ": Cartan vectors missing from the basis");
  in.degree = std::move(degree);
  in.component = std::move(component);
  in.bracket = [&](Index i, Index j) {
    return to_sparse(sd_bracket(model.basis[static_cast<std::size_t>(i)],
                                model.basis[static_cast<std::size_t>(j)]));
  };
  model.algebra = build_table(in);
  return model;
}

}  // namespace

std::vector<Superderivation> cartan_basis(const CartanFamilySpec& spec) {
  validate(spec);
  const int n = spec.n;
  std::vector<Superderivation> out;
  switch (spec.family) {
    case CartanFamily::W:
      for (int i = 1; i <= n; ++i) out.push_back(euler_term(n, i));
      break;
    case CartanFamily::S:
    case CartanFamily::Stilde:
      for (int j = 2; j <= n; ++j) out.push_back(euler_term(n, 1) - euler_term(n, j));
      break;
    case CartanFamily::H:
      for (int i = 1; i <= n / 2; ++i) out.push_back(euler_term(n, i) - euler_term(n, i + n / 2));
      break;
  }
  return out;
}

SuperVector CartanModel::coordinates(const Superderivation& d) const {
  if (d.arity != spec.n) throw Error(Errc::DimensionMismatch, "derivation has the wrong arity");
  std::vector<SparseVector> b;
  for (const auto& e : basis) b.push_back(to_sparse(e));
  const auto coords = CoordinateSolver(b, {}).solve(to_sparse(d));
  if (!coords) throw Error(Errc::DimensionMismatch, to_string(d) + " is not in " + algebra.name());
  SuperVector v = SuperVector::Zero(algebra.dim());
  for (const auto& [k, c] : *coords) v(k) = c;
  return v;
}

Superderivation CartanModel::derivation(const SuperVector& v) const {
  if (v.size() != algebra.dim())
    throw Error(Errc::DimensionMismatch, "coordinate vector has wrong length");
  Superderivation out{spec.n, {}};
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out += v(i) * basis[static_cast<std::size_t>(i)];
  return out;
}

Weight CartanModel::weight_of(std::span<const Scalar> eps) const {
  if (static_cast<int>(eps.size()) != spec.n)
    throw Error(Errc::DimensionMismatch, "functional needs " + std::to_string(spec.n) + " values");
  Weight w;
  for (Index h : algebra.cartan()) {
    Scalar s(0);
    for (const auto& [t, c] : basis[static_cast<std::size_t>(h)].terms)
      s += c * eps[static_cast<std::size_t>(t.target - 1)];
    w.values.push_back(s);
  }
  return w;
}

Weight CartanModel::weight_of(std::initializer_list<int> eps) const {
  std::vector<Scalar> values(eps.begin(), eps.end());
  return weight_of(std::span<const Scalar>(values));
}

CartanModel cartan_model(const CartanFamilySpec& spec) {
  validate(spec);
  const auto all = candidates(spec);
  const Index ambient = static_cast<Index>(spec.n) << spec.n;
  Subspace span(ambient);
  std::vector<Element> chosen;
  for (const auto& e : all) {
    if (e.d.is_zero()) continue;
    SuperVector v = SuperVector::Zero(ambient);
    for (const auto& [t, c] : e.d.terms) v(w_index(spec.n, t)) = c;
    if (span.insert(v)) chosen.push_back(e);
  }
  CartanModel model = assemble(spec, chosen, std::nullopt);
  if (!(spec.family == CartanFamily::H && spec.n == 6)) return model;

  // H(6)_1 is the sum of two irreducible L_0-modules; rebuild its basis from
  // weight vectors of each component.
  const SuperAlgebra& L = model.algebra;
  const auto degree_one = degree_indices(L, 1);
  const auto components = module_components(L, span_of(L, degree_one));
  std::vector<Element> ordered;
  std::vector<int> tags;
  auto take_degrees = [&](auto keep) {
    for (Index i = 0; i < L.dim(); ++i)
      if (keep(L.degree(i))) {
        ordered.push_back({model.basis[static_cast<std::size_t>(i)], L.degree(i)});
        tags.push_back(0);
      }
  };
  take_degrees([](int k) { return k < 1; });
  for (std::size_t c = 0; c < components.size(); ++c)
    for (const auto& wv : weight_vectors(L, components[c])) {
      ordered.push_back({model.derivation(wv.vector), 1});
      tags.push_back(static_cast<int>(c) + 1);
    }
  take_degrees([](int k) { return k > 1; });
  return assemble(spec, ordered, tags);
}

SuperAlgebra build_cartan(const CartanFamilySpec& spec) { return cartan_model(spec).algebra; }

}  // namespace superlie
