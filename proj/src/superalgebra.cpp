#include <superlie/superalgebra.hpp>

#include <algorithm>
#include <map>
#include <random>

namespace superlie {

SuperAlgebra::SuperAlgebra(SuperAlgebraParts parts) : parts_(std::move(parts)) {
  const std::size_t n = parts_.parity.size();
  auto require = [](bool cond, const std::string& what) {
    if (!cond) throw Error(Errc::DimensionMismatch, "SuperAlgebra: " + what);
  };
  require(parts_.labels.size() == n, "one label per basis vector");
  require(parts_.weights.size() == n, "one weight per basis vector");
  require(parts_.structure.size() == n * n, "structure table must be dim x dim");
  if (parts_.degree) require(parts_.degree->size() == n, "one degree per basis vector");
  if (parts_.component) require(parts_.component->size() == n, "one component per basis vector");
  for (const auto& w : parts_.weights)
    require(w.rank() == parts_.cartan.size(), "weights must have one value per Cartan vector");
  for (Index c : parts_.cartan) {
    require(c >= 0 && c < static_cast<Index>(n), "Cartan index out of range");
    require(parts_.parity[static_cast<std::size_t>(c)] == Parity::Even, "Cartan vectors are even");
  }
  for (const auto& entry : parts_.structure)
    for (const auto& t : entry)
      require(t.index >= 0 && t.index < static_cast<Index>(n) && t.coeff != 0,
              "structure terms must be nonzero and in range");
}

bool SuperAlgebra::is_cartan(Index i) const {
  return std::find(parts_.cartan.begin(), parts_.cartan.end(), i) != parts_.cartan.end();
}

SuperVector basis_vector(const SuperAlgebra& L, Index i) {
  SuperVector v = SuperVector::Zero(L.dim());
  v(i) = 1;
  return v;
}

namespace {

std::vector<Index> support(const SuperVector& v) {
  std::vector<Index> out;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) out.push_back(i);
  return out;
}

}  // namespace

SuperVector bracket(const SuperAlgebra& L, const SuperVector& x, const SuperVector& y) {
  if (x.size() != L.dim() || y.size() != L.dim())
    throw Error(Errc::DimensionMismatch, "bracket arguments must have length " +
                                             std::to_string(L.dim()));
  SuperVector out = SuperVector::Zero(L.dim());
  const auto sx = support(x);
  const auto sy = support(y);
  Scalar xy;
  for (Index i : sx)
    for (Index j : sy) {
      const auto terms = L.structure(i, j);
      if (terms.empty()) continue;
      xy = x(i) * y(j);
      for (const auto& t : terms) out(t.index) += xy * t.coeff;
    }
  return out;
}

Subspace span_of(const SuperAlgebra& L, std::span<const Index> indices) {
  Subspace s(L.dim());
  for (Index i : indices) s.insert(basis_vector(L, i));
  return s;
}

Subspace span_of(Index ambient, std::span<const SuperVector> vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

std::vector<Index> even_indices(const SuperAlgebra& L) {
  std::vector<Index> out;
  for (Index i = 0; i < L.dim(); ++i)
    if (!L.is_odd(i)) out.push_back(i);
  return out;
}

std::vector<Index> odd_indices(const SuperAlgebra& L) {
  std::vector<Index> out;
  for (Index i = 0; i < L.dim(); ++i)
    if (L.is_odd(i)) out.push_back(i);
  return out;
}

std::vector<Index> degree_indices(const SuperAlgebra& L, int k) {
  std::vector<Index> out;
  if (!L.has_degree()) return out;
  for (Index i = 0; i < L.dim(); ++i)
    if (L.degree(i) == k) out.push_back(i);
  return out;
}

std::vector<Index> reductive_indices(const SuperAlgebra& L) {
  return L.has_degree() ? degree_indices(L, 0) : even_indices(L);
}

namespace {

// Brackets every pair of spanning vectors (both orders: the vectors need not
// be homogeneous), appending whatever enlarges `space`.
void close_pairwise(const SuperAlgebra& L, Subspace& space, std::vector<SuperVector>& spanning,
                    std::vector<Index>& trace) {
  std::size_t done = 0;
  while (done < spanning.size() && space.dim() < L.dim()) {
    const std::size_t end = spanning.size();
    const Index before = space.dim();
    for (std::size_t i = done; i < end; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        if (auto r = space.insert(bracket(L, spanning[i], spanning[j]))) spanning.push_back(*r);
        if (j != i)
          if (auto r = space.insert(bracket(L, spanning[j], spanning[i]))) spanning.push_back(*r);
      }
    done = end;
    if (space.dim() > before) trace.push_back(space.dim());
  }
}

}  // namespace

Closure closure(const SuperAlgebra& L, std::span<const SuperVector> gens) {
  Closure out{Subspace(L.dim()), {}};
  std::vector<SuperVector> spanning;
  for (const auto& g : gens)
    if (auto r = out.space.insert(g)) spanning.push_back(*r);
  out.trace.push_back(out.space.dim());

  std::size_t frontier = 0;
  while (frontier < spanning.size()) {
    const std::size_t end = spanning.size();
    for (std::size_t i = frontier; i < end; ++i)
      for (const auto& g : gens)
        if (auto r = out.space.insert(bracket(L, g, spanning[i]))) spanning.push_back(*r);
    frontier = end;
    if (spanning.size() > end) out.trace.push_back(out.space.dim());
  }
  if (out.space.dim() < L.dim()) close_pairwise(L, out.space, spanning, out.trace);
  out.trace.push_back(out.space.dim());
  return out;
}

Closure closure_pairwise(const SuperAlgebra& L, std::span<const SuperVector> gens) {
  Closure out{Subspace(L.dim()), {}};
  std::vector<SuperVector> spanning;
  for (const auto& g : gens)
    if (auto r = out.space.insert(g)) spanning.push_back(*r);
  out.trace.push_back(out.space.dim());
  close_pairwise(L, out.space, spanning, out.trace);
  out.trace.push_back(out.space.dim());
  return out;
}

Subspace module_closure(const SuperAlgebra& L, const Subspace& acting,
                        std::span<const SuperVector> seeds) {
  Subspace space(L.dim());
  std::vector<SuperVector> spanning;
  for (const auto& s : seeds)
    if (auto r = space.insert(s)) spanning.push_back(*r);
  for (std::size_t i = 0; i < spanning.size(); ++i)
    for (const auto& a : acting.rows())
      if (auto r = space.insert(bracket(L, a, spanning[i]))) spanning.push_back(*r);
  return space;
}

Subspace module_closure(const SuperAlgebra& L, const Subspace& acting, const SuperVector& seed) {
  return module_closure(L, acting, std::span<const SuperVector>(&seed, 1));
}

Subspace ideal_closure(const SuperAlgebra& L, std::span<const SuperVector> gens) {
  std::vector<Index> all(static_cast<std::size_t>(L.dim()));
  for (Index i = 0; i < L.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
  return module_closure(L, span_of(L, all), gens);
}

std::vector<WeightVector> weight_vectors(const SuperAlgebra& L, const Subspace& subspace) {
  std::map<Weight, std::vector<Index>> groups;
  for (Index i = 0; i < L.dim(); ++i) groups[L.weight(i)].push_back(i);

  std::vector<WeightVector> out;
  for (const auto& [w, indices] : groups) {
    Subspace projected(L.dim());
    for (const auto& row : subspace.rows()) {
      SuperVector p = SuperVector::Zero(L.dim());
      for (Index i : indices) p(i) = row(i);
      projected.insert(p);
    }
    for (const auto& v : projected.rows()) {
      if (!subspace.contains(v))
        throw Error(Errc::NotAModule, "subspace is not stable under the Cartan subalgebra");
      out.push_back({w, v, projected.dim()});
    }
  }
  return out;
}

std::vector<Subspace> module_components(const SuperAlgebra& L, const Subspace& subspace,
                                        const Subspace& acting) {
  for (const auto& a : acting.rows())
    for (const auto& v : subspace.rows())
      if (!subspace.contains(bracket(L, a, v)))
        throw Error(Errc::NotAModule, "subspace is not stable under the acting algebra");

  auto candidates = weight_vectors(L, subspace);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const WeightVector& a, const WeightVector& b) {
                     return a.multiplicity < b.multiplicity;
                   });
  std::vector<std::optional<Subspace>> cache(candidates.size());

  std::vector<Subspace> components;
  Subspace covered(L.dim());
  while (covered.dim() < subspace.dim()) {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (covered.contains(candidates[c].vector)) continue;
      if (!cache[c]) cache[c] = module_closure(L, acting, candidates[c].vector);
      const Subspace& m = *cache[c];
      if (sum_dim(covered, m) != covered.dim() + m.dim()) continue;
      if (!best || m.dim() < cache[*best]->dim()) best = c;
    }
    if (!best) throw Error(Errc::NotAModule, "no weight vector splits off a complementary submodule");
    for (const auto& r : cache[*best]->rows()) covered.insert(r);
    components.push_back(*cache[*best]);
  }
  return components;
}

std::vector<Subspace> module_components(const SuperAlgebra& L, const Subspace& subspace) {
  const auto idx = reductive_indices(L);
  return module_components(L, subspace, span_of(L, idx));
}

Subspace center_of(const SuperAlgebra& L, std::span<const Index> indices) {
  const Index n = static_cast<Index>(indices.size());
  // Row (j, k): coefficient of b_k in [sum_i c_i b_i, b_j].
  ExactMatrix conditions = ExactMatrix::Zero(n * L.dim(), n);
  for (Index col = 0; col < n; ++col)
    for (Index jj = 0; jj < n; ++jj)
      for (const auto& t : L.structure(indices[static_cast<std::size_t>(col)],
                                       indices[static_cast<std::size_t>(jj)]))
        conditions(jj * L.dim() + t.index, col) += t.coeff;
  const ExactMatrix kernel = nullspace(conditions);
  Subspace out(L.dim());
  for (Index c = 0; c < kernel.cols(); ++c) {
    SuperVector v = SuperVector::Zero(L.dim());
    for (Index i = 0; i < n; ++i) v(indices[static_cast<std::size_t>(i)]) = kernel(i, c);
    out.insert(v);
  }
  return out;
}

Subspace even_center(const SuperAlgebra& L) {
  const auto idx = reductive_indices(L);
  return center_of(L, idx);
}

namespace {

struct Accumulator {
  explicit Accumulator(Index dim) : values(static_cast<std::size_t>(dim)) {}

  void add(Index k, const Scalar& c) {
    auto& v = values[static_cast<std::size_t>(k)];
    if (v == 0) touched.push_back(k);
    v += c;
  }
  std::optional<Index> first_nonzero() const {
    std::optional<Index> out;
    for (Index k : touched)
      if (values[static_cast<std::size_t>(k)] != 0 && (!out || k < *out)) out = k;
    return out;
  }
  void clear() {
    for (Index k : touched) values[static_cast<std::size_t>(k)] = 0;
    touched.clear();
  }

  std::vector<Scalar> values;
  std::vector<Index> touched;
};

// Adds sign * [b_a, [b_b, b_c]] into acc.
void add_nested(const SuperAlgebra& L, Index a, Index b, Index c, int sign, Accumulator& acc) {
  for (const auto& inner : L.structure(b, c))
    for (const auto& outer : L.structure(a, inner.index))
      acc.add(outer.index, sign > 0 ? Scalar(inner.coeff * outer.coeff)
                                    : Scalar(-(inner.coeff * outer.coeff)));
}

bool jacobi_holds(const SuperAlgebra& L, Index i, Index j, Index k, Accumulator& acc) {
  const Parity pi = L.parity(i), pj = L.parity(j), pk = L.parity(k);
  add_nested(L, i, j, k, sign_of_swap(pi, pk), acc);
  add_nested(L, j, k, i, sign_of_swap(pj, pi), acc);
  add_nested(L, k, i, j, sign_of_swap(pk, pj), acc);
  const bool ok = !acc.first_nonzero().has_value();
  acc.clear();
  return ok;
}

std::string triple(Index i, Index j, Index k) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

}  // namespace

StructureReport check_structure(const SuperAlgebra& L, const StructureCheckOptions& options) {
  StructureReport report;
  const Index n = L.dim();
  auto fail = [&](const std::string& what) {
    if (!report.counterexample) report.counterexample = what;
  };

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& t : L.structure(i, j))
        if (L.parity(t.index) != L.parity(i) + L.parity(j)) {
          if (report.parity_consistent) fail("parity " + triple(i, j, t.index));
          report.parity_consistent = false;
        }

  // [b_i, b_j] = -(-1)^{|i||j|} [b_j, b_i]
  for (Index i = 0; i < n && report.skew_symmetric; ++i)
    for (Index j = i; j < n; ++j) {
      const int s = -sign_of_swap(L.parity(i), L.parity(j));
      std::map<Index, Scalar> lhs, rhs;
      for (const auto& t : L.structure(i, j)) lhs[t.index] += t.coeff;
      for (const auto& t : L.structure(j, i)) rhs[t.index] += s > 0 ? t.coeff : Scalar(-t.coeff);
      if (lhs != rhs) {
        report.skew_symmetric = false;
        fail("skew-symmetry (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        break;
      }
    }

  Accumulator acc(n);
  if (n <= options.exhaustive_limit) {
    report.jacobi_exhaustive = true;
    for (Index i = 0; i < n && report.jacobi; ++i)
      for (Index j = i; j < n && report.jacobi; ++j)
        for (Index k = j; k < n; ++k) {
          ++report.jacobi_triples;
          if (!jacobi_holds(L, i, j, k, acc)) {
            report.jacobi = false;
            fail("jacobi " + triple(i, j, k));
            break;
          }
        }
  } else {
    report.jacobi_exhaustive = false;
    std::mt19937_64 rng(options.seed);
    const auto un = static_cast<std::uint64_t>(n);
    for (std::size_t s = 0; s < options.sampled_triples; ++s) {
      const auto i = static_cast<Index>(rng() % un);
      const auto j = static_cast<Index>(rng() % un);
      const auto k = static_cast<Index>(rng() % un);
      ++report.jacobi_triples;
      if (!jacobi_holds(L, i, j, k, acc)) {
        report.jacobi = false;
        fail("jacobi " + triple(i, j, k));
        break;
      }
    }
  }

  for (std::size_t c = 0; c < L.cartan().size() && report.cartan_eigenvectors; ++c) {
    const Index h = L.cartan()[c];
    for (Index i = 0; i < n; ++i) {
      const auto terms = L.structure(h, i);
      const Scalar& lambda = L.weight(i).values[c];
      const bool ok = lambda == 0 ? terms.empty()
                                  : (terms.size() == 1 && terms[0].index == i &&
                                     terms[0].coeff == lambda);
      if (!ok) {
        report.cartan_eigenvectors = false;
        fail("cartan eigenvector (" + std::to_string(h) + ", " + std::to_string(i) + ")");
        break;
      }
    }
  }

  if (L.has_degree()) {
    bool graded = true;
    for (Index i = 0; i < n && graded; ++i)
      for (Index j = 0; j < n && graded; ++j)
        for (const auto& t : L.structure(i, j))
          if (L.degree(t.index) != L.degree(i) + L.degree(j)) {
            graded = false;
            break;
          }
    report.z_graded = graded;
  }
  return report;
}

}  // namespace superlie
