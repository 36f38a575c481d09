#include <superlie/classical.hpp>
#include <superlie/table_builder.hpp>

#include <algorithm>
#include <map>
#include <tuple>

namespace superlie {

Scalar supertrace(const ExactMatrix& x, Index p) {
  if (x.rows() != x.cols() || p < 0 || p > x.rows())
    throw Error(Errc::ShapeMismatch, "supertrace needs a square matrix with an upper block of size " +
                                         std::to_string(p));
  Scalar out(0);
  for (Index a = 0; a < x.rows(); ++a) out += a < p ? x(a, a) : Scalar(-x(a, a));
  return out;
}

ExactMatrix matrix_unit(Index n, Index i, Index j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw Error(Errc::IndexOutOfRange, "matrix unit index out of range");
  ExactMatrix e = ExactMatrix::Zero(n, n);
  e(i - 1, j - 1) = 1;
  return e;
}

namespace {

struct Realization {
  Index p = 0;
  Index q = 0;
  std::vector<SparseVector> constraints;
  std::vector<ExactMatrix> cartan;
  std::optional<ExactMatrix> modulus;
};

SparseVector to_sparse(const ExactMatrix& x) {
  SparseVector out;
  for (Index a = 0; a < x.rows(); ++a)
    for (Index b = 0; b < x.cols(); ++b)
      if (x(a, b) != 0) out.emplace(a * x.cols() + b, x(a, b));
  return out;
}

ExactMatrix diagonal(Index n, const std::vector<std::pair<Index, int>>& entries) {
  ExactMatrix d = ExactMatrix::Zero(n, n);
  for (const auto& [k, c] : entries) d(k, k) += c;
  return d;
}

// X^st G + G X = 0 with st([[A,B],[C,D]]) = [[A^T, C^T], [-B^T, D^T]].
std::vector<SparseVector> form_constraints(const ExactMatrix& g, Index p) {
  const Index n = g.rows();
  auto st_sign = [p](Index a, Index b) { return (a >= p && b < p) ? -1 : 1; };
  std::vector<SparseVector> out;
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) {
      SparseVector row;
      for (Index k = 0; k < n; ++k) {
        if (g(k, c) != 0) axpy(row, Scalar(st_sign(r, k)) * g(k, c), {{k * n + r, Scalar(1)}});
        if (g(r, k) != 0) axpy(row, g(r, k), {{k * n + c, Scalar(1)}});
      }
      if (!row.empty()) out.push_back(std::move(row));
    }
  return out;
}

Realization orthosymplectic(Index orth, Index symp_half) {
  Realization r;
  r.p = orth;
  r.q = 2 * symp_half;
  const Index n = r.p + r.q;
  ExactMatrix g = ExactMatrix::Zero(n, n);
  for (Index a = 0; a < orth; ++a) g(a, orth - 1 - a) = 1;
  for (Index j = 0; j < symp_half; ++j) {
    g(orth + j, orth + 2 * symp_half - 1 - j) = 1;
    g(orth + symp_half + j, orth + symp_half - 1 - j) = -1;
  }
  r.constraints = form_constraints(g, r.p);
  for (Index a = 0; a < orth / 2; ++a) r.cartan.push_back(diagonal(n, {{a, 1}, {orth - 1 - a, -1}}));
  for (Index j = 0; j < symp_half; ++j)
    r.cartan.push_back(diagonal(n, {{orth + j, 1}, {orth + 2 * symp_half - 1 - j, -1}}));
  return r;
}

Realization realize(const FamilySpec& spec) {
  Realization r;
  const Index m = spec.m, n = spec.n;
  switch (spec.family) {
    case ClassicalFamily::gl: {
      r.p = m;
      r.q = n;
      for (Index a = 0; a < m + n; ++a) r.cartan.push_back(diagonal(m + n, {{a, 1}}));
      return r;
    }
    case ClassicalFamily::A: {
      r.p = m + 1;
      r.q = n + 1;
      const Index size = r.p + r.q;
      SparseVector str;
      for (Index a = 0; a < size; ++a) str.emplace(a * size + a, a < r.p ? 1 : -1);
      r.constraints.push_back(str);
      for (Index a = 0; a + 1 < size; ++a) {
        if (a + 1 != r.p)
          r.cartan.push_back(diagonal(size, {{a, 1}, {a + 1, -1}}));
        else if (m != n)
          r.cartan.push_back(diagonal(size, {{a, 1}, {a + 1, 1}}));
      }
      if (m == n) r.modulus = ExactMatrix::Identity(size, size);
      return r;
    }
    case ClassicalFamily::B: return orthosymplectic(2 * m + 1, n);
    case ClassicalFamily::D: return orthosymplectic(2 * m, n);
    case ClassicalFamily::C: return orthosymplectic(2, n - 1);
    case ClassicalFamily::P:
    case ClassicalFamily::Q: {
      const bool is_p = spec.family == ClassicalFamily::P;
      r.p = r.q = n + 1;
      const Index k = n + 1, size = 2 * k;
      auto at = [size](Index a, Index b) { return a * size + b; };
      SparseVector trace;
      for (Index a = 0; a < k; ++a) trace.emplace(is_p ? at(a, a) : at(a, k + a), 1);
      r.constraints.push_back(trace);
      for (Index a = 0; a < k; ++a)
        for (Index b = 0; b < k; ++b) {
          if (is_p) {
            r.constraints.push_back({{at(k + a, k + b), 1}, {at(b, a), 1}});
            if (a < b) r.constraints.push_back({{at(a, k + b), 1}, {at(b, k + a), -1}});
            SparseVector c;
            axpy(c, 1, {{at(k + a, b), 1}});
            axpy(c, 1, {{at(k + b, a), 1}});
            if (a <= b) r.constraints.push_back(c);
          } else {
            r.constraints.push_back({{at(k + a, k + b), 1}, {at(a, b), -1}});
            r.constraints.push_back({{at(k + a, b), 1}, {at(a, k + b), -1}});
          }
        }
      for (Index a = 0; a + 1 < k; ++a)
        r.cartan.push_back(diagonal(size, {{a, 1}, {a + 1, -1}, {k + a, is_p ? -1 : 1},
                                           {k + a + 1, is_p ? 1 : -1}}));
      if (!is_p) r.modulus = ExactMatrix::Identity(size, size);
      return r;
    }
  }
  return r;
}

ExactMatrix constraint_matrix(const std::vector<SparseVector>& rows, const std::vector<Index>& cols) {
  std::map<Index, Index> position;
  for (std::size_t c = 0; c < cols.size(); ++c) position[cols[c]] = static_cast<Index>(c);
  std::vector<const SparseVector*> touching;
  for (const auto& row : rows)
    if (std::any_of(row.begin(), row.end(), [&](const auto& e) { return position.count(e.first); }))
      touching.push_back(&row);
  ExactMatrix m = ExactMatrix::Zero(static_cast<Index>(touching.size()),
                                    static_cast<Index>(cols.size()));
  for (std::size_t r = 0; r < touching.size(); ++r)
    for (const auto& [k, c] : *touching[r])
      if (auto it = position.find(k); it != position.end()) m(static_cast<Index>(r), it->second) = c;
  return m;
}

bool satisfies(const std::vector<SparseVector>& constraints, const SparseVector& x) {
  for (const auto& row : constraints) {
    Scalar s(0);
    for (const auto& [k, c] : row)
      if (auto it = x.find(k); it != x.end()) s += c * it->second;
    if (s != 0) return false;
  }
  return true;
}

std::string unit_name(Index size, Index a, Index b) {
  if (size < 10) return "e" + std::to_string(a + 1) + std::to_string(b + 1);
  return "e" + std::to_string(a + 1) + "_" + std::to_string(b + 1);
}

std::string matrix_label(const ExactMatrix& x) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (Index a = 0; a < x.rows(); ++a)
    for (Index b = 0; b < x.cols(); ++b)
      if (x(a, b) != 0) terms.emplace_back(x(a, b), unit_name(x.rows(), a, b));
  return format_combination(terms);
}

struct Candidate {
  Parity parity;
  Index lead;
  ExactMatrix matrix;
  Weight weight;
};

}  // namespace

SuperVector ClassicalModel::coordinates(const ExactMatrix& x) const {
  if (x.rows() != size() || x.cols() != size())
    throw Error(Errc::DimensionMismatch, "matrix must be " + std::to_string(size()) + " x " +
                                             std::to_string(size()));
  std::vector<SparseVector> b;
  for (const auto& e : basis) b.push_back(to_sparse(e));
  std::vector<SparseVector> mod;
  if (modulus) mod.push_back(to_sparse(*modulus));
  const auto coords = CoordinateSolver(b, mod).solve(to_sparse(x));
  if (!coords) throw Error(Errc::DimensionMismatch, "matrix is not an element of " + algebra.name());
  SuperVector v = SuperVector::Zero(algebra.dim());
  for (const auto& [k, c] : *coords) v(k) = c;
  return v;
}

ExactMatrix ClassicalModel::matrix(const SuperVector& v) const {
  if (v.size() != algebra.dim())
    throw Error(Errc::DimensionMismatch, "coordinate vector has wrong length");
  ExactMatrix x = ExactMatrix::Zero(size(), size());
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) x += v(i) * basis[static_cast<std::size_t>(i)];
  return x;
}

Weight ClassicalModel::weight_of(std::span<const Scalar> f) const {
  if (static_cast<Index>(f.size()) != size())
    throw Error(Errc::DimensionMismatch, "diagonal functional needs " + std::to_string(size()) +
                                             " values");
  Weight w;
  for (Index h : algebra.cartan()) {
    const ExactMatrix& m = basis[static_cast<std::size_t>(h)];
    Scalar s(0);
    for (Index k = 0; k < size(); ++k) s += f[static_cast<std::size_t>(k)] * m(k, k);
    w.values.push_back(s);
  }
  return w;
}

Weight ClassicalModel::weight_of(std::initializer_list<int> f) const {
  std::vector<Scalar> values(f.begin(), f.end());
  return weight_of(std::span<const Scalar>(values));
}

ClassicalModel classical_model(const FamilySpec& spec) {
  validate(spec);
  const Realization r = realize(spec);
  const Index size = r.p + r.q;
  auto odd_unit = [&](Index a, Index b) { return (a < r.p) != (b < r.p); };

  for (const auto& h : r.cartan)
    if (!satisfies(r.constraints, to_sparse(h)))
      throw Error(Errc::ConstructionFailed, "Cartan element outside the model");

  std::map<std::pair<int, Weight>, std::vector<Index>> groups;
  for (Index a = 0; a < size; ++a)
    for (Index b = 0; b < size; ++b) {
      Weight w;
      for (const auto& h : r.cartan) w.values.push_back(h(a, a) - h(b, b));
      groups[{odd_unit(a, b) ? 1 : 0, w}].push_back(a * size + b);
    }

  std::vector<Index> all(static_cast<std::size_t>(size * size));
  for (Index k = 0; k < size * size; ++k) all[static_cast<std::size_t>(k)] = k;
  const Index total_nullity = nullspace(constraint_matrix(r.constraints, all)).cols();

  Index found = 0;
  std::vector<Candidate> roots;
  for (const auto& [key, units] : groups) {
    const ExactMatrix kernel = nullspace(constraint_matrix(r.constraints, units));
    found += kernel.cols();
    const bool cartan_group = key.first == 0 && key.second.is_zero();
    if (cartan_group) {
      Subspace s(size * size);
      for (const auto& h : r.cartan) s.insert(Eigen::Map<const SuperVector>(h.data(), h.size()));
      if (r.modulus) s.insert(Eigen::Map<const SuperVector>(r.modulus->data(), r.modulus->size()));
      if (s.dim() != kernel.cols() || s.dim() != static_cast<Index>(r.cartan.size()) + (r.modulus ? 1 : 0))
        throw Error(Errc::ConstructionFailed, "Cartan elements do not span the diagonal part");
      continue;
    }
    for (Index c = 0; c < kernel.cols(); ++c) {
      ExactMatrix x = ExactMatrix::Zero(size, size);
      Index lead = -1;
      for (std::size_t u = 0; u < units.size(); ++u) {
        const Scalar& v = kernel(static_cast<Index>(u), c);
        if (v == 0) continue;
        x(units[u] / size, units[u] % size) = v;
        if (lead < 0 || units[u] < lead) lead = units[u];
      }
      roots.push_back({key.first ? Parity::Odd : Parity::Even, lead, x, key.second});
    }
  }
  if (found != total_nullity)
    throw Error(Errc::ConstructionFailed, "model constraints do not respect the weight grading");

  std::stable_sort(roots.begin(), roots.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.parity, a.lead) < std::tie(b.parity, b.lead);
  });

  ClassicalModel model{spec, r.p, r.q, SuperAlgebra(SuperAlgebraParts{}), {}, r.modulus};
  TableInput in;
  in.name = algebra_name(spec);
  in.family = spec;
  for (const auto& h : r.cartan) {
    in.cartan.push_back(static_cast<Index>(model.basis.size()));
    model.basis.push_back(h);
    in.parity.push_back(Parity::Even);
  }
  for (const auto& c : roots) {
    model.basis.push_back(c.matrix);
    in.parity.push_back(c.parity);
  }
  for (const auto& x : model.basis) {
    in.basis.push_back(to_sparse(x));
    in.labels.push_back(matrix_label(x));
  }
  if (r.modulus) in.modulus.push_back(to_sparse(*r.modulus));

  const bool block_tags = spec.family == ClassicalFamily::gl || spec.family == ClassicalFamily::A ||
                          spec.family == ClassicalFamily::P;
  if (block_tags || spec.family == ClassicalFamily::C) {
    std::vector<int> tags(model.basis.size(), 0);
    for (std::size_t i = r.cartan.size(); i < model.basis.size(); ++i) {
      const Candidate& c = roots[i - r.cartan.size()];
      if (c.parity == Parity::Even) continue;
      if (block_tags) {
        const bool upper = c.lead / size < r.p;
        for (const auto& [k, v] : in.basis[i])
          if ((k / size < r.p) != upper)
            throw Error(Errc::ConstructionFailed, "odd root vector spans both off-diagonal blocks");
        tags[i] = upper ? 1 : 2;
      } else {
        tags[i] = c.weight.values[0] > 0 ? 1 : 2;
      }
    }
    in.component = std::move(tags);
  }

  struct Entry {
    Index a, b;
    Scalar c;
  };
  std::vector<std::vector<Entry>> entries;
  for (const auto& x : model.basis) {
    std::vector<Entry> e;
    for (Index a = 0; a < size; ++a)
      for (Index b = 0; b < size; ++b)
        if (x(a, b) != 0) e.push_back({a, b, x(a, b)});
    entries.push_back(std::move(e));
  }
  in.bracket = [&](Index i, Index j) {
    const auto& x = entries[static_cast<std::size_t>(i)];
    const auto& y = entries[static_cast<std::size_t>(j)];
    const int sign = sign_of_swap(in.parity[static_cast<std::size_t>(i)],
                                  in.parity[static_cast<std::size_t>(j)]);
    SparseVector out;
    for (const auto& s : x)
      for (const auto& t : y) {
        if (s.b == t.a) axpy(out, s.c * t.c, {{s.a * size + t.b, Scalar(1)}});
        if (t.b == s.a) axpy(out, Scalar(-sign) * t.c * s.c, {{t.a * size + s.b, Scalar(1)}});
      }
    return out;
  };
  model.algebra = build_table(in);
  return model;
}

SuperAlgebra build_classical(const FamilySpec& spec) { return classical_model(spec).algebra; }

}  // namespace superlie
