#include "support.hpp"

using namespace superlie;
using CF = ClassicalFamily;

namespace {

std::vector<FamilySpec> instances() {
  return {{CF::gl, 1, 1}, {CF::gl, 2, 1}, {CF::A, 1, 0}, {CF::A, 2, 1}, {CF::A, 1, 1},
          {CF::A, 2, 2},  {CF::B, 0, 1},  {CF::B, 1, 1}, {CF::B, 2, 1}, {CF::C, 0, 2},
          {CF::C, 0, 3},  {CF::D, 2, 1},  {CF::P, 0, 2}, {CF::P, 0, 3}, {CF::Q, 0, 2},
          {CF::Q, 0, 3}};
}

Index so_dim(Index k) { return k * (k - 1) / 2; }
/// dim sp(2k).
Index sp_dim(Index k) { return k * (2 * k + 1); }

/// Dimension from the standard tables, written out per family.
Index table_dim(const FamilySpec& s) {
  const Index m = s.m, n = s.n;
  switch (s.family) {
    case CF::gl: return (m + n) * (m + n);
    case CF::A: return (m + n + 2) * (m + n + 2) - (m == n ? 2 : 1);
    case CF::B: return so_dim(2 * m + 1) + sp_dim(n) + (2 * m + 1) * 2 * n;
    case CF::C: return 1 + sp_dim(n - 1) + 2 * (2 * n - 2);
    case CF::D: return so_dim(2 * m) + sp_dim(n) + 2 * m * 2 * n;
    case CF::P: return (n + 1) * (n + 1) - 1 + (n + 1) * (n + 2) / 2 + n * (n + 1) / 2;
    case CF::Q: return 2 * ((n + 1) * (n + 1) - 1);
  }
  return -1;
}

/// Dimension of {X : B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0} for the form
/// antidiag(1) on F^p plus the standard symplectic form on F^q.
Index form_preserving_dim(Index p, Index q) {
  const Index N = p + q;
  ExactMatrix G = ExactMatrix::Zero(N, N);
  for (Index a = 0; a < p; ++a) G(a, p - 1 - a) = 1;
  for (Index a = 0; a < q / 2; ++a) {
    G(p + a, p + q / 2 + a) = 1;
    G(p + q / 2 + a, p + a) = -1;
  }
  auto odd = [&](Index a) { return a >= p; };
  Index total = 0;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<std::pair<Index, Index>> unknowns;
    for (Index a = 0; a < N; ++a)
      for (Index b = 0; b < N; ++b)
        if ((odd(a) != odd(b)) == (parity == 1)) unknowns.emplace_back(a, b);
    const Index k = static_cast<Index>(unknowns.size());
    ExactMatrix eqs = ExactMatrix::Zero(N * N, k);
    for (Index u = 0; u < k; ++u) {
      ExactMatrix X = ExactMatrix::Zero(N, N);
      X(unknowns[u].first, unknowns[u].second) = 1;
      const ExactMatrix left = X.transpose() * G, right = G * X;
      for (Index a = 0; a < N; ++a)
        for (Index b = 0; b < N; ++b) {
          const int sign = (parity == 1 && odd(a)) ? -1 : 1;
          eqs(a * N + b, u) = left(a, b) + sign * right(a, b);
        }
    }
    total += k - rank(eqs);
  }
  return total;
}

}  // namespace

TEST_CASE("supertrace") {
  CHECK(supertrace(matrix_unit(3, 1, 1), 2) == 1);
  CHECK(supertrace(matrix_unit(3, 3, 3), 2) == -1);
  CHECK(supertrace(matrix_unit(3, 1, 1) + matrix_unit(3, 2, 2) + 2 * matrix_unit(3, 3, 3), 2) == 0);
  CHECK_THROWS_AS(supertrace(ExactMatrix::Zero(2, 3), 1), Error);
}

TEST_CASE("dimensions match the classification tables") {
  for (const auto& s : instances()) {
    CAPTURE(algebra_name(s));
    CHECK(build_classical(s).dim() == table_dim(s));
  }
  const SuperAlgebra A10 = build_classical({CF::A, 1, 0});
  CHECK(static_cast<Index>(even_indices(A10).size()) == 4);
  CHECK(static_cast<Index>(odd_indices(A10).size()) == 4);
}

TEST_CASE("orthosymplectic dimensions agree with a form-invariance count") {
  CHECK(build_classical({CF::B, 1, 1}).dim() == form_preserving_dim(3, 2));
  CHECK(build_classical({CF::B, 2, 1}).dim() == form_preserving_dim(5, 2));
  CHECK(build_classical({CF::B, 0, 1}).dim() == form_preserving_dim(1, 2));
  CHECK(build_classical({CF::D, 2, 1}).dim() == form_preserving_dim(4, 2));
  CHECK(build_classical({CF::C, 0, 2}).dim() == form_preserving_dim(2, 2));
  CHECK(build_classical({CF::C, 0, 3}).dim() == form_preserving_dim(2, 4));
  CHECK(form_preserving_dim(3, 2) == 12);
}

TEST_CASE("structure constants agree with matrix super-commutators") {
  for (const auto& s : instances()) {
    CAPTURE(algebra_name(s));
    const ClassicalModel model = classical_model(s);
    const SuperAlgebra& L = model.algebra;
    for (Index i = 0; i < L.dim(); ++i)
      for (Index j = 0; j < L.dim(); ++j) {
        const ExactMatrix& X = model.basis[i];
        const ExactMatrix& Y = model.basis[j];
        const int sign = (L.is_odd(i) && L.is_odd(j)) ? -1 : 1;
        const ExactMatrix expected = X * Y - sign * (Y * X);
        const ExactMatrix got = model.matrix(bracket(L, basis_vector(L, i), basis_vector(L, j)));
        ExactMatrix diff = expected - got;
        if (model.modulus && !is_zero(diff)) diff -= (diff(0, 0) / (*model.modulus)(0, 0)) * *model.modulus;
        REQUIRE(is_zero(diff));
      }
  }
}

TEST_CASE("built algebras pass the structure checks") {
  for (const auto& s : instances()) {
    CAPTURE(algebra_name(s));
    const auto report = check_structure(build_classical(s));
    CHECK(report.ok());
    CHECK(report.jacobi_exhaustive == (table_dim(s) <= 60));
  }
}

TEST_CASE("A(1,0) basis, weights and tags") {
  const ClassicalModel model = classical_model({CF::A, 1, 0});
  const SuperAlgebra& L = model.algebra;
  CHECK(L.name() == "A(1,0)");
  CHECK(L.parts().labels ==
        std::vector<std::string>{"e11 - e22", "e22 + e33", "e12", "e21", "e13", "e23", "e31", "e32"});
  CHECK(L.weight(test::label_index(L, "e12")) == model.weight_of({1, -1, 0}));
  CHECK(L.weight(test::label_index(L, "e13")) == model.weight_of({1, 0, -1}));
  CHECK(L.weight(test::label_index(L, "e32")) == model.weight_of({0, -1, 1}));
  CHECK(L.component(test::label_index(L, "e13")) == 1);
  CHECK(L.component(test::label_index(L, "e23")) == 1);
  CHECK(L.component(test::label_index(L, "e31")) == 2);
  CHECK(L.component(test::label_index(L, "e32")) == 2);

  const ExactMatrix z = matrix_unit(3, 1, 1) + matrix_unit(3, 2, 2) + 2 * matrix_unit(3, 3, 3);
  const Subspace center = even_center(L);
  CHECK(center.dim() == 1);
  CHECK(center.contains(model.coordinates(z)));
  CHECK_THROWS_AS(model.coordinates(matrix_unit(3, 1, 1)), Error);
}

TEST_CASE("even centers") {
  for (const auto& s : instances()) {
    if (s.family == CF::gl) continue;
    CAPTURE(algebra_name(s));
    const bool central = (s.family == CF::A && s.m != s.n) || s.family == CF::C;
    CHECK(even_center(build_classical(s)).dim() == (central ? 1 : 0));
  }
}

TEST_CASE("ad of the even center splits the odd part along the component tags") {
  for (const FamilySpec s : {FamilySpec{CF::A, 1, 0}, FamilySpec{CF::A, 2, 1},
                             FamilySpec{CF::C, 0, 2}, FamilySpec{CF::C, 0, 3}}) {
    CAPTURE(algebra_name(s));
    const SuperAlgebra L = build_classical(s);
    const SuperVector z = even_center(L).rows().front();
    std::map<int, std::set<Scalar>> by_tag;
    for (Index i : odd_indices(L)) {
      const SuperVector v = bracket(L, z, basis_vector(L, i));
      const Scalar lambda = v(i);
      REQUIRE(v == lambda * basis_vector(L, i));
      by_tag[L.component(i)].insert(lambda);
    }
    REQUIRE(by_tag.size() == 2);
    CHECK(by_tag.count(1) == 1);
    CHECK(by_tag.count(2) == 1);
    CHECK(by_tag[1].size() == 1);
    CHECK(by_tag[2].size() == 1);
    CHECK(*by_tag[1].begin() != *by_tag[2].begin());
  }
}

TEST_CASE("P(2) odd components separate -e1-e2 and 2e1") {
  const ClassicalModel model = classical_model({CF::P, 0, 2});
  const SuperAlgebra& L = model.algebra;
  const RootTable t = weight_table(L);
  const Weight a = model.weight_of({-1, -1, 0, 0, 0, 0}), b = model.weight_of({2, 0, 0, 0, 0, 0});
  REQUIRE(t.space(a).size() == 1);
  REQUIRE(t.space(b).size() == 1);
  CHECK(L.component(t.space(a).front()) != 0);
  CHECK(L.component(t.space(b).front()) != 0);
  CHECK(L.component(t.space(a).front()) != L.component(t.space(b).front()));
}

TEST_CASE("simplicity smoke test") {
  for (const FamilySpec s : {FamilySpec{CF::A, 1, 0}, FamilySpec{CF::A, 1, 1}, FamilySpec{CF::B, 1, 1},
                             FamilySpec{CF::C, 0, 2}, FamilySpec{CF::D, 2, 1}, FamilySpec{CF::P, 0, 2},
                             FamilySpec{CF::Q, 0, 2}}) {
    CAPTURE(algebra_name(s));
    const SuperAlgebra L = build_classical(s);
    for (Index i = 0; i < L.dim(); ++i) {
      const SuperVector b = basis_vector(L, i);
      REQUIRE(ideal_closure(L, std::span<const SuperVector>(&b, 1)).dim() == L.dim());
    }
  }
}

TEST_CASE("parameter ranges") {
  CHECK_THROWS_AS(build_classical({CF::B, 0, 0}), Error);
  CHECK_THROWS_AS(build_classical({CF::A, 0, 0}), Error);
  CHECK_THROWS_AS(build_classical({CF::D, 1, 1}), Error);
  CHECK_THROWS_AS(build_classical({CF::C, 0, 1}), Error);
  CHECK_THROWS_AS(build_classical({CF::P, 0, 1}), Error);
  CHECK_THROWS_AS(build_classical({CF::gl, 0, 0}), Error);
  try {
    build_classical({CF::B, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadParameters);
  }
}
