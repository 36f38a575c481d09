#include "support.hpp"

using namespace superlie;
using CF = ClassicalFamily;

namespace {

ExactMatrix E(Index i, Index j) { return matrix_unit(3, i, j); }

struct A10 {
  ClassicalModel model = classical_model({CF::A, 1, 0});
  const SuperAlgebra& L = model.algebra;
  SuperVector h = model.coordinates(3 * E(1, 1) + E(2, 2) + 4 * E(3, 3));
  SuperVector v(std::string_view label) const { return basis_vector(L, test::label_index(L, label)); }
};

SuperAlgebra corrupted(const SuperAlgebra& L, Index i, Index j, const Scalar& factor, bool both) {
  SuperAlgebraParts parts = L.parts();
  auto scale = [&](Index a, Index b) {
    for (auto& t : parts.structure[static_cast<std::size_t>(a * L.dim() + b)]) t.coeff *= factor;
  };
  scale(i, j);
  if (both) scale(j, i);
  return SuperAlgebra(std::move(parts));
}

}  // namespace

TEST_CASE("bracket examples in A(1,0)") {
  const A10 a;
  CHECK(bracket(a.L, a.h, a.v("e12")) == 2 * a.v("e12"));
  const ExactMatrix anti = E(1, 3) * E(3, 1) + E(3, 1) * E(1, 3);
  CHECK(bracket(a.L, a.v("e13"), a.v("e31")) == a.model.coordinates(anti));

  std::mt19937_64 rng(31);
  const auto even = even_indices(a.L);
  for (int t = 0; t < 20; ++t) {
    SuperVector x = SuperVector::Zero(a.L.dim());
    const SuperVector r = test::random_vector(rng, a.L.dim());
    for (Index i : even) x(i) = r(i);
    CHECK(is_zero(bracket(a.L, x, x)));
  }
}

TEST_CASE("closure examples in A(1,0)") {
  const A10 a;
  for (Index c : a.L.cartan()) {
    const SuperVector g = basis_vector(a.L, c);
    CHECK(closure(a.L, std::span<const SuperVector>(&g, 1)).space.dim() == 1);
  }
  const std::vector<SuperVector> sl2{a.v("e12"), a.v("e21")};
  CHECK(closure(a.L, sl2).space.dim() == 3);

  const SuperVector x = a.v("e12") + a.v("e21") + a.v("e13") + a.v("e31") +
                        a.model.coordinates(E(1, 1) + E(2, 2) + 2 * E(3, 3));
  const std::vector<SuperVector> pair{x, a.h};
  CHECK(closure(a.L, pair).space.dim() == 8);
}

TEST_CASE("closure agrees with pairwise and naive closures") {
  std::mt19937_64 rng(32);
  const std::vector<SuperAlgebra> algebras{build_classical({CF::A, 1, 0}), build_classical({CF::B, 1, 1}),
                                           build_cartan({CartanFamily::W, 3})};
  for (const auto& L : algebras) {
    CAPTURE(L.name());
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<SuperVector> gens;
      std::uniform_int_distribution<Index> pick(0, L.dim() - 1);
      const int count = 1 + trial % 3;
      for (int g = 0; g < count; ++g) {
        if (trial % 2) {
          gens.push_back(basis_vector(L, pick(rng)));
        } else {
          SuperVector v = SuperVector::Zero(L.dim());
          for (int t = 0; t < 2; ++t) v(pick(rng)) += 1;
          gens.push_back(v);
        }
      }
      const Closure c = closure(L, gens);
      const Closure p = closure_pairwise(L, gens);
      CHECK(c.space == p.space);
      CHECK(c.space.dim() == test::naive_closure_dim(L, gens));
      for (const auto& g : gens) CHECK(c.space.contains(g));
      for (const auto& r1 : c.space.rows())
        for (const auto& r2 : c.space.rows()) REQUIRE(c.space.contains(bracket(L, r1, r2)));

      REQUIRE(c.trace.size() >= 2);
      for (std::size_t k = 1; k + 1 < c.trace.size(); ++k) CHECK(c.trace[k] > c.trace[k - 1]);
      CHECK(c.trace.back() == c.trace[c.trace.size() - 2]);
      CHECK(c.trace.back() == c.space.dim());

      const Closure again = closure(L, c.space.rows());
      CHECK(again.space == c.space);
      std::vector<SuperVector> more = gens;
      more.push_back(basis_vector(L, pick(rng)));
      CHECK(closure(L, more).space.contains(c.space));
    }
    std::vector<SuperVector> all;
    for (Index i = 0; i < L.dim(); ++i) all.push_back(basis_vector(L, i));
    CHECK(closure(L, all).space.dim() == L.dim());
  }
}

TEST_CASE("module closure and components") {
  const A10 a;
  const auto even = even_indices(a.L);
  const Subspace acting = span_of(a.L, even);
  const Subspace m = module_closure(a.L, acting, a.v("e13"));
  CHECK(m.dim() == 2);
  CHECK(m.contains(a.v("e23")));
  const SuperVector z = a.model.coordinates(E(1, 1) + E(2, 2) + 2 * E(3, 3));
  CHECK(module_closure(a.L, acting, z).dim() == 1);

  const auto odd = odd_indices(a.L);
  const auto parts = module_components(a.L, span_of(a.L, odd));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].dim() == 2);
  CHECK(parts[1].dim() == 2);
  CHECK(sum_dim(parts[0], parts[1]) == 4);

  const SuperAlgebra B11 = build_classical({CF::B, 1, 1});
  const auto b_odd = odd_indices(B11);
  CHECK(module_components(B11, span_of(B11, b_odd)).size() == 1);

  const SuperAlgebra C3 = build_classical({CF::C, 0, 3});
  const auto c_odd = odd_indices(C3);
  const auto c_parts = module_components(C3, span_of(C3, c_odd));
  Index total = 0;
  Subspace running(C3.dim());
  for (const auto& p : c_parts) {
    total += p.dim();
    CHECK(sum_dim(running, p) == running.dim() + p.dim());
    for (const auto& r : p.rows()) running.insert(r);
  }
  CHECK(total == static_cast<Index>(c_odd.size()));
}

TEST_CASE("weight vectors") {
  const A10 a;
  const auto odd = odd_indices(a.L);
  const auto wv = weight_vectors(a.L, span_of(a.L, odd));
  CHECK(wv.size() == 4);
  for (const auto& w : wv) CHECK(w.multiplicity == 1);
  const std::vector<SuperVector> mixed{a.v("e12") + a.v("e21")};
  CHECK_THROWS_AS(weight_vectors(a.L, span_of(a.L.dim(), mixed)), Error);
}

TEST_CASE("ideals and centers") {
  const A10 a;
  const SuperVector e12 = a.v("e12");
  CHECK(ideal_closure(a.L, std::span<const SuperVector>(&e12, 1)).dim() == 8);
  std::vector<Index> all(static_cast<std::size_t>(a.L.dim()));
  for (Index i = 0; i < a.L.dim(); ++i) all[static_cast<std::size_t>(i)] = i;
  CHECK(center_of(a.L, all).dim() == 0);
  const auto even = even_indices(a.L);
  CHECK(center_of(a.L, even).dim() == 1);
}

TEST_CASE("check_structure detects corrupted constants") {
  const A10 a;
  const Index i = test::label_index(a.L, "e12"), j = test::label_index(a.L, "e21");
  CHECK(check_structure(a.L).ok());

  const auto skew = check_structure(corrupted(a.L, i, j, Scalar(2), false));
  CHECK_FALSE(skew.ok());
  CHECK_FALSE(skew.skew_symmetric);
  REQUIRE(skew.counterexample.has_value());
  CHECK(skew.counterexample->find("skew") != std::string::npos);

  const auto jac = check_structure(corrupted(a.L, i, j, Scalar(2), true));
  CHECK(jac.skew_symmetric);
  CHECK_FALSE(jac.jacobi);
  REQUIRE(jac.counterexample.has_value());
  CHECK(jac.counterexample->find("jacobi") != std::string::npos);
}

TEST_CASE("sampled Jacobi above the exhaustive limit") {
  const SuperAlgebra W4 = build_cartan({CartanFamily::W, 4});
  const auto report = check_structure(W4);
  CHECK(report.ok());
  CHECK_FALSE(report.jacobi_exhaustive);
  CHECK(report.jacobi_triples == 10000);
}

TEST_CASE("constructor validation") {
  const A10 a;
  SuperAlgebraParts parts = a.L.parts();
  parts.labels.pop_back();
  CHECK_THROWS_AS(SuperAlgebra{parts}, Error);
  parts = a.L.parts();
  parts.cartan.push_back(test::label_index(a.L, "e13"));
  parts.weights.assign(parts.weights.size(), Weight(std::vector<Scalar>(3, Scalar(0))));
  CHECK_THROWS_AS(SuperAlgebra{parts}, Error);
}
