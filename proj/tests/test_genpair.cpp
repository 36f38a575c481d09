#include "support.hpp"

using namespace superlie;
using CF = ClassicalFamily;
using KF = CartanFamily;

namespace {

struct A10 {
  ClassicalModel model = classical_model({CF::A, 1, 0});
  const SuperAlgebra& L = model.algebra;
  SuperVector diag(int a, int b, int c) const {
    return model.coordinates(a * matrix_unit(3, 1, 1) + b * matrix_unit(3, 2, 2) + c * matrix_unit(3, 3, 3));
  }
};

bool purely(const SuperAlgebra& L, const SuperVector& v, Parity p) {
  for (Index i = 0; i < L.dim(); ++i)
    if (v(i) != 0 && L.parity(i) != p) return false;
  return !is_zero(v);
}

void check_certificate_shape(const GeneratorCertificate& c) {
  CHECK(c.generators.size() == 2);
  REQUIRE(c.trace.size() >= 2);
  for (std::size_t k = 1; k + 1 < c.trace.size(); ++k) CHECK(c.trace[k] > c.trace[k - 1]);
  CHECK(c.trace.back() == c.final_dim);
  std::set<Scalar> values;
  for (const auto& [w, v] : c.separator) {
    if (!w.is_zero()) CHECK(v != 0);
    values.insert(v);
  }
  CHECK(values.size() == c.separator.size());
}

}  // namespace

TEST_CASE("the worked A(1,0) pairs") {
  const A10 a;
  const SuperVector x = test::combo(a.L, {{1, "e12"}, {1, "e21"}, {1, "e13"}, {1, "e31"}}) + a.diag(1, 1, 2);
  const auto first = verify_pair(a.L, x, a.diag(3, 1, 4));
  CHECK(first.generated());
  CHECK(first.final_dim == 8);

  const SuperVector xo = test::combo(a.L, {{1, "e13"}, {1, "e31"}, {1, "e23"}, {1, "e32"}});
  const SuperVector h = a.diag(1, 0, 1);
  const auto second = verify_pair(a.L, xo, h);
  CHECK(second.generated());
  CHECK(second.final_dim == 8);
  const std::vector<std::pair<std::string_view, int>> values{{"e13", 0}, {"e31", 0}, {"e23", -1}, {"e32", 1}};
  for (const auto& [label, value] : values) {
    const SuperVector e = test::combo(a.L, {{1, label}});
    CHECK(bracket(a.L, h, e) == value * e);
  }
}

TEST_CASE("negative controls") {
  const A10 a;
  const auto c = verify_pair(a.L, test::combo(a.L, {{1, "e12"}}), a.diag(3, 1, 4));
  CHECK_FALSE(c.generated());
  CHECK(c.final_dim == 2);
  const SuperVector zero = SuperVector::Zero(a.L.dim());
  const auto z = verify_pair(a.L, zero, zero);
  CHECK_FALSE(z.generated());
  CHECK(z.final_dim == 0);
}

TEST_CASE("classical pairs generate") {
  for (const FamilySpec s : {FamilySpec{CF::A, 1, 0}, FamilySpec{CF::A, 2, 1}, FamilySpec{CF::A, 1, 1},
                             FamilySpec{CF::B, 0, 1}, FamilySpec{CF::B, 1, 1}, FamilySpec{CF::C, 0, 2},
                             FamilySpec{CF::C, 0, 3}, FamilySpec{CF::D, 2, 1}, FamilySpec{CF::P, 0, 2},
                             FamilySpec{CF::Q, 0, 2}, FamilySpec{CF::Q, 0, 3}}) {
    CAPTURE(algebra_name(s));
    const SuperAlgebra L = build_classical(s);
    const auto c = classical_pair(L);
    CHECK(c.generated());
    CHECK(c.final_dim == L.dim());
    CHECK(test::naive_closure_dim(L, c.generators) == L.dim());
    check_certificate_shape(c);
    if (s.family == CF::Q) CHECK(c.recipe == Recipe::classical_2_1_Q);
  }
}

TEST_CASE("P(2) pair picks odd weights from both components") {
  const SuperAlgebra L = build_classical({CF::P, 0, 2});
  const RootTable t = weight_table(L);
  const auto c = classical_pair(L);
  REQUIRE(c.chosen_weights.size() == 2);
  std::set<int> tags;
  for (const auto& w : c.chosen_weights) {
    REQUIRE(t.space(w).size() == 1);
    tags.insert(L.component(t.space(w).front()));
  }
  CHECK(tags == std::set<int>{1, 2});
}

TEST_CASE("Cartan pairs generate") {
  struct Case {
    CartanFamilySpec spec;
    Recipe recipe;
  };
  for (const Case k : {Case{{KF::W, 3}, Recipe::cartan_generic}, Case{{KF::S, 4}, Recipe::cartan_generic},
                       Case{{KF::Stilde, 4}, Recipe::cartan_generic}, Case{{KF::H, 5}, Recipe::cartan_Hodd},
                       Case{{KF::H, 6}, Recipe::cartan_H6}}) {
    CAPTURE(algebra_name(k.spec));
    const SuperAlgebra L = build_cartan(k.spec);
    const auto c = cartan_pair(L);
    CHECK(c.generated());
    CHECK(c.recipe == k.recipe);
    check_certificate_shape(c);
  }
  const SuperAlgebra H5 = build_cartan({KF::H, 5});
  const auto c = cartan_pair(H5);
  bool zero_chosen = false;
  for (const auto& w : c.chosen_weights) zero_chosen = zero_chosen || w.is_zero();
  CHECK(zero_chosen);
}

TEST_CASE("homogeneous pairs") {
  for (const AlgebraFamily f : {AlgebraFamily{FamilySpec{CF::A, 1, 0}}, AlgebraFamily{FamilySpec{CF::B, 1, 1}},
                                AlgebraFamily{FamilySpec{CF::C, 0, 2}}, AlgebraFamily{CartanFamilySpec{KF::W, 3}}}) {
    const SuperAlgebra L = build_algebra(f);
    CAPTURE(L.name());
    const auto c = homogeneous_pair(L);
    CHECK(c.generated());
    CHECK(c.recipe == Recipe::homogeneous);
    CHECK(purely(L, c.generators[0], Parity::Odd));
    CHECK(purely(L, c.generators[1], Parity::Even));
  }
  for (const FamilySpec s : {FamilySpec{CF::A, 1, 1}, FamilySpec{CF::Q, 0, 2}, FamilySpec{CF::Q, 0, 3},
                             FamilySpec{CF::P, 0, 3}}) {
    CAPTURE(algebra_name(s));
    try {
      homogeneous_pair(build_classical(s));
      FAIL("expected OddSpacesNotOneDim");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OddSpacesNotOneDim);
    }
  }
  const A10 a;
  CHECK(homogeneous_pair(a.L).generators[0] ==
        test::combo(a.L, {{1, "e13"}, {1, "e23"}, {1, "e31"}, {1, "e32"}}));
}

TEST_CASE("even part pairs") {
  const A10 a;
  const EvenPair p = even_part_pair(a.L);
  CHECK(p.closure.space.dim() == 4);
  CHECK_FALSE(is_zero(p.z));

  const SuperAlgebra B11 = build_classical({CF::B, 1, 1});
  const EvenPair b = even_part_pair(B11);
  CHECK(is_zero(b.z));
  CHECK(b.closure.space.dim() == static_cast<Index>(even_indices(B11).size()));

  const SuperAlgebra W3 = build_cartan({KF::W, 3});
  const auto w = even_part_certificate(W3);
  CHECK(w.final_dim == 9);
  CHECK(w.generated());
  CHECK(verify_certificate(W3, w).generated());
}

TEST_CASE("gl(2|1) pair") {
  const SuperAlgebra L = build_classical({CF::gl, 2, 1});
  const auto c = generator_pair(L);
  CHECK(c.recipe == Recipe::gl_variant);
  CHECK(c.generated());
}

TEST_CASE("certificates are deterministic and re-verify") {
  for (const AlgebraFamily f : {AlgebraFamily{FamilySpec{CF::A, 2, 1}}, AlgebraFamily{FamilySpec{CF::Q, 0, 2}},
                                AlgebraFamily{CartanFamilySpec{KF::S, 4}}}) {
    const SuperAlgebra L = build_algebra(f);
    CAPTURE(L.name());
    const auto c1 = generator_pair(L);
    const auto c2 = generator_pair(build_algebra(f));
    CHECK(to_json(c1).dump() == to_json(c2).dump());
    const auto v = verify_certificate(L, c1);
    CHECK(v.generated());
    CHECK(v.trace == c1.trace);
  }
}
