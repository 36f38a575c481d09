#include "support.hpp"

using namespace superlie;
using CF = ClassicalFamily;
using KF = CartanFamily;

TEST_CASE("algebra round trip is byte-identical") {
  for (const AlgebraFamily& f : sweep_instances()) {
    if (const auto* c = std::get_if<CartanFamilySpec>(&f); c && c->n > 6) continue;
    const SuperAlgebra L = build_algebra(f);
    CAPTURE(L.name());
    const std::string text = dump_algebra(L);
    const SuperAlgebra back = parse_algebra(text);
    CHECK(dump_algebra(back) == text);
    CHECK(back.dim() == L.dim());
    CHECK(back.family() == L.family());
    CHECK(back.parts().structure == L.parts().structure);
    CHECK(back.parts().labels == L.parts().labels);
    CHECK(back.parts().degree == L.parts().degree);
    CHECK(back.parts().component == L.parts().component);
  }
}

TEST_CASE("algebra JSON fields") {
  const SuperAlgebra L = build_classical({CF::A, 1, 0});
  const Json j = to_json(L);
  CHECK(j.at("dim") == 8);
  CHECK(j.at("family") == "A");
  CHECK(j.at("params") == Json::array({1, 0}));
  CHECK(j.at("name") == "A(1,0)");
  CHECK(j.at("parity") == Json::array({0, 0, 0, 0, 1, 1, 1, 1}));
  CHECK(j.at("weights")[2] == Json::array({"2", "-1"}));
  CHECK_FALSE(j.contains("degree"));
  CHECK(to_json(build_cartan({KF::W, 3})).contains("degree"));
}

TEST_CASE("certificate round trip") {
  const SuperAlgebra L = build_classical({CF::B, 1, 1});
  const auto c = generator_pair(L);
  const Json j = to_json(c);
  CHECK(j.at("verdict") == "generated");
  const auto back = certificate_from_json(parse_json(j.dump(2)));
  CHECK(back.family == c.family);
  CHECK(back.recipe == c.recipe);
  CHECK(back.generators == c.generators);
  CHECK(back.chosen_weights == c.chosen_weights);
  CHECK(back.separator == c.separator);
  CHECK(back.trace == c.trace);
  CHECK(back.final_dim == c.final_dim);
  CHECK(back.ambient_dim == c.ambient_dim);
  CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("vectors and weights") {
  SuperVector v(3);
  v << Scalar(1, 2), 0, -3;
  CHECK(to_json(v) == Json::array({"1/2", "0", "-3"}));
  CHECK(vector_from_json(to_json(v)) == v);
  CHECK(vector_from_json(Json::array({1, "2/4"})) == (SuperVector(2) << 1, Scalar(1, 2)).finished());
  const Weight w(std::vector<Scalar>{Scalar(2), Scalar(-1)});
  CHECK(weight_from_json(to_json(w)) == w);
}

TEST_CASE("malformed input maps to ParseError") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ConstructionFailed;
  };
  CHECK(code([] { parse_json("{not json"); }) == Errc::ParseError);
  CHECK(code([] { parse_algebra("{}"); }) == Errc::ParseError);
  CHECK(code([] { vector_from_json(Json::object()); }) == Errc::ParseError);
  CHECK(code([] { vector_from_json(Json::array({"1/x"})); }) == Errc::ParseError);

  Json j = to_json(build_classical({CF::A, 1, 0}));
  j["parity"][0] = 2;
  CHECK(code([&] { algebra_from_json(j); }) == Errc::ParseError);
  j = to_json(build_classical({CF::A, 1, 0}));
  j["dim"] = 9;
  CHECK(code([&] { algebra_from_json(j); }) == Errc::ParseError);
}
