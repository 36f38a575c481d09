#include <superlie/serialize.hpp>

namespace superlie {

namespace {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Json family_fields(const AlgebraFamily& family) {
  return Json{{"family", family_tag(family)}, {"params", family_params(family)}};
}

}  // namespace

Json to_json(const SuperVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json to_json(const Weight& w) {
  Json out = Json::array();
  for (const auto& s : w.values) out.push_back(to_string(s));
  return out;
}

SuperVector vector_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_array()) throw Error(Errc::ParseError, "coordinate vector must be an array");
    SuperVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto& e = j[i];
      v(static_cast<Index>(i)) =
          e.is_number_integer() ? Scalar(e.get<long long>()) : parse_scalar(e.get<std::string>());
    }
    return v;
  });
}

Weight weight_from_json(const Json& j) {
  const SuperVector v = vector_from_json(j);
  return Weight(std::vector<Scalar>(v.data(), v.data() + v.size()));
}

AlgebraFamily family_from_json(const Json& j) {
  return guarded([&]() -> AlgebraFamily {
    const auto tag = j.value("family", std::string());
    if (tag.empty()) return std::monostate{};
    return parse_family(tag, j.at("params").get<std::vector<int>>());
  });
}

Json to_json(const SuperAlgebra& L) {
  Json j = family_fields(L.family());
  j["name"] = L.name();
  j["dim"] = L.dim();
  Json parity = Json::array(), labels = Json::array(), weights = Json::array();
  for (Index i = 0; i < L.dim(); ++i) {
    parity.push_back(L.is_odd(i) ? 1 : 0);
    labels.push_back(L.label(i));
    weights.push_back(to_json(L.weight(i)));
  }
  j["parity"] = parity;
  j["labels"] = labels;
  j["weights"] = weights;
  j["cartan"] = L.cartan();
  if (L.has_degree()) j["degree"] = *L.parts().degree;
  if (L.has_component()) j["component"] = *L.parts().component;
  Json structure = Json::array();
  for (Index a = 0; a < L.dim(); ++a)
    for (Index b = 0; b < L.dim(); ++b)
      for (const auto& t : L.structure(a, b))
        structure.push_back(Json::array({a, b, t.index, to_string(t.coeff)}));
  j["structure"] = structure;
  return j;
}

SuperAlgebra algebra_from_json(const Json& j) {
  return guarded([&] {
    SuperAlgebraParts parts;
    parts.name = j.at("name").get<std::string>();
    parts.family = family_from_json(j);
    const auto dim = j.at("dim").get<Index>();
    if (dim < 0) throw Error(Errc::ParseError, "negative dimension");
    for (const auto& p : j.at("parity")) {
      const int v = p.get<int>();
      if (v != 0 && v != 1) throw Error(Errc::ParseError, "parity entries must be 0 or 1");
      parts.parity.push_back(v ? Parity::Odd : Parity::Even);
    }
    if (static_cast<Index>(parts.parity.size()) != dim)
      throw Error(Errc::ParseError, "parity length differs from dim");
    parts.labels = j.at("labels").get<std::vector<std::string>>();
    parts.cartan = j.at("cartan").get<std::vector<Index>>();
    for (const auto& w : j.at("weights")) parts.weights.push_back(weight_from_json(w));
    if (j.contains("degree")) parts.degree = j.at("degree").get<std::vector<int>>();
    if (j.contains("component")) parts.component = j.at("component").get<std::vector<int>>();
    parts.structure.resize(static_cast<std::size_t>(dim * dim));
    for (const auto& e : j.at("structure")) {
      if (!e.is_array() || e.size() != 4) throw Error(Errc::ParseError, "structure entries are [i, j, k, c]");
      const auto a = e[0].get<Index>(), b = e[1].get<Index>(), k = e[2].get<Index>();
      if (a < 0 || b < 0 || k < 0 || a >= dim || b >= dim || k >= dim)
        throw Error(Errc::ParseError, "structure index out of range");
      const Scalar c = parse_scalar(e[3].get<std::string>());
      if (c == 0) throw Error(Errc::ParseError, "structure constants must be nonzero");
      parts.structure[static_cast<std::size_t>(a * dim + b)].push_back({k, c});
    }
    return SuperAlgebra(std::move(parts));
  });
}

std::string dump_algebra(const SuperAlgebra& L) { return to_json(L).dump(); }

SuperAlgebra parse_algebra(std::string_view text) { return algebra_from_json(parse_json(text)); }

Json parse_json(std::string_view text) {
  return guarded([&] { return Json::parse(text); });
}

Json to_json(const SuperAlgebra& L, const RootTable& table) {
  auto weights = [](const std::vector<Weight>& ws) {
    Json out = Json::array();
    for (const auto& w : ws) out.push_back(to_json(w));
    return out;
  };
  Json j = family_fields(L.family());
  j["name"] = L.name();
  Json cartan = Json::array();
  for (Index h : L.cartan()) cartan.push_back(L.label(h));
  j["cartan"] = cartan;
  Json spaces = Json::array();
  for (const auto& [w, indices] : table.spaces) {
    Json labels = Json::array(), parity = Json::array();
    for (Index i : indices) {
      labels.push_back(L.label(i));
      parity.push_back(L.is_odd(i) ? 1 : 0);
    }
    spaces.push_back({{"weight", to_json(w)}, {"indices", indices}, {"labels", labels},
                      {"parity", parity}});
  }
  j["spaces"] = spaces;
  j["even_roots"] = weights(table.even_roots);
  j["odd_weights"] = weights(table.odd_weights);
  j["reductive_roots"] = weights(table.reductive_roots);
  j["simple_roots"] = weights(table.simple);
  Json degrees = Json::object();
  for (const auto& [k, ws] : table.by_degree) degrees[std::to_string(k)] = weights(ws);
  if (!table.by_degree.empty()) j["by_degree"] = degrees;
  Json components = Json::object();
  for (const auto& [k, ws] : table.components) components[std::to_string(k)] = weights(ws);
  if (!table.components.empty()) j["components"] = components;
  return j;
}

Json to_json(const GeneratorCertificate& c) {
  Json j = family_fields(c.family);
  j["algebra"] = c.algebra;
  j["recipe"] = recipe_name(c.recipe);
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(to_json(g));
  j["generators"] = gens;
  Json chosen = Json::array();
  for (const auto& w : c.chosen_weights) chosen.push_back(to_json(w));
  j["chosen_weights"] = chosen;
  Json sep = Json::array();
  for (const auto& [w, v] : c.separator) sep.push_back({{"weight", to_json(w)}, {"value", to_string(v)}});
  j["separator"] = sep;
  j["trace"] = c.trace;
  j["final_dim"] = c.final_dim;
  j["dim"] = c.ambient_dim;
  j["verdict"] = c.generated() ? "generated" : "not_generated";
  return j;
}

GeneratorCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    GeneratorCertificate c;
    c.family = family_from_json(j);
    c.algebra = j.value("algebra", std::string());
    c.recipe = parse_recipe(j.value("recipe", std::string("given")));
    for (const auto& g : j.at("generators")) c.generators.push_back(vector_from_json(g));
    if (j.contains("chosen_weights"))
      for (const auto& w : j.at("chosen_weights")) c.chosen_weights.push_back(weight_from_json(w));
    if (j.contains("separator"))
      for (const auto& s : j.at("separator"))
        c.separator.emplace_back(weight_from_json(s.at("weight")),
                                 parse_scalar(s.at("value").get<std::string>()));
    if (j.contains("trace")) c.trace = j.at("trace").get<std::vector<Index>>();
    c.final_dim = j.value("final_dim", Index(0));
    c.ambient_dim = j.value("dim", Index(0));
    return c;
  });
}

Json to_json(const StructureReport& r) {
  Json j{{"ok", r.ok()},
         {"parity_consistent", r.parity_consistent},
         {"skew_symmetric", r.skew_symmetric},
         {"jacobi", r.jacobi},
         {"jacobi_exhaustive", r.jacobi_exhaustive},
         {"jacobi_triples", r.jacobi_triples},
         {"cartan_eigenvectors", r.cartan_eigenvectors}};
  if (r.z_graded) j["z_graded"] = *r.z_graded;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

Json to_json(const Closure& c) {
  Json basis = Json::array();
  for (const auto& r : c.space.rows()) basis.push_back(to_json(r));
  return Json{{"dim", c.space.dim()}, {"ambient_dim", c.space.ambient()}, {"trace", c.trace},
              {"basis", basis}};
}

}  // namespace superlie
