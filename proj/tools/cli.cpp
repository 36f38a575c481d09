#include "cli.hpp"

#include <superlie/superlie.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace superlie::cli {
namespace {

struct FamilyArgs {
  std::vector<std::string> positional;
  std::string tag;
  std::optional<int> m;
  std::optional<int> n;
};

void add_family_options(CLI::App* sub, FamilyArgs& f) {
  sub->add_option("target", f.positional, "Family tag and parameters, e.g. A 1 0 or W 3");
  sub->add_option("--family", f.tag, "Family tag: gl A B C D P Q W S Stilde H");
  sub->add_option("--m", f.m, "First parameter of two-parameter families");
  sub->add_option("--n", f.n, "Last (or only) parameter");
}

bool one_parameter(const std::string& tag) {
  return tag == "C" || tag == "P" || tag == "Q" || tag == "W" || tag == "S" || tag == "Stilde" ||
         tag == "H";
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(Errc::BadParameters, "not an integer: " + s);
  return v;
}

AlgebraFamily resolve_family(const FamilyArgs& f) {
  if (!f.positional.empty()) {
    if (!f.tag.empty()) throw Error(Errc::BadParameters, "family given twice");
    std::vector<int> params;
    for (std::size_t i = 1; i < f.positional.size(); ++i) params.push_back(to_int(f.positional[i]));
    return parse_family(f.positional.front(), params);
  }
  if (f.tag.empty()) return std::monostate{};
  std::vector<int> params;
  if (!one_parameter(f.tag)) {
    if (!f.m) throw Error(Errc::BadParameters, "family " + f.tag + " needs --m");
    params.push_back(*f.m);
  } else if (f.m) {
    throw Error(Errc::BadParameters, "family " + f.tag + " takes only --n");
  }
  if (!f.n) throw Error(Errc::BadParameters, "family " + f.tag + " needs --n");
  params.push_back(*f.n);
  return parse_family(f.tag, params);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Algebra from --algebra, else from the family options, else from `fallback`.
SuperAlgebra load_algebra(const std::string& path, const FamilyArgs& f,
                          const AlgebraFamily& fallback = std::monostate{}) {
  const AlgebraFamily family = resolve_family(f);
  if (!path.empty()) {
    if (!std::holds_alternative<std::monostate>(family))
      throw Error(Errc::BadParameters, "give either --algebra or a family, not both");
    return parse_algebra(read_file(path));
  }
  if (!std::holds_alternative<std::monostate>(family)) return build_algebra(family);
  if (!std::holds_alternative<std::monostate>(fallback)) return build_algebra(fallback);
  throw Error(Errc::BadParameters, "no algebra: give a family or --algebra");
}

std::vector<SuperVector> read_generators(const std::string& path, Index dim) {
  const Json j = parse_json(read_file(path));
  const Json& list = j.is_object() ? j.at("generators") : j;
  if (!list.is_array()) throw Error(Errc::ParseError, "generators must be a list of vectors");
  std::vector<SuperVector> gens;
  for (const auto& g : list) {
    gens.push_back(vector_from_json(g));
    if (gens.back().size() != dim)
      throw Error(Errc::DimensionMismatch, "generator of length " +
                                               std::to_string(gens.back().size()) +
                                               " for an algebra of dim " + std::to_string(dim));
  }
  return gens;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw Error(Errc::BadParameters, "cannot write " + path_);
    file << text;
  }

 private:
  std::string path_;
  std::ostream& fallback_;
};

int verdict(const GeneratorCertificate& c) {
  return c.generated() ? exit_ok : exit_not_generated;
}

std::string sweep_table(const std::vector<SweepRow>& rows) {
  std::ostringstream s;
  s << std::left << std::setw(12) << "algebra" << std::setw(6) << "dim" << std::setw(11)
    << "structure" << std::setw(17) << "recipe" << std::setw(15) << "verdict" << std::setw(7)
    << "final" << "seconds\n";
  for (const auto& r : rows) {
    const std::string v = !r.error.empty() ? "error" : r.generated ? "generated" : "not_generated";
    s << std::left << std::setw(12) << r.name << std::setw(6) << r.dim << std::setw(11)
      << (r.structure_ok ? "ok" : "FAILED") << std::setw(17) << r.recipe << std::setw(15) << v
      << std::setw(7) << r.final_dim << std::fixed << std::setprecision(3) << r.seconds << "\n";
    if (!r.error.empty()) s << "  " << r.error << "\n";
  }
  return s.str();
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json j{{"algebra", r.name},         {"dim", r.dim},
           {"structure_ok", r.structure_ok}, {"recipe", r.recipe},
           {"generated", r.generated},  {"final_dim", r.final_dim},
           {"seconds", r.seconds}};
    if (!r.error.empty()) j["error"] = r.error;
    out.push_back(std::move(j));
  }
  return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction of Lie superalgebras and generator pairs", "superlie"};
  app.require_subcommand(1, 1);

  FamilyArgs family;
  std::string output, algebra_path, generators_path, certificate_path;
  bool homogeneous = false, even_part = false, as_json = false;

  auto* construct = app.add_subcommand("construct", "Write the structure table of an algebra");
  add_family_options(construct, family);
  construct->add_option("-o,--output", output, "Output file (default stdout)");

  auto* roots = app.add_subcommand("roots", "Write weight spaces, root sets and simple roots");
  add_family_options(roots, family);
  roots->add_option("--algebra", algebra_path, "Algebra JSON file");
  roots->add_option("-o,--output", output, "Output file (default stdout)");

  auto* pair = app.add_subcommand("pair", "Build a generator pair and its certificate");
  add_family_options(pair, family);
  pair->add_option("--algebra", algebra_path, "Algebra JSON file");
  auto* hom = pair->add_flag("--homogeneous", homogeneous, "Odd balanced x and even separating h");
  pair->add_flag("--even-part", even_part, "Pair generating the reductive part")->excludes(hom);
  pair->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Recompute the closure of a generator pair");
  add_family_options(verify, family);
  verify->add_option("--algebra", algebra_path, "Algebra JSON file");
  auto* cert_opt = verify->add_option("-c,--certificate", certificate_path, "Certificate JSON file");
  verify->add_option("-g,--generators", generators_path, "JSON list of coordinate vectors")
      ->excludes(cert_opt);
  verify->add_option("-o,--output", output, "Output file (default stdout)");

  auto* closure_cmd = app.add_subcommand("closure", "Subalgebra generated by a list of vectors");
  add_family_options(closure_cmd, family);
  closure_cmd->add_option("--algebra", algebra_path, "Algebra JSON file");
  closure_cmd->add_option("-g,--generators", generators_path, "JSON list of coordinate vectors")
      ->required();
  closure_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Construct, check and generate every sweep instance");
  sweep->add_flag("--json", as_json, "Write the summary as JSON");
  sweep->add_option("-o,--output", output, "Output file (default stdout)");

  auto* check = app.add_subcommand("check", "Run the structure checks");
  add_family_options(check, family);
  check->add_option("--algebra", algebra_path, "Algebra JSON file");
  check->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input_error;
  }

  Output sink(output, out);

  if (construct->parsed()) {
    const AlgebraFamily f = resolve_family(family);
    if (std::holds_alternative<std::monostate>(f))
      throw Error(Errc::BadParameters, "construct needs a family");
    sink.write(dump_algebra(build_algebra(f)) + "\n");
    return exit_ok;
  }
  if (roots->parsed()) {
    const SuperAlgebra L = load_algebra(algebra_path, family);
    sink.write(to_json(L, weight_table(L)).dump(2) + "\n");
    return exit_ok;
  }
  if (pair->parsed()) {
    const SuperAlgebra L = load_algebra(algebra_path, family);
    const GeneratorCertificate c = homogeneous ? homogeneous_pair(L)
                                   : even_part ? even_part_certificate(L)
                                               : generator_pair(L);
    sink.write(to_json(c).dump(2) + "\n");
    return verdict(c);
  }
  if (verify->parsed()) {
    GeneratorCertificate claimed;
    if (!certificate_path.empty())
      claimed = certificate_from_json(parse_json(read_file(certificate_path)));
    const SuperAlgebra L = load_algebra(algebra_path, family, claimed.family);
    if (certificate_path.empty()) {
      if (generators_path.empty())
        throw Error(Errc::BadParameters, "verify needs --certificate or --generators");
      claimed.family = L.family();
      claimed.generators = read_generators(generators_path, L.dim());
    }
    for (const auto& g : claimed.generators)
      if (g.size() != L.dim())
        throw Error(Errc::DimensionMismatch, "certificate generators do not match the algebra");
    const GeneratorCertificate c = verify_certificate(L, claimed);
    sink.write(to_json(c).dump(2) + "\n");
    return verdict(c);
  }
  if (closure_cmd->parsed()) {
    const SuperAlgebra L = load_algebra(algebra_path, family);
    const auto gens = read_generators(generators_path, L.dim());
    sink.write(to_json(closure(L, gens)).dump(2) + "\n");
    return exit_ok;
  }
  if (sweep->parsed()) {
    std::vector<SweepRow> rows;
    for (const auto& f : sweep_instances()) rows.push_back(sweep_instance(f));
    sink.write(as_json ? sweep_json(rows).dump(2) + "\n" : sweep_table(rows));
    for (const auto& r : rows)
      if (!r.error.empty()) return exit_internal_error;
    for (const auto& r : rows)
      if (!r.generated || !r.structure_ok) return exit_not_generated;
    return exit_ok;
  }
  if (check->parsed()) {
    const SuperAlgebra L = load_algebra(algebra_path, family);
    const StructureReport report = check_structure(L);
    sink.write(to_json(report).dump(2) + "\n");
    return report.ok() ? exit_ok : exit_not_generated;
  }
  return exit_input_error;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const Error& e) {
    err << "superlie: " << e.what() << "\n";
    return e.is_input_error() ? exit_input_error : exit_internal_error;
  } catch (const std::exception& e) {
    err << "superlie: internal error: " << e.what() << "\n";
    return exit_internal_error;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace superlie::cli
