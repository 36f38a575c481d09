#include <superlie/cartan.hpp>
#include <superlie/classical.hpp>
#include <superlie/sweep.hpp>

#include <chrono>

namespace superlie {

SuperAlgebra build_algebra(const AlgebraFamily& family) {
  if (const auto* c = std::get_if<FamilySpec>(&family)) return build_classical(*c);
  if (const auto* c = std::get_if<CartanFamilySpec>(&family)) return build_cartan(*c);
  throw Error(Errc::BadParameters, "no family given");
}

std::vector<AlgebraFamily> sweep_instances() {
  using CF = ClassicalFamily;
  using KF = CartanFamily;
  return {
      FamilySpec{CF::A, 1, 0},       FamilySpec{CF::A, 2, 1},       FamilySpec{CF::A, 1, 1},
      FamilySpec{CF::A, 2, 2},       FamilySpec{CF::B, 0, 1},       FamilySpec{CF::B, 1, 1},
      FamilySpec{CF::B, 2, 1},       FamilySpec{CF::C, 0, 2},       FamilySpec{CF::C, 0, 3},
      FamilySpec{CF::D, 2, 1},       FamilySpec{CF::P, 0, 2},       FamilySpec{CF::P, 0, 3},
      FamilySpec{CF::Q, 0, 2},       FamilySpec{CF::Q, 0, 3},       CartanFamilySpec{KF::W, 3},
      CartanFamilySpec{KF::W, 4},    CartanFamilySpec{KF::S, 4},    CartanFamilySpec{KF::Stilde, 4},
      CartanFamilySpec{KF::H, 5},    CartanFamilySpec{KF::H, 6},    CartanFamilySpec{KF::H, 7},
  };
}

SweepRow sweep_instance(const AlgebraFamily& family) {
  const auto start = std::chrono::steady_clock::now();
  SweepRow row;
  row.name = algebra_name(family);
  try {
    const SuperAlgebra L = build_algebra(family);
    row.dim = L.dim();
    row.structure_ok = check_structure(L).ok();
    const GeneratorCertificate c = generator_pair(L);
    row.recipe = recipe_name(c.recipe);
    row.generated = c.generated();
    row.final_dim = c.final_dim;
  } catch (const Error& e) {
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace superlie
