#pragma once

#include <superlie/genpair.hpp>
#include <superlie/superalgebra.hpp>

#include <string>
#include <vector>

namespace superlie {

/// Builds a classical or Cartan family; throws Error(BadParameters) otherwise.
SuperAlgebra build_algebra(const AlgebraFamily& family);

/// The instances of the generation sweep.
std::vector<AlgebraFamily> sweep_instances();

struct SweepRow {
  std::string name;
  Index dim = 0;
  bool structure_ok = false;
  std::string recipe;
  bool generated = false;
  Index final_dim = 0;
  double seconds = 0;
  /// Set when construction or the recipe threw.
  std::string error;
};

SweepRow sweep_instance(const AlgebraFamily& family);

}  // namespace superlie
