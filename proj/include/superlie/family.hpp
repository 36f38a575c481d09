#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace superlie {

enum class ClassicalFamily { gl, A, B, C, D, P, Q };
enum class CartanFamily { W, S, Stilde, H };

/// Classical family with its integer parameters. One-parameter families
/// (C, P, Q) use `n` only. For gl, (m, n) are the block sizes of gl(m|n).
struct FamilySpec {
  ClassicalFamily family = ClassicalFamily::A;
  int m = 0;
  int n = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Cartan family with its arity (2m for Stilde).
struct CartanFamilySpec {
  CartanFamily family = CartanFamily::W;
  int n = 0;

  /// Height s of the Z-grading L_{-1} + ... + L_s.
  int height() const;

  friend bool operator==(const CartanFamilySpec&, const CartanFamilySpec&) = default;
};

using AlgebraFamily = std::variant<std::monostate, FamilySpec, CartanFamilySpec>;

/// Throws Error(BadParameters) naming the violated range constraint.
void validate(const FamilySpec& spec);
void validate(const CartanFamilySpec& spec);

std::string family_tag(const AlgebraFamily& family);
std::vector<int> family_params(const AlgebraFamily& family);
std::string algebra_name(const AlgebraFamily& family);

/// Builds a family from a CLI tag ("A", "gl", "Stilde", ...) and its
/// parameters; validates ranges.
AlgebraFamily parse_family(std::string_view tag, const std::vector<int>& params);

}  // namespace superlie
