#pragma once

#include <superlie/error.hpp>
#include <superlie/scalar.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace superlie {

/// x^u = xi_{i1} ... xi_{ik} for the increasing sequence u of set bits;
/// bit i-1 stands for xi_i.
struct Monomial {
  std::uint32_t mask = 0;

  int degree() const { return std::popcount(mask); }
  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial monomial(std::initializer_list<int> indices) {
  Monomial m;
  for (int i : indices) m.mask |= 1u << (i - 1);
  return m;
}

/// Element of the Grassmann superalgebra Lambda(n).
struct GrassmannElement {
  int arity = 0;
  std::map<Monomial, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add(Monomial u, const Scalar& c);
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;
};

GrassmannElement generator(int arity, int i);
GrassmannElement constant(int arity, const Scalar& c);
GrassmannElement monomial_element(int arity, Monomial u, const Scalar& c = Scalar(1));

/// One term x^u d/dxi_target of a superderivation.
struct DerivationTerm {
  Monomial u;
  int target = 1;

  int parity() const { return (u.degree() + 1) % 2; }
  int degree() const { return u.degree() - 1; }

  friend auto operator<=>(const DerivationTerm&, const DerivationTerm&) = default;
};

/// sum c * x^u d/dxi_i, an element of W(n) = der Lambda(n).
struct Superderivation {
  int arity = 0;
  std::map<DerivationTerm, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const DerivationTerm& t, const Scalar& c);
  Superderivation& operator+=(const Superderivation& other);
  Superderivation& operator*=(const Scalar& c);
  friend Superderivation operator+(Superderivation a, const Superderivation& b) { return a += b; }
  friend Superderivation operator-(Superderivation a, const Superderivation& b);
  friend Superderivation operator*(const Scalar& c, Superderivation d) { return d *= c; }
  friend bool operator==(const Superderivation&, const Superderivation&) = default;

  /// Parity if every term shares it, -1 otherwise (or for zero).
  int parity() const;
  /// Z-degree if every term shares it; throws otherwise.
  int degree() const;
};

Superderivation derivation_term(int arity, Monomial u, int target, const Scalar& c = Scalar(1));

/// Sign and product of two monomials; sign 0 when they share a generator.
struct MonomialProduct {
  int sign = 0;
  Monomial product;
};
MonomialProduct multiply(Monomial a, Monomial b);

GrassmannElement g_mul(const GrassmannElement& a, const GrassmannElement& b);

/// Left derivative d/dxi_i.
GrassmannElement partial(int i, const GrassmannElement& f);

/// D(f) for a superderivation D.
GrassmannElement apply(const Superderivation& d, const GrassmannElement& f);

/// [D1, D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1, extended bilinearly over terms.
Superderivation sd_bracket(const Superderivation& d1, const Superderivation& d2);

/// D_ij(f) = d(f)/dxi_i d/dxi_j + d(f)/dxi_j d/dxi_i.
Superderivation d_ij(int i, int j, const GrassmannElement& f);

/// i -> i' with i' = i+m, (i+m)' = i, and (2m+1)' = 2m+1 for odd n = 2m+1.
std::vector<int> hamiltonian_involution(int n);

/// D_H(x^u) = (-1)^{|u|} sum_i d(x^u)/dxi_i d/dxi_{i'}; involution is 1-based
/// (involution[0] unused) and must be an involution of {1..n}.
Superderivation d_h(int arity, Monomial u, const std::vector<int>& involution);

/// Position of x^u d_i in the monomial basis of W(n): mask * n + (i - 1).
inline Index w_index(int arity, const DerivationTerm& t) {
  return static_cast<Index>(t.u.mask) * arity + (t.target - 1);
}
inline DerivationTerm w_term(int arity, Index index) {
  return {Monomial{static_cast<std::uint32_t>(index / arity)}, static_cast<int>(index % arity) + 1};
}

std::string to_string(Monomial u);
std::string to_string(const GrassmannElement& f);
std::string to_string(const Superderivation& d);

}  // namespace superlie
