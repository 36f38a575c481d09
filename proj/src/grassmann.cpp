#include <superlie/grassmann.hpp>

namespace superlie {

namespace {

void check_index(int arity, int i) {
  if (i < 1 || i > arity)
    throw Error(Errc::IndexOutOfRange,
                "index " + std::to_string(i) + " outside 1.." + std::to_string(arity));
}

void check_arity(int a, int b) {
  if (a != b)
    throw Error(Errc::MixedArity, "arities " + std::to_string(a) + " and " + std::to_string(b));
}

// Number of set bits of `mask` strictly below bit position `bit`.
int bits_below(std::uint32_t mask, int bit) {
  return std::popcount(mask & ((1u << bit) - 1u));
}

struct Derivative {
  int sign = 0;
  Monomial rest;
};

Derivative differentiate(int i, Monomial u) {
  if (!u.contains(i)) return {};
  const int bit = i - 1;
  return {bits_below(u.mask, bit) % 2 ? -1 : 1, Monomial{u.mask & ~(1u << bit)}};
}

}  // namespace

void GrassmannElement::add(Monomial u, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

GrassmannElement generator(int arity, int i) {
  check_index(arity, i);
  return monomial_element(arity, monomial({i}));
}

GrassmannElement constant(int arity, const Scalar& c) {
  return monomial_element(arity, Monomial{}, c);
}

GrassmannElement monomial_element(int arity, Monomial u, const Scalar& c) {
  GrassmannElement f{arity, {}};
  f.add(u, c);
  return f;
}

void Superderivation::add(const DerivationTerm& t, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Superderivation& Superderivation::operator+=(const Superderivation& other) {
  check_arity(arity, other.arity);
  for (const auto& [t, c] : other.terms) add(t, c);
  return *this;
}

Superderivation& Superderivation::operator*=(const Scalar& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms) coeff *= c;
  return *this;
}

Superderivation operator-(Superderivation a, const Superderivation& b) {
  check_arity(a.arity, b.arity);
  for (const auto& [t, c] : b.terms) a.add(t, -c);
  return a;
}

int Superderivation::parity() const {
  if (terms.empty()) return -1;
  const int p = terms.begin()->first.parity();
  for (const auto& [t, c] : terms)
    if (t.parity() != p) return -1;
  return p;
}

int Superderivation::degree() const {
  if (terms.empty()) throw Error(Errc::ShapeMismatch, "zero derivation has no degree");
  const int d = terms.begin()->first.degree();
  for (const auto& [t, c] : terms)
    if (t.degree() != d) throw Error(Errc::ShapeMismatch, "derivation is not Z-homogeneous");
  return d;
}

Superderivation derivation_term(int arity, Monomial u, int target, const Scalar& c) {
  check_index(arity, target);
  Superderivation d{arity, {}};
  d.add({u, target}, c);
  return d;
}

MonomialProduct multiply(Monomial a, Monomial b) {
  if (a.mask & b.mask) return {};
  // Moving each generator of b left past the larger generators of a.
  int swaps = 0;
  for (std::uint32_t rest = b.mask; rest; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    swaps += std::popcount(a.mask >> (bit + 1));
  }
  return {swaps % 2 ? -1 : 1, Monomial{a.mask | b.mask}};
}

GrassmannElement g_mul(const GrassmannElement& a, const GrassmannElement& b) {
  check_arity(a.arity, b.arity);
  GrassmannElement out{a.arity, {}};
  for (const auto& [u, cu] : a.terms)
    for (const auto& [v, cv] : b.terms) {
      const auto p = multiply(u, v);
      if (p.sign != 0) out.add(p.product, p.sign > 0 ? Scalar(cu * cv) : Scalar(-(cu * cv)));
    }
  return out;
}

GrassmannElement partial(int i, const GrassmannElement& f) {
  check_index(f.arity, i);
  GrassmannElement out{f.arity, {}};
  for (const auto& [u, c] : f.terms) {
    const auto d = differentiate(i, u);
    if (d.sign != 0) out.add(d.rest, d.sign > 0 ? c : Scalar(-c));
  }
  return out;
}

GrassmannElement apply(const Superderivation& d, const GrassmannElement& f) {
  check_arity(d.arity, f.arity);
  GrassmannElement out{f.arity, {}};
  for (const auto& [t, c] : d.terms) {
    const GrassmannElement df = partial(t.target, f);
    for (const auto& [v, cv] : df.terms) {
      const auto p = multiply(t.u, v);
      if (p.sign != 0) out.add(p.product, p.sign > 0 ? Scalar(c * cv) : Scalar(-(c * cv)));
    }
  }
  return out;
}

Superderivation sd_bracket(const Superderivation& d1, const Superderivation& d2) {
  check_arity(d1.arity, d2.arity);
  Superderivation out{d1.arity, {}};
  // [f d_i, g d_j] = f d_i(g) d_j - (-1)^{|f d_i||g d_j|} g d_j(f) d_i
  for (const auto& [a, ca] : d1.terms)
    for (const auto& [b, cb] : d2.terms) {
      const Scalar c = ca * cb;
      if (const auto dg = differentiate(a.target, b.u); dg.sign != 0) {
        const auto p = multiply(a.u, dg.rest);
        if (p.sign != 0) out.add({p.product, b.target}, dg.sign * p.sign > 0 ? c : Scalar(-c));
      }
      if (const auto df = differentiate(b.target, a.u); df.sign != 0) {
        const auto p = multiply(b.u, df.rest);
        if (p.sign != 0) {
          const int swap = (a.parity() * b.parity()) % 2 ? -1 : 1;
          out.add({p.product, a.target}, -swap * df.sign * p.sign > 0 ? c : Scalar(-c));
        }
      }
    }
  return out;
}

Superderivation d_ij(int i, int j, const GrassmannElement& f) {
  check_index(f.arity, i);
  check_index(f.arity, j);
  Superderivation out{f.arity, {}};
  for (const auto& [u, c] : partial(i, f).terms) out.add({u, j}, c);
  for (const auto& [u, c] : partial(j, f).terms) out.add({u, i}, c);
  return out;
}

std::vector<int> hamiltonian_involution(int n) {
  if (n < 1) throw Error(Errc::IndexOutOfRange, "involution needs n >= 1");
  const int m = n / 2;
  std::vector<int> prime(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= m; ++i) {
    prime[static_cast<std::size_t>(i)] = i + m;
    prime[static_cast<std::size_t>(i + m)] = i;
  }
  if (n % 2) prime[static_cast<std::size_t>(n)] = n;
  return prime;
}

Superderivation d_h(int arity, Monomial u, const std::vector<int>& involution) {
  if (static_cast<int>(involution.size()) != arity + 1)
    throw Error(Errc::IndexOutOfRange, "involution table must cover 1.." + std::to_string(arity));
  if (arity < 32 && (u.mask >> arity) != 0)
    throw Error(Errc::IndexOutOfRange, "monomial uses generators beyond arity");
  Superderivation out{arity, {}};
  const bool negate = u.degree() % 2;
  for (int i = 1; i <= arity; ++i) {
    const int target = involution[static_cast<std::size_t>(i)];
    check_index(arity, target);
    const auto d = differentiate(i, u);
    if (d.sign == 0) continue;
    out.add({d.rest, target}, Scalar((d.sign > 0) != negate ? 1 : -1));
  }
  return out;
}

std::string to_string(Monomial u) {
  if (u.mask == 0) return "1";
  std::string out;
  for (int i = 1; i <= 32; ++i)
    if (u.contains(i)) out += (out.empty() ? "x" : "*x") + std::to_string(i);
  return out;
}

std::string to_string(const GrassmannElement& f) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [u, c] : f.terms) terms.emplace_back(c, u.mask ? to_string(u) : "");
  return format_combination(terms);
}

std::string to_string(const Superderivation& d) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [t, c] : d.terms)
    terms.emplace_back(c, (t.u.mask ? to_string(t.u) + " " : "") + "d" + std::to_string(t.target));
  return format_combination(terms);
}

}  // namespace superlie
