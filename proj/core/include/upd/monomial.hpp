#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "upd/ring.hpp"
#include "upd/types.hpp"

namespace upd {

// An exponent vector over a fixed ring context. The all-zero vector is the
// unit monomial 1. Entries are never negative.
struct Monomial {
  std::vector<Integer> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<Integer> e) : exponents(std::move(e)) {}

  static Monomial one(std::size_t dim) {
    return Monomial(std::vector<Integer>(dim, Integer(0)));
  }

  std::size_t dim() const { return exponents.size(); }

  bool is_one() const {
    for (const auto& e : exponents) {
      if (e != 0) return false;
    }
    return true;
  }

  Integer degree() const {
    Integer d = 0;
    for (const auto& e : exponents) d += e;
    return d;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mul(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// a / gcd(a, b): the generator contribution to the colon ideal (I : b).
Monomial colon_quotient(const Monomial& a, const Monomial& b);

// Exponents clamped to {0, 1}; spans the same set of variables.
Monomial support(const Monomial& m);

// Canonical generator order: total degree first, then within a degree the
// lexicographically larger exponent vector comes first (so x^2 precedes x*y
// precedes y^2). Strict total order on distinct monomials.
bool mono_less(const Monomial& a, const Monomial& b);

// Fixed report format: `x^2*y` style, exponent 1 elided, unit rendered "1".
std::string to_string(const RingContext& ctx, const Monomial& m);

}  // namespace upd
