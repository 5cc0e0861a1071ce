#include "upd/monomial.hpp"

#include <algorithm>

namespace upd {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    if (a.exponents[i] > b.exponents[i]) return false;
  }
  return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    r.exponents[i] += b.exponents[i];
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    if (b.exponents[i] > r.exponents[i]) r.exponents[i] = b.exponents[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    if (b.exponents[i] < r.exponents[i]) r.exponents[i] = b.exponents[i];
  }
  return r;
}

Monomial colon_quotient(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    const Integer& common = std::min(a.exponents[i], b.exponents[i]);
    r.exponents[i] -= common;
  }
  return r;
}

Monomial support(const Monomial& m) {
  Monomial r = m;
  for (auto& e : r.exponents) {
    if (e > 1) e = 1;
  }
  return r;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  const Integer da = a.degree();
  const Integer db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(),
                                      a.exponents.begin(), a.exponents.end());
}

std::string to_string(const RingContext& ctx, const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.var_name(i);
    if (m.exponents[i] != 1) {
      out += '^';
      out += m.exponents[i].str();
    }
  }
  return out;
}

}  // namespace upd
