#include "upd/staircase.hpp"

#include <algorithm>

namespace upd {

namespace {

void enumerate_rec(std::size_t var, std::uint64_t budget, Monomial& scratch,
                   std::vector<Monomial>& out) {
  if (var == scratch.dim()) {
    out.push_back(scratch);
    return;
  }
  for (std::uint64_t e = 0; e <= budget; ++e) {
    scratch.exponents[var] = e;
    enumerate_rec(var + 1, budget - e, scratch, out);
  }
  scratch.exponents[var] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(std::size_t dim,
                                          std::uint64_t bound) {
  std::vector<Monomial> out;
  Monomial scratch = Monomial::one(dim);
  enumerate_rec(0, bound, scratch, out);
  std::sort(out.begin(), out.end(), mono_less);
  return out;
}

std::vector<Monomial> staircase(const MonomialIdeal& ideal,
                                std::uint64_t bound) {
  std::vector<Monomial> out;
  for (auto& m : enumerate_monomials(ideal.context()->dim(), bound)) {
    bool inside = false;
    for (const auto& g : ideal.gens()) {
      if (divides(g, m)) {
        inside = true;
        break;
      }
    }
    if (inside) out.push_back(std::move(m));
  }
  return out;
}

bool saturation_member(const MonomialIdeal& ideal, const MonomialIdeal& by,
                       const Monomial& m) {
  // m g^l eventually lands in I iff some generator h of I already divides m
  // on the variables g cannot grow. Summing the per-generator exponents over
  // a product of generators of J always concentrates enough of one g_i, so
  // (I : J^inf) is the intersection of the single-generator saturations.
  for (const auto& g : by.gens()) {
    bool ok = false;
    for (const auto& h : ideal.gens()) {
      bool bounded = true;
      for (std::size_t v = 0; v < m.dim(); ++v) {
        if (g.exponents[v] == 0 && h.exponents[v] > m.exponents[v]) {
          bounded = false;
          break;
        }
      }
      if (bounded) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool radical_member(const MonomialIdeal& ideal, const Monomial& m) {
  for (const auto& h : ideal.gens()) {
    bool contained = true;
    for (std::size_t v = 0; v < m.dim(); ++v) {
      if (h.exponents[v] > 0 && m.exponents[v] == 0) {
        contained = false;
        break;
      }
    }
    if (contained) return true;
  }
  return false;
}

}  // namespace upd
