#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "upd/ideal.hpp"
#include "upd/monomial.hpp"
#include "upd/ring.hpp"
#include "upd/staircase.hpp"

namespace upd::testing {

inline const ContextPtr& ctx1() {
  static const ContextPtr c = make_ring_context({"x"});
  return c;
}

inline const ContextPtr& ctx2() {
  static const ContextPtr c = make_ring_context({"x", "y"});
  return c;
}

inline const ContextPtr& ctx3() {
  static const ContextPtr c = make_ring_context({"x", "y", "z"});
  return c;
}

// Inverse of the report rendering, for terse test fixtures: "x^2*y", "1".
inline Monomial mono(const ContextPtr& ctx, const std::string& text) {
  Monomial m = Monomial::one(ctx->dim());
  if (text == "1") return m;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t star = text.find('*', i);
    if (star == std::string::npos) star = text.size();
    std::string factor = text.substr(i, star - i);
    std::size_t caret = factor.find('^');
    std::string name =
        caret == std::string::npos ? factor : factor.substr(0, caret);
    Integer exp =
        caret == std::string::npos ? 1 : Integer(factor.substr(caret + 1));
    bool found = false;
    for (std::size_t v = 0; v < ctx->dim(); ++v) {
      if (ctx->var_name(v) == name) {
        m.exponents[v] += exp;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("unknown variable " + name);
    i = star + 1;
  }
  return m;
}

inline MonomialIdeal ideal(const ContextPtr& ctx,
                           const std::vector<std::string>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) ms.push_back(mono(ctx, g));
  return minimalize(ctx, std::move(ms));
}

// Staircase agreement with an expected membership predicate, the pattern all
// derived fixtures are checked with.
template <class Member>
bool staircase_matches(const MonomialIdeal& computed, std::uint64_t bound,
                       Member&& member) {
  for (const auto& m :
       enumerate_monomials(computed.context()->dim(), bound)) {
    if (computed.contains(m) != member(m)) return false;
  }
  return true;
}

}  // namespace upd::testing
