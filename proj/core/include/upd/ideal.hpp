#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "upd/monomial.hpp"
#include "upd/ring.hpp"
#include "upd/types.hpp"

namespace upd {

// A monomial ideal in canonical form: the unique minimal generating set (no
// generator divides another), sorted by mono_less. Empty generators denote
// the zero ideal; {1} denotes the unit ideal. Two ideals over equal contexts
// are equal iff their generator lists are identical. Immutable value type.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(ContextPtr ctx);
  static MonomialIdeal unit(ContextPtr ctx);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const;

  // Per-variable maximum exponent over the generators; all zero for the
  // zero and unit ideals.
  std::vector<Integer> max_exponents() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  friend MonomialIdeal minimalize(ContextPtr, std::vector<Monomial>);

  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> canonical_gens)
      : ctx_(std::move(ctx)), gens_(std::move(canonical_gens)) {}

  ContextPtr ctx_;
  std::vector<Monomial> gens_;
};

// Canonicalizes an arbitrary generating set; the generated ideal is
// unchanged. Rejects generators whose dimension disagrees with the context.
MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens);

bool ideal_leq(const MonomialIdeal& a, const MonomialIdeal& b);  // a subset of b

inline bool ideal_eq(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a == b;
}

// Deterministic total order used to sort component lists and prime sets:
// lexicographic over the canonical generator lists.
bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::uint64_t k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// (a : b) = intersection over generators g of b of (a : g); rejects b = 0.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& g);

struct SaturationResult {
  MonomialIdeal ideal;      // (a : b^inf)
  std::uint64_t stab_index; // least l with (a : b^l) = (a : b^{l+1})
};

// Ascending colon chain (a : b) in (a : b^2) in ... stabilizes; returns the
// limit and the first index where consecutive terms agree. stab_index 0
// means b is regular modulo a. Rejects b = 0.
SaturationResult saturate(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal radical(const MonomialIdeal& a);

std::vector<std::string> gen_strings(const MonomialIdeal& a);
std::string to_string(const MonomialIdeal& a);  // "0" for the zero ideal

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& a);

}  // namespace upd
