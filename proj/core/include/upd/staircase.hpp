#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "upd/ideal.hpp"
#include "upd/monomial.hpp"

namespace upd {

// Brute-force ground truth for the ideal arithmetic: everything here works by
// exhaustive enumeration and raw divisibility against generator lists, never
// through the operations it is used to check.

// All monomials of total degree <= bound, in canonical order.
std::vector<Monomial> enumerate_monomials(std::size_t dim, std::uint64_t bound);

// The exact set of monomials of total degree <= bound lying in the ideal.
std::vector<Monomial> staircase(const MonomialIdeal& ideal, std::uint64_t bound);

// Membership in (I : J^inf) without computing any colon: a monomial m lies in
// the saturation by a single generator g iff some generator h of I bounds m
// on every variable outside supp(g); saturating by J intersects these
// conditions over the generators of J.
bool saturation_member(const MonomialIdeal& ideal, const MonomialIdeal& by,
                       const Monomial& m);

// Membership in the radical: some generator's support is contained in m's.
bool radical_member(const MonomialIdeal& ideal, const Monomial& m);

}  // namespace upd
