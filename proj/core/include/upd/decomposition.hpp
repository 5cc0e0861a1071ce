#pragma once

#include <optional>
#include <vector>

#include "upd/ideal.hpp"

namespace upd {

// A P-primary piece of a decomposition. The prime is a monomial prime
// (generated by a subset of the variables, or the zero ideal) and equals the
// radical of the component.
struct PrimaryComponent {
  MonomialIdeal prime;
  MonomialIdeal component;
};

struct PrimaryDecomposition {
  MonomialIdeal ideal;
  std::vector<PrimaryComponent> components;  // sorted by prime
  bool irredundant = false;
  bool minimal = false;
};

// Decompositions of embedded components are not unique, so determinism has to
// come from the splitting pivot, not the mathematics. The default rule picks
// the first generator (canonical order) with mixed support and splits off the
// pure power of its lowest-index variable; the alternate rule works from the
// other end and exists to produce genuinely different component choices for
// the compatibility tests.
enum class PivotRule {
  FirstMixedLowestVar,
  LastMixedHighestVar,
};

// Splits until every component is generated by pure variable powers; the
// returned list is irredundant and sorted. The zero ideal decomposes as
// itself; the unit ideal is rejected.
std::vector<MonomialIdeal> irreducible_decomposition(
    const MonomialIdeal& ideal, PivotRule rule = PivotRule::FirstMixedLowestVar);

// Radicals of the irreducible components; for monomial ideals this is exactly
// Ass(A/I). The zero ideal yields {(0)}; the unit ideal is rejected.
std::vector<MonomialIdeal> associated_primes(const MonomialIdeal& ideal);

// Groups irreducible components by radical, intersects each group, then
// enforces irredundancy by drop-one pruning. The intersection of the returned
// components is exactly the input.
PrimaryDecomposition primary_decomposition(
    const MonomialIdeal& ideal, PivotRule rule = PivotRule::FirstMixedLowestVar);

// The unique associated prime when there is exactly one, otherwise empty.
std::optional<MonomialIdeal> is_primary(const MonomialIdeal& ideal);

// Assembles one caller-chosen P-primary component per associated prime into a
// decomposition, verifying everything instead of trusting it: the picks must
// cover exactly Ass(A/I), each must be primary for its prime, their
// intersection must equal the ideal, and no pick may be redundant. Throws
// IntersectionMismatch / NotPrimary errors otherwise.
PrimaryDecomposition assemble(const MonomialIdeal& ideal,
                              const std::vector<PrimaryComponent>& picks);

}  // namespace upd
