#include "upd/decomposition.hpp"

#include <algorithm>
#include <map>

#include "upd/errors.hpp"

namespace upd {

namespace {

bool is_pure_power(const Monomial& m) {
  std::size_t nonzero = 0;
  for (const auto& e : m.exponents) {
    if (e != 0) ++nonzero;
  }
  return nonzero <= 1;
}

// Index of the pivot generator under the given rule, or npos when every
// generator is a pure power (the ideal is irreducible).
std::size_t pick_pivot(const MonomialIdeal& ideal, PivotRule rule) {
  const auto& gens = ideal.gens();
  if (rule == PivotRule::FirstMixedLowestVar) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!is_pure_power(gens[i])) return i;
    }
  } else {
    for (std::size_t i = gens.size(); i-- > 0;) {
      if (!is_pure_power(gens[i])) return i;
    }
  }
  return static_cast<std::size_t>(-1);
}

void split_rec(const MonomialIdeal& ideal, PivotRule rule,
               std::vector<MonomialIdeal>& out) {
  const std::size_t pivot = pick_pivot(ideal, rule);
  if (pivot == static_cast<std::size_t>(-1)) {
    out.push_back(ideal);
    return;
  }
  const Monomial& g = ideal.gens()[pivot];
  std::size_t var = 0;
  if (rule == PivotRule::FirstMixedLowestVar) {
    while (g.exponents[var] == 0) ++var;
  } else {
    var = g.dim();
    while (g.exponents[--var] == 0) {
    }
  }
  Monomial pure = Monomial::one(g.dim());
  pure.exponents[var] = g.exponents[var];
  Monomial rest = g;
  rest.exponents[var] = 0;

  for (const Monomial& extra : {pure, rest}) {
    std::vector<Monomial> gens = ideal.gens();
    gens.push_back(extra);
    split_rec(minimalize(ideal.context(), std::move(gens)), rule, out);
  }
}

MonomialIdeal intersect_all(const ContextPtr& ctx,
                            const std::vector<MonomialIdeal>& parts,
                            std::size_t skip = static_cast<std::size_t>(-1)) {
  MonomialIdeal acc = MonomialIdeal::unit(ctx);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == skip) continue;
    acc = intersect(acc, parts[i]);
  }
  return acc;
}

// Drops every member containing the intersection of the others. Restarts
// after each drop so the test always runs against the surviving list.
void prune_redundant(const ContextPtr& ctx, std::vector<MonomialIdeal>& parts) {
  bool dropped = true;
  while (dropped && parts.size() > 1) {
    dropped = false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (ideal_leq(intersect_all(ctx, parts, i), parts[i])) {
        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
        dropped = true;
        break;
      }
    }
  }
}

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) {
    throw Error(ErrorKind::UnitIdeal, "the unit ideal has no decomposition");
  }
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal,
                                                     PivotRule rule) {
  require_proper(ideal);
  if (ideal.is_zero()) return {ideal};
  std::vector<MonomialIdeal> out;
  split_rec(ideal, rule, out);
  std::sort(out.begin(), out.end(), ideal_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  prune_redundant(ideal.context(), out);
  return out;
}

std::vector<MonomialIdeal> associated_primes(const MonomialIdeal& ideal) {
  std::vector<MonomialIdeal> primes;
  for (const auto& comp : irreducible_decomposition(ideal)) {
    primes.push_back(radical(comp));
  }
  std::sort(primes.begin(), primes.end(), ideal_less);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

PrimaryDecomposition primary_decomposition(const MonomialIdeal& ideal,
                                           PivotRule rule) {
  require_proper(ideal);
  std::map<MonomialIdeal, std::vector<MonomialIdeal>,
           bool (*)(const MonomialIdeal&, const MonomialIdeal&)>
      groups(ideal_less);
  for (const auto& comp : irreducible_decomposition(ideal, rule)) {
    groups[radical(comp)].push_back(comp);
  }
  std::vector<MonomialIdeal> merged;
  std::vector<MonomialIdeal> primes;
  for (const auto& [prime, members] : groups) {
    merged.push_back(intersect_all(ideal.context(), members));
    primes.push_back(prime);
  }
  // Grouping by radical can in principle leave a redundant embedded
  // component; drop-one pruning restores irredundancy.
  for (std::size_t i = 0; i < merged.size();) {
    if (merged.size() > 1 &&
        ideal_leq(intersect_all(ideal.context(), merged, i), merged[i])) {
      merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(i));
      primes.erase(primes.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::vector<PrimaryComponent> components;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    components.push_back({primes[i], merged[i]});
  }
  return PrimaryDecomposition{ideal, std::move(components), true, true};
}

std::optional<MonomialIdeal> is_primary(const MonomialIdeal& ideal) {
  require_proper(ideal);
  auto primes = associated_primes(ideal);
  if (primes.size() == 1) return primes.front();
  return std::nullopt;
}

PrimaryDecomposition assemble(const MonomialIdeal& ideal,
                              const std::vector<PrimaryComponent>& picks) {
  require_proper(ideal);
  std::vector<MonomialIdeal> pick_primes;
  for (const auto& pick : picks) {
    pick_primes.push_back(pick.prime);
  }
  std::sort(pick_primes.begin(), pick_primes.end(), ideal_less);
  if (std::adjacent_find(pick_primes.begin(), pick_primes.end()) !=
      pick_primes.end()) {
    throw Error(ErrorKind::IntersectionMismatch,
                "duplicate prime among the picks");
  }
  if (pick_primes != associated_primes(ideal)) {
    throw Error(ErrorKind::IntersectionMismatch,
                "picks do not cover the associated primes of the ideal");
  }
  for (const auto& pick : picks) {
    if (pick.component.is_unit()) {
      throw Error(ErrorKind::NotPrimary, "a pick is the unit ideal");
    }
    auto prime = is_primary(pick.component);
    if (!prime || !(*prime == pick.prime)) {
      throw Error(ErrorKind::NotPrimary,
                  "pick for prime (" + to_string(pick.prime) +
                      ") is not primary for it");
    }
  }
  std::vector<MonomialIdeal> components;
  for (const auto& pick : picks) {
    components.push_back(pick.component);
  }
  if (!(intersect_all(ideal.context(), components) == ideal)) {
    throw Error(ErrorKind::IntersectionMismatch,
                "intersection of the picks differs from the ideal");
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components.size() > 1 &&
        intersect_all(ideal.context(), components, i) == ideal) {
      throw Error(ErrorKind::IntersectionMismatch,
                  "pick for prime (" + to_string(picks[i].prime) +
                      ") is redundant");
    }
  }
  PrimaryDecomposition dec{ideal, picks, true, true};
  std::sort(dec.components.begin(), dec.components.end(),
            [](const PrimaryComponent& a, const PrimaryComponent& b) {
              return ideal_less(a.prime, b.prime);
            });
  return dec;
}

}  // namespace upd
