#pragma once

#include <cstdint>
#include <random>

#include "upd/family.hpp"
#include "upd/ideal.hpp"

namespace upd {

// Seeded generator with a fixed cross-platform mapping to bounded ints, so
// identical seeds reproduce identical case sequences everywhere. All
// randomness in the project flows through explicit instances of this; there
// is no global generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform in [0, bound); bound > 0. Rejection sampling keeps the mapping
  // independent of the standard library's distribution implementations.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

// Stable derived seed for independent sub-streams (splitmix64 step).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream);

struct RandomIdealOptions {
  std::size_t max_gens = 6;
  std::uint64_t max_exp = 5;
  bool allow_zero = true;  // permit the empty generating set
};

// The fixed context pool for randomized suites: K[x], K[x,y], K[x,y,z].
const ContextPtr& pooled_context(std::size_t dim);

// Never the unit monomial (generators that collapse an ideal to (1) would
// make most case preconditions vacuous).
Monomial random_monomial(Rng& rng, std::size_t dim, std::uint64_t max_exp);

// Canonical random proper ideal; zero only when allowed.
MonomialIdeal random_ideal(Rng& rng, const ContextPtr& ctx,
                           const RandomIdealOptions& options = {});

// Random graded-quotient family in one parameter with the given limits.
FamilySpec random_graded_family(Rng& rng, std::size_t max_dim,
                                std::size_t max_gens, std::uint64_t max_exp);

// Largest parameter threshold appearing in a graded family's generators;
// beyond it the evaluation rule makes I(n) constant in that parameter.
Integer max_threshold(const FamilySpec& spec);

}  // namespace upd
