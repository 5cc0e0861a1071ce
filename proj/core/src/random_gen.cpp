#include "upd/random_gen.hpp"

#include <array>

#include "upd/errors.hpp"

namespace upd {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) {
    throw Error(ErrorKind::Usage, "empty range for random draw");
  }
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t draw = engine_();
    if (draw < limit) return draw % bound;
  }
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const ContextPtr& pooled_context(std::size_t dim) {
  static const std::array<ContextPtr, 3> pool = {
      make_ring_context({"x"}),
      make_ring_context({"x", "y"}),
      make_ring_context({"x", "y", "z"}),
  };
  return pool.at(dim - 1);
}

Monomial random_monomial(Rng& rng, std::size_t dim, std::uint64_t max_exp) {
  for (;;) {
    Monomial m = Monomial::one(dim);
    for (std::size_t v = 0; v < dim; ++v) {
      m.exponents[v] = Integer(rng.below(max_exp + 1));
    }
    if (!m.is_one()) return m;
  }
}

MonomialIdeal random_ideal(Rng& rng, const ContextPtr& ctx,
                           const RandomIdealOptions& options) {
  const std::size_t lo = options.allow_zero ? 0 : 1;
  const std::size_t count = lo + rng.below(options.max_gens - lo + 1);
  std::vector<Monomial> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    gens.push_back(random_monomial(rng, ctx->dim(), options.max_exp));
  }
  return minimalize(ctx, std::move(gens));
}

FamilySpec random_graded_family(Rng& rng, std::size_t max_dim,
                                std::size_t max_gens, std::uint64_t max_exp) {
  const std::size_t dim = 1 + rng.below(max_dim);
  const ContextPtr& ctx = pooled_context(dim);
  GradedData data;
  const std::size_t count = 1 + rng.below(max_gens);
  for (std::size_t i = 0; i < count; ++i) {
    data.generators.push_back(
        GradedGenerator{random_monomial(rng, dim, max_exp),
                        {Integer(rng.below(max_exp + 1))}});
  }
  return FamilySpec{ctx, {"n"}, std::move(data)};
}

Integer max_threshold(const FamilySpec& spec) {
  Integer mx = 0;
  if (const auto* graded = std::get_if<GradedData>(&spec.data)) {
    for (const auto& g : graded->generators) {
      for (const auto& t : g.thresholds) {
        if (t > mx) mx = t;
      }
    }
  }
  return mx;
}

}  // namespace upd
