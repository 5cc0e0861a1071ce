#include "upd/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "upd/decomposition.hpp"
#include "upd/engine.hpp"
#include "upd/errors.hpp"
#include "upd/family_json.hpp"
#include "upd/random_gen.hpp"
#include "upd/staircase.hpp"

namespace upd {

namespace {

using Case = std::vector<MonomialIdeal>;
// True = the invariant holds for these inputs.
using Check = std::function<bool(const Case&)>;

struct Suite {
  std::string name;
  // Draws one case; returns the inputs and the invariant to hold for them.
  std::function<std::pair<Case, Check>(Rng&)> draw;
};

Integer max_gen_degree(const MonomialIdeal& ideal) {
  Integer mx = 0;
  for (const auto& g : ideal.gens()) {
    Integer d = g.degree();
    if (d > mx) mx = d;
  }
  return mx;
}

std::uint64_t oracle_bound(const MonomialIdeal& a, const MonomialIdeal& b) {
  return to_u64_clamped(max_gen_degree(a) + max_gen_degree(b) + 2);
}

bool raw_member(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens) {
    if (divides(g, m)) return true;
  }
  return false;
}

// Runs fn over every monomial of degree <= bound; false return short-circuits.
bool for_all_monomials(std::size_t dim, std::uint64_t bound,
                       const std::function<bool(const Monomial&)>& fn) {
  for (const auto& m : enumerate_monomials(dim, bound)) {
    if (!fn(m)) return false;
  }
  return true;
}

ContextPtr draw_context(Rng& rng) {
  return pooled_context(1 + rng.below(3));
}

Case draw_pair(Rng& rng, bool second_nonzero) {
  ContextPtr ctx = draw_context(rng);
  MonomialIdeal a = random_ideal(rng, ctx);
  MonomialIdeal b = random_ideal(rng, ctx, {6, 5, !second_nonzero});
  return {std::move(a), std::move(b)};
}

}  // namespace

// Terminates because every accepted step strictly shrinks the total exponent
// mass.
std::vector<MonomialIdeal> minimize_failing_case(
    std::vector<MonomialIdeal> failing,
    const std::function<bool(const std::vector<MonomialIdeal>&)>& check) {
  for (;;) {
    bool improved = false;
    for (std::size_t i = 0; i < failing.size() && !improved; ++i) {
      const std::vector<Monomial> gens = failing[i].gens();
      for (std::size_t g = 0; !improved && g < gens.size(); ++g) {
        std::vector<Monomial> kept = gens;
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(g));
        Case candidate = failing;
        candidate[i] = minimalize(failing[i].context(), std::move(kept));
        if (!check(candidate)) {
          failing = std::move(candidate);
          improved = true;
        }
      }
      for (std::size_t g = 0; !improved && g < gens.size(); ++g) {
        for (std::size_t v = 0; !improved && v < gens[g].dim(); ++v) {
          if (gens[g].exponents[v] == 0) continue;
          std::vector<Monomial> tweaked = gens;
          tweaked[g].exponents[v] -= 1;
          Case candidate = failing;
          candidate[i] = minimalize(failing[i].context(), std::move(tweaked));
          if (!check(candidate)) {
            failing = std::move(candidate);
            improved = true;
          }
        }
      }
    }
    if (!improved) return failing;
  }
}

std::string render_failing_case(const std::vector<MonomialIdeal>& inputs) {
  std::string out = "[";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) out += ',';
    out += ideal_spec_json(inputs[i]);
  }
  out += ']';
  return out;
}

namespace {

std::vector<Suite> build_suites() {
  std::vector<Suite> suites;

  suites.push_back(
      {"minimalize_canonical", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx);
         // Pad with shuffled redundant multiples; the canonical form must not
         // notice.
         std::vector<Monomial> padded = a.gens();
         for (const auto& g : a.gens()) {
           if (rng.coin()) {
             padded.push_back(
                 mul(g, random_monomial(rng, ctx->dim(), 3)));
           }
         }
         for (std::size_t i = padded.size(); i > 1; --i) {
           std::swap(padded[i - 1], padded[rng.below(i)]);
         }
         MonomialIdeal b = minimalize(ctx, padded);
         return {{a, b}, [](const Case& c) {
                   return c[0] == c[1] &&
                          minimalize(c[0].context(), c[0].gens()) == c[0];
                 }};
       }});

  suites.push_back({"eq_iff_mutual_leq", [](Rng& rng) -> std::pair<Case, Check> {
                      Case c = draw_pair(rng, false);
                      return {std::move(c), [](const Case& c) {
                                const bool eq = c[0] == c[1];
                                const bool both = ideal_leq(c[0], c[1]) &&
                                                  ideal_leq(c[1], c[0]);
                                return eq == both && ideal_leq(c[0], c[0]);
                              }};
                    }});

  suites.push_back({"staircase_sum", [](Rng& rng) -> std::pair<Case, Check> {
                      Case c = draw_pair(rng, false);
                      return {std::move(c), [](const Case& c) {
                                const MonomialIdeal s = sum(c[0], c[1]);
                                return for_all_monomials(
                                    c[0].context()->dim(),
                                    oracle_bound(c[0], c[1]),
                                    [&](const Monomial& m) {
                                      const bool want =
                                          raw_member(c[0].gens(), m) ||
                                          raw_member(c[1].gens(), m);
                                      return s.contains(m) == want;
                                    });
                              }};
                    }});

  suites.push_back(
      {"staircase_product", [](Rng& rng) -> std::pair<Case, Check> {
         Case c = draw_pair(rng, false);
         return {std::move(c), [](const Case& c) {
                   std::vector<Monomial> pairs;
                   for (const auto& g : c[0].gens()) {
                     for (const auto& h : c[1].gens()) {
                       pairs.push_back(mul(g, h));
                     }
                   }
                   const MonomialIdeal p = product(c[0], c[1]);
                   return for_all_monomials(
                       c[0].context()->dim(), oracle_bound(c[0], c[1]),
                       [&](const Monomial& m) {
                         return p.contains(m) == raw_member(pairs, m);
                       });
                 }};
       }});

  suites.push_back(
      {"staircase_power", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx, {4, 3, true});
         const std::uint64_t k = 1 + rng.below(3);
         return {{std::move(a)}, [k](const Case& c) {
                   // All degree-k products of generators with repetition.
                   std::vector<Monomial> prods;
                   std::function<void(std::size_t, std::uint64_t,
                                      const Monomial&)>
                       rec = [&](std::size_t from, std::uint64_t left,
                                 const Monomial& acc) {
                         if (left == 0) {
                           prods.push_back(acc);
                           return;
                         }
                         for (std::size_t i = from; i < c[0].gens().size();
                              ++i) {
                           rec(i, left - 1, mul(acc, c[0].gens()[i]));
                         }
                       };
                   rec(0, k, Monomial::one(c[0].context()->dim()));
                   const MonomialIdeal p = power(c[0], k);
                   const std::uint64_t bound =
                       to_u64_clamped(Integer(k) * max_gen_degree(c[0]) + 2);
                   return for_all_monomials(
                       c[0].context()->dim(), bound, [&](const Monomial& m) {
                         return p.contains(m) == raw_member(prods, m);
                       });
                 }};
       }});

  suites.push_back(
      {"staircase_intersect", [](Rng& rng) -> std::pair<Case, Check> {
         Case c = draw_pair(rng, false);
         return {std::move(c), [](const Case& c) {
                   const MonomialIdeal meet = intersect(c[0], c[1]);
                   return for_all_monomials(
                       c[0].context()->dim(), oracle_bound(c[0], c[1]),
                       [&](const Monomial& m) {
                         const bool want = raw_member(c[0].gens(), m) &&
                                           raw_member(c[1].gens(), m);
                         return meet.contains(m) == want;
                       });
                 }};
       }});

  suites.push_back(
      {"staircase_colon", [](Rng& rng) -> std::pair<Case, Check> {
         Case c = draw_pair(rng, true);
         return {std::move(c), [](const Case& c) {
                   if (c[1].is_zero()) return true;  // shrank away the divisor
                   const MonomialIdeal q = colon(c[0], c[1]);
                   return for_all_monomials(
                       c[0].context()->dim(), oracle_bound(c[0], c[1]),
                       [&](const Monomial& m) {
                         bool want = true;
                         for (const auto& h : c[1].gens()) {
                           if (!raw_member(c[0].gens(), mul(m, h))) {
                             want = false;
                             break;
                           }
                         }
                         return q.contains(m) == want;
                       });
                 }};
       }});

  suites.push_back(
      {"staircase_saturate", [](Rng& rng) -> std::pair<Case, Check> {
         Case c = draw_pair(rng, true);
         return {std::move(c), [](const Case& c) {
                   if (c[1].is_zero()) return true;
                   const MonomialIdeal sat = saturate(c[0], c[1]).ideal;
                   return for_all_monomials(
                       c[0].context()->dim(), oracle_bound(c[0], c[1]),
                       [&](const Monomial& m) {
                         return sat.contains(m) ==
                                saturation_member(c[0], c[1], m);
                       });
                 }};
       }});

  suites.push_back(
      {"staircase_radical", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx);
         return {{std::move(a)}, [](const Case& c) {
                   const MonomialIdeal rad = radical(c[0]);
                   return for_all_monomials(
                       c[0].context()->dim(),
                       to_u64_clamped(max_gen_degree(c[0]) + 2),
                       [&](const Monomial& m) {
                         return rad.contains(m) == radical_member(c[0], m);
                       });
                 }};
       }});

  suites.push_back({"lattice_laws", [](Rng& rng) -> std::pair<Case, Check> {
                      ContextPtr ctx = draw_context(rng);
                      Case c = {random_ideal(rng, ctx), random_ideal(rng, ctx),
                                random_ideal(rng, ctx)};
                      return {std::move(c), [](const Case& c) {
                                const auto& [a, b, d] = std::tie(c[0], c[1], c[2]);
                                return sum(a, b) == sum(b, a) &&
                                       intersect(a, b) == intersect(b, a) &&
                                       sum(sum(a, b), d) == sum(a, sum(b, d)) &&
                                       intersect(intersect(a, b), d) ==
                                           intersect(a, intersect(b, d)) &&
                                       sum(a, a) == a && intersect(a, a) == a &&
                                       ideal_leq(intersect(a, b), a) &&
                                       ideal_leq(a, sum(a, b));
                              }};
                    }});

  suites.push_back({"colon_laws", [](Rng& rng) -> std::pair<Case, Check> {
                      ContextPtr ctx = draw_context(rng);
                      Case c = {random_ideal(rng, ctx),
                                random_ideal(rng, ctx, {6, 5, false}),
                                random_ideal(rng, ctx, {6, 5, false})};
                      return {std::move(c), [](const Case& c) {
                                if (c[1].is_zero() || c[2].is_zero()) {
                                  return true;
                                }
                                const MonomialIdeal q = colon(c[0], c[1]);
                                if (!ideal_leq(c[0], q)) return false;
                                if (!(colon(q, c[2]) ==
                                      colon(c[0], product(c[1], c[2])))) {
                                  return false;
                                }
                                const auto sat = saturate(c[0], c[1]);
                                MonomialIdeal step = c[0];
                                for (std::uint64_t l = 0;
                                     l <= sat.stab_index + 2; ++l) {
                                  if (!ideal_leq(step, sat.ideal)) return false;
                                  step = colon(step, c[1]);
                                }
                                return step == sat.ideal;
                              }};
                    }});

  suites.push_back(
      {"decomposition_exact", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx);
         return {{std::move(a)}, [](const Case& c) {
                   const auto dec = primary_decomposition(c[0]);
                   MonomialIdeal meet = MonomialIdeal::unit(c[0].context());
                   std::vector<MonomialIdeal> primes;
                   for (const auto& comp : dec.components) {
                     meet = intersect(meet, comp.component);
                     primes.push_back(comp.prime);
                     if (comp.prime.is_zero()) {
                       if (!comp.component.is_zero()) return false;
                       continue;
                     }
                     auto p = is_primary(comp.component);
                     if (!p || !(*p == comp.prime)) return false;
                   }
                   if (!(meet == c[0])) return false;
                   std::sort(primes.begin(), primes.end(), ideal_less);
                   if (primes != associated_primes(c[0])) return false;
                   // Set-level agreement of the intersection, checked by
                   // enumeration rather than canonical forms.
                   return for_all_monomials(
                       c[0].context()->dim(),
                       to_u64_clamped(max_gen_degree(c[0]) + 2),
                       [&](const Monomial& m) {
                         bool in_all = true;
                         for (const auto& comp : dec.components) {
                           if (!comp.component.contains(m)) {
                             in_all = false;
                             break;
                           }
                         }
                         return in_all == raw_member(c[0].gens(), m);
                       });
                 }};
       }});

  suites.push_back(
      {"compatibility_mix", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx);
         const std::uint64_t coins = rng.raw();
         return {{std::move(a)}, [coins](const Case& c) {
                   const auto first =
                       primary_decomposition(c[0], PivotRule::FirstMixedLowestVar);
                   const auto second =
                       primary_decomposition(c[0], PivotRule::LastMixedHighestVar);
                   if (first.components.size() != second.components.size()) {
                     return false;
                   }
                   std::vector<PrimaryComponent> picks;
                   for (std::size_t i = 0; i < first.components.size(); ++i) {
                     if (!(first.components[i].prime ==
                           second.components[i].prime)) {
                       return false;
                     }
                     picks.push_back((coins >> (i % 64)) & 1
                                         ? second.components[i]
                                         : first.components[i]);
                   }
                   try {
                     const auto mixed = assemble(c[0], picks);
                     return mixed.irredundant && mixed.minimal;
                   } catch (const Error&) {
                     return false;
                   }
                 }};
       }});

  suites.push_back(
      {"minimal_components_unique", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx);
         return {{std::move(a)}, [](const Case& c) {
                   const auto first =
                       primary_decomposition(c[0], PivotRule::FirstMixedLowestVar);
                   const auto second =
                       primary_decomposition(c[0], PivotRule::LastMixedHighestVar);
                   const auto primes = associated_primes(c[0]);
                   for (const auto& p : primes) {
                     bool minimal = true;
                     for (const auto& q : primes) {
                       if (!(q == p) && ideal_leq(q, p)) {
                         minimal = false;
                         break;
                       }
                     }
                     if (!minimal) continue;
                     const MonomialIdeal* from_first = nullptr;
                     const MonomialIdeal* from_second = nullptr;
                     for (const auto& comp : first.components) {
                       if (comp.prime == p) from_first = &comp.component;
                     }
                     for (const auto& comp : second.components) {
                       if (comp.prime == p) from_second = &comp.component;
                     }
                     if (!from_first || !from_second ||
                         !(*from_first == *from_second)) {
                       return false;
                     }
                   }
                   return true;
                 }};
       }});

  suites.push_back(
      {"ass_permutation_invariant", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx);
         std::vector<Monomial> shuffled = a.gens();
         for (std::size_t i = shuffled.size(); i > 1; --i) {
           std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
         }
         MonomialIdeal b = minimalize(ctx, std::move(shuffled));
         return {{std::move(a), std::move(b)}, [](const Case& c) {
                   if (c[0].is_unit() || c[1].is_unit()) {
                     return c[0] == c[1];
                   }
                   return associated_primes(c[0]) == associated_primes(c[1]);
                 }};
       }});

  suites.push_back(
      {"graded_monotone", [](Rng& rng) -> std::pair<Case, Check> {
         FamilySpec spec = random_graded_family(rng, 3, 5, 4);
         const Integer lo = rng.below(6);
         const Integer hi = lo + Integer(rng.below(6));
         MonomialIdeal at_lo = evaluate(spec, {lo});
         MonomialIdeal at_hi = evaluate(spec, {hi});
         return {{std::move(at_lo), std::move(at_hi)}, [](const Case& c) {
                   return ideal_leq(c[0], c[1]);
                 }};
       }});

  suites.push_back(
      {"iterate_matches_evaluate", [](Rng& rng) -> std::pair<Case, Check> {
         FamilySpec spec = random_graded_family(rng, 3, 5, 4);
         const Integer lo = rng.below(4);
         const Box box({{lo, lo + Integer(rng.below(5))}});
         bool ok = true;
         const auto points = iterate(spec, box);
         if (points.size() != box.point_count()) ok = false;
         for (std::size_t i = 0; ok && i < points.size(); ++i) {
           if (!(points[i].first == box.point_at(i)) ||
               !(points[i].second == evaluate(spec, points[i].first))) {
             ok = false;
           }
         }
         MonomialIdeal witness = evaluate(spec, {lo});
         return {{std::move(witness)},
                 [ok](const Case&) { return ok; }};
       }});

  suites.push_back(
      {"h0_components_cross_check", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx);
         MonomialIdeal b = random_ideal(rng, ctx, {6, 5, false});
         return {{std::move(a), std::move(b)}, [](const Case& c) {
                   if (c[0].is_unit() || c[1].is_zero()) return true;
                   return h0_via_components(c[0], c[1]) ==
                          saturate(c[0], c[1]).ideal;
                 }};
       }});

  suites.push_back({"kmin_monotone", [](Rng& rng) -> std::pair<Case, Check> {
                      ContextPtr ctx = draw_context(rng);
                      MonomialIdeal a =
                          random_ideal(rng, ctx, {6, 5, false});
                      const std::uint64_t pick = rng.raw();
                      return {{std::move(a)}, [pick](const Case& c) {
                                if (c[0].is_unit() || c[0].is_zero()) {
                                  return true;
                                }
                                const auto primes = associated_primes(c[0]);
                                const auto& p = primes[pick % primes.size()];
                                const auto sat = saturate(c[0], p).ideal;
                                const std::uint64_t k0 =
                                    k_min(c[0], p, default_cap(c[0]));
                                auto closed = [&](std::uint64_t k) {
                                  return intersect(sum(power(p, k), c[0]),
                                                   sat) == c[0];
                                };
                                if (k0 > 1 && closed(k0 - 1)) return false;
                                for (std::uint64_t k = k0; k <= k0 + 3; ++k) {
                                  if (!closed(k)) return false;
                                }
                                return true;
                              }};
                    }});

  suites.push_back(
      {"certificate_sound", [](Rng& rng) -> std::pair<Case, Check> {
         ContextPtr ctx = draw_context(rng);
         MonomialIdeal a = random_ideal(rng, ctx);
         return {{std::move(a)}, [](const Case& c) {
                   if (c[0].is_unit()) return true;
                   std::uint64_t k = 1;
                   if (!c[0].is_zero()) {
                     for (const auto& p : associated_primes(c[0])) {
                       k = std::max(k, k_min(c[0], p, default_cap(c[0])));
                     }
                   }
                   const auto cert = bounded_decomposition(c[0], k);
                   return cert.checks.all() && verify_certificate(cert).all();
                 }};
       }});

  suites.push_back({"h0_idempotent", [](Rng& rng) -> std::pair<Case, Check> {
                      Case c = draw_pair(rng, true);
                      return {std::move(c), [](const Case& c) {
                                if (c[1].is_zero()) return true;
                                const auto once = saturate(c[0], c[1]);
                                const auto twice = saturate(once.ideal, c[1]);
                                return twice.ideal == once.ideal &&
                                       twice.stab_index == 0;
                              }};
                    }});

  return suites;
}

SuiteResult run_suite(const Suite& suite, std::uint64_t seed,
                      std::uint64_t cases) {
  SuiteResult result{suite.name, cases, 0, ""};
  Rng rng(seed);
  for (std::uint64_t i = 0; i < cases; ++i) {
    auto [inputs, check] = suite.draw(rng);
    if (!check(inputs)) {
      ++result.failures;
      if (result.counterexample.empty()) {
        result.counterexample =
            render_failing_case(minimize_failing_case(std::move(inputs), check));
      }
    }
  }
  return result;
}

}  // namespace

std::vector<SuiteResult> run_oracle_suites(std::uint64_t seed,
                                           std::uint64_t cases) {
  std::vector<SuiteResult> results;
  const auto suites = build_suites();
  for (std::size_t i = 0; i < suites.size(); ++i) {
    results.push_back(run_suite(suites[i], sub_seed(seed, i), cases));
  }
  return results;
}

SuiteResult run_oracle_suite(const std::string& name, std::uint64_t seed,
                             std::uint64_t cases) {
  const auto suites = build_suites();
  for (std::size_t i = 0; i < suites.size(); ++i) {
    if (suites[i].name == name) {
      return run_suite(suites[i], sub_seed(seed, i), cases);
    }
  }
  throw Error(ErrorKind::Usage, "unknown oracle suite '" + name + "'");
}

std::vector<std::string> oracle_suite_names() {
  std::vector<std::string> names;
  for (const auto& suite : build_suites()) {
    names.push_back(suite.name);
  }
  return names;
}

}  // namespace upd
