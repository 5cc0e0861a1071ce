#include "upd/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "upd/errors.hpp"
#include "upd/parallel.hpp"
#include "upd/random_gen.hpp"

namespace upd {

namespace {

// (P^k + I) meet sat == I, the per-k predicate behind every bound search.
bool bound_closed(const MonomialIdeal& ideal, const MonomialIdeal& prime_power,
                  const MonomialIdeal& sat) {
  return intersect(sum(prime_power, ideal), sat) == ideal;
}

std::uint64_t k_min_with_sat(const MonomialIdeal& ideal,
                             const MonomialIdeal& prime,
                             const MonomialIdeal& sat, std::uint64_t cap) {
  MonomialIdeal prime_power = prime;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (bound_closed(ideal, prime_power, sat)) return k;
    prime_power = product(prime_power, prime);
  }
  throw CapExceededError(cap, to_string(prime));
}

}  // namespace

SaturationResult h0(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  return saturate(ideal, by);
}

std::uint64_t default_cap(const MonomialIdeal& ideal) {
  Integer total = 4;
  for (const auto& e : ideal.max_exponents()) total += e;
  return to_u64_clamped(total);
}

std::uint64_t k_min(const MonomialIdeal& ideal, const MonomialIdeal& prime,
                    std::uint64_t cap) {
  if (ideal.is_unit()) {
    throw Error(ErrorKind::UnitIdeal, "k_min over a vanished component");
  }
  if (cap == 0) cap = default_cap(ideal);
  if (prime.is_zero()) {
    // Only the zero ideal has the zero prime associated; P^k + I = I and the
    // saturation is everything, so the bound closes immediately.
    if (ideal.is_zero()) return 1;
    throw Error(ErrorKind::Usage, "zero prime is not associated to the ideal");
  }
  return k_min_with_sat(ideal, prime, saturate(ideal, prime).ideal, cap);
}

std::uint64_t minimal_s(const MonomialIdeal& ideal,
                        const MonomialIdeal& enclosing,
                        const MonomialIdeal& prime, std::uint64_t cap) {
  if (!ideal_leq(ideal, enclosing)) {
    throw Error(ErrorKind::Usage,
                "minimal_s needs the ideal inside the enclosing component");
  }
  if (cap == 0) {
    cap = std::max(default_cap(ideal), default_cap(enclosing));
  }
  MonomialIdeal prime_power = prime;
  for (std::uint64_t s = 1; s <= cap; ++s) {
    if (ideal_leq(prime_power, enclosing)) return s;
    prime_power = product(prime_power, prime);
  }
  throw CapExceededError(cap, to_string(prime));
}

const char* guarantee_name(Guarantee g) {
  return g == Guarantee::TheoremApplies ? "theorem-applies" : "no-guarantee";
}

ScanReport scan_uniform_k(const FamilySpec& spec, const Box& box,
                          std::uint64_t cap, unsigned jobs) {
  ScanReport report;
  report.rows.resize(box.point_count());
  report.guarantee =
      spec.is_graded() ? Guarantee::TheoremApplies : Guarantee::NoGuarantee;
  parallel_for(box.point_count(), jobs, [&](std::size_t i) {
    ScanRow row;
    row.point = box.point_at(i);
    MonomialIdeal ideal = evaluate(spec, row.point);
    if (ideal.is_unit()) {
      row.zero_module = true;
      report.rows[i] = std::move(row);
      return;
    }
    try {
      const std::uint64_t row_cap = cap ? cap : default_cap(ideal);
      for (const auto& prime : associated_primes(ideal)) {
        if (prime.is_zero()) {
          row.primes.push_back({prime, 1, 1});
          continue;
        }
        auto satres = saturate(ideal, prime);
        row.primes.push_back(
            {prime, k_min_with_sat(ideal, prime, satres.ideal, row_cap),
             satres.stab_index});
      }
    } catch (CapExceededError& e) {
      e.set_point(row.point);
      throw;
    }
    for (const auto& stat : row.primes) {
      row.k_min = std::max(row.k_min, stat.k_min);
    }
    row.ideal = std::move(ideal);
    report.rows[i] = std::move(row);
  });

  std::vector<std::uint64_t> k_values;
  for (const auto& row : report.rows) {
    if (!row.zero_module) k_values.push_back(row.k_min);
  }
  for (const auto& k : k_values) {
    report.uniform_k = std::max(report.uniform_k, k);
  }
  report.window = std::max<std::uint64_t>(5, box.point_count() / 4);
  const std::size_t tail =
      std::min<std::size_t>(report.window, k_values.size());
  report.stabilized = true;
  for (std::size_t i = k_values.size() - tail; i < k_values.size(); ++i) {
    if (k_values[i] != k_values[k_values.size() - 1]) {
      report.stabilized = false;
      break;
    }
  }
  return report;
}

BoundedCertificate bounded_decomposition(const MonomialIdeal& ideal,
                                         std::uint64_t k) {
  if (ideal.is_unit()) {
    throw Error(ErrorKind::UnitIdeal,
                "no certificate for a vanished component");
  }
  if (k == 0) {
    throw Error(ErrorKind::Usage, "k must be positive");
  }
  if (ideal.is_zero()) {
    // A/0 is a domain: the zero submodule is already (0)-primary.
    BoundedCertificate cert{
        {},
        ideal,
        k,
        {PrimaryComponent{MonomialIdeal::zero(ideal.context()), ideal}},
        CertificateChecks{true, true, true, true}};
    return cert;
  }

  std::optional<PrimaryDecomposition> standard;
  std::vector<PrimaryComponent> picks;
  for (const auto& prime : associated_primes(ideal)) {
    const MonomialIdeal sat = saturate(ideal, prime).ideal;
    if (sat.is_unit()) {
      // Every element is prime-power torsion, so P^k collapses into I once k
      // is large enough and any P-primary component of I itself works.
      if (!standard) standard = primary_decomposition(ideal);
      for (const auto& comp : standard->components) {
        if (comp.prime == prime) {
          picks.push_back(comp);
          break;
        }
      }
    } else {
      auto dec = primary_decomposition(sum(power(prime, k), ideal));
      bool found = false;
      for (const auto& comp : dec.components) {
        if (comp.prime == prime) {
          picks.push_back(comp);
          found = true;
          break;
        }
      }
      if (!found) {
        throw KTooSmallError(k, "no (" + to_string(prime) +
                                    ")-primary component of P^k + I");
      }
    }
  }

  const PrimaryDecomposition assembled = [&] {
    try {
      return assemble(ideal, picks);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::IntersectionMismatch ||
          e.kind() == ErrorKind::NotPrimary) {
        throw KTooSmallError(k, e.what());
      }
      throw;
    }
  }();

  BoundedCertificate cert{{}, ideal, k, assembled.components, {}};
  cert.checks = verify_certificate(cert);
  if (!cert.checks.all()) {
    throw KTooSmallError(
        k, "certificate checks failed (power containment misses a component)");
  }
  return cert;
}

CertificateChecks verify_certificate(const BoundedCertificate& cert) {
  CertificateChecks checks;
  const auto& ctx = cert.ideal.context();

  MonomialIdeal meet = MonomialIdeal::unit(ctx);
  for (const auto& comp : cert.components) {
    meet = intersect(meet, comp.component);
  }
  checks.intersection_ok = meet == cert.ideal;

  checks.power_containment_ok = true;
  for (const auto& comp : cert.components) {
    const MonomialIdeal pk = comp.prime.is_zero()
                                 ? MonomialIdeal::zero(ctx)
                                 : power(comp.prime, cert.k);
    if (!ideal_leq(sum(pk, cert.ideal), comp.component)) {
      checks.power_containment_ok = false;
      break;
    }
  }

  checks.irredundant_ok = true;
  if (cert.components.size() > 1) {
    for (std::size_t i = 0; i < cert.components.size(); ++i) {
      MonomialIdeal rest = MonomialIdeal::unit(ctx);
      for (std::size_t j = 0; j < cert.components.size(); ++j) {
        if (j != i) rest = intersect(rest, cert.components[j].component);
      }
      if (rest == cert.ideal) {
        checks.irredundant_ok = false;
        break;
      }
    }
  }

  checks.minimal_ok = true;
  for (const auto& comp : cert.components) {
    if (comp.prime.is_zero()) {
      if (!comp.component.is_zero()) checks.minimal_ok = false;
      continue;
    }
    auto prime = comp.component.is_unit()
                     ? std::nullopt
                     : is_primary(comp.component);
    if (!prime || !(*prime == comp.prime)) {
      checks.minimal_ok = false;
      break;
    }
  }
  if (checks.minimal_ok) {
    for (std::size_t i = 1; i < cert.components.size(); ++i) {
      if (cert.components[i - 1].prime == cert.components[i].prime) {
        checks.minimal_ok = false;
        break;
      }
    }
  }
  return checks;
}

CertifyReport certify_box(const FamilySpec& spec, const Box& box,
                          std::uint64_t k, unsigned jobs) {
  CertifyReport report;
  report.k = k;
  report.rows.resize(box.point_count());
  parallel_for(box.point_count(), jobs, [&](std::size_t i) {
    CertifyRow row;
    row.point = box.point_at(i);
    MonomialIdeal ideal = evaluate(spec, row.point);
    if (ideal.is_unit()) {
      row.zero_module = true;
    } else {
      try {
        row.certificate = bounded_decomposition(ideal, k);
        row.certificate->point = row.point;
      } catch (KTooSmallError& e) {
        e.set_point(row.point);
        throw;
      }
    }
    report.rows[i] = std::move(row);
  });
  for (const auto& row : report.rows) {
    if (row.zero_module) {
      ++report.skipped;
    } else {
      ++report.certified;
    }
  }
  return report;
}

MonomialIdeal h0_via_components(const MonomialIdeal& ideal,
                                const MonomialIdeal& by) {
  if (by.is_zero()) {
    throw Error(ErrorKind::ZeroColon, "saturation by the zero ideal");
  }
  MonomialIdeal acc = MonomialIdeal::unit(ideal.context());
  for (const auto& comp : primary_decomposition(ideal).components) {
    if (!ideal_leq(by, comp.prime)) {
      acc = intersect(acc, comp.component);
    }
  }
  return acc;
}

H0Report verify_h0_uniform(const FamilySpec& spec, const Box& box,
                           const std::vector<MonomialIdeal>& test_ideals,
                           std::uint64_t cap, unsigned jobs) {
  for (const auto& test : test_ideals) {
    if (test.is_zero()) {
      throw Error(ErrorKind::Usage, "test ideals must be non-zero");
    }
  }
  H0Report report;
  std::vector<std::optional<H0Row>> slots(box.point_count() *
                                          test_ideals.size());
  parallel_for(box.point_count(), jobs, [&](std::size_t i) {
    const std::vector<Integer> point = box.point_at(i);
    const MonomialIdeal ideal = evaluate(spec, point);
    for (std::size_t j = 0; j < test_ideals.size(); ++j) {
      const MonomialIdeal& test = test_ideals[j];
      auto satres = saturate(ideal, test);
      const bool cross_ok =
          ideal.is_unit() || h0_via_components(ideal, test) == satres.ideal;
      slots[i * test_ideals.size() + j] =
          H0Row{point,
                test,
                ideal.is_unit(),
                satres.stab_index,
                std::move(satres.ideal),
                cross_ok,
                false,
                false};
    }
  });
  for (const auto& row : slots) {
    report.l_uniform = std::max(report.l_uniform, row->l);
  }
  if (cap != 0 && report.l_uniform > cap) {
    throw CapExceededError(cap, "saturation index exceeded the cap");
  }
  parallel_for(box.point_count(), jobs, [&](std::size_t i) {
    const std::vector<Integer> point = box.point_at(i);
    const MonomialIdeal ideal = evaluate(spec, point);
    for (std::size_t j = 0; j < test_ideals.size(); ++j) {
      H0Row& row = *slots[i * test_ideals.size() + j];
      const MonomialIdeal jl = power(row.test_ideal, report.l_uniform);
      row.defining_eq_ok = colon(ideal, jl) == row.sat;
      row.torsion_free_ok = intersect(sum(jl, ideal), row.sat) == ideal;
      if (!row.defining_eq_ok) {
        // Monotone in l, so inequality at the maximum index means broken
        // arithmetic, not mathematics.
        throw std::logic_error(
            "saturation routes disagree at the uniform index");
      }
    }
  });
  report.rows.reserve(slots.size());
  for (auto& row : slots) {
    report.rows.push_back(std::move(*row));
  }
  return report;
}

bool artin_rees_consequence(const FamilySpec& spec, const Box& box,
                            std::uint64_t k, std::uint64_t window,
                            unsigned jobs) {
  if (k == 0 || window == 0) {
    throw Error(ErrorKind::Usage, "k and window must be positive");
  }
  const AssUnion primes = ass_union(spec, box);
  std::vector<char> ok(box.point_count(), 1);
  parallel_for(box.point_count(), jobs, [&](std::size_t i) {
    const MonomialIdeal ideal = evaluate(spec, box.point_at(i));
    if (ideal.is_unit()) return;
    for (const auto& prime : primes.primes) {
      if (prime.is_zero()) continue;  // P^m + I = I: nothing to check
      const MonomialIdeal sat = saturate(ideal, prime).ideal;
      MonomialIdeal prime_power = power(prime, k);
      for (std::uint64_t m = k; m <= k + window; ++m) {
        if (!bound_closed(ideal, prime_power, sat)) {
          ok[i] = 0;
          return;
        }
        prime_power = product(prime_power, prime);
      }
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

std::vector<MonomialIdeal> battery_ideals(const ContextPtr& ctx,
                                          std::uint64_t seed,
                                          std::size_t random_count) {
  std::vector<MonomialIdeal> out;
  const std::size_t d = ctx->dim();
  // All squarefree monomial primes: one per non-empty subset of variables.
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t v = 0; v < d; ++v) {
      if (mask & (std::size_t{1} << v)) {
        Monomial m = Monomial::one(d);
        m.exponents[v] = 1;
        gens.push_back(std::move(m));
      }
    }
    out.push_back(minimalize(ctx, std::move(gens)));
  }
  std::sort(out.begin(), out.end(), ideal_less);
  Rng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    out.push_back(random_ideal(rng, ctx, {6, 5, /*allow_zero=*/false}));
  }
  return out;
}

}  // namespace upd
