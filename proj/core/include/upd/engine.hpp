#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "upd/decomposition.hpp"
#include "upd/family.hpp"
#include "upd/ideal.hpp"

namespace upd {

// Saturation of I(n) by J, realizing the zeroth local cohomology of A/I(n)
// with respect to J on the ideal side, together with the stabilization index
// of the colon chain.
SaturationResult h0(const MonomialIdeal& ideal, const MonomialIdeal& by);

// Degree-driven default for every bounded search below: 4 plus the largest
// exponent of each variable over the generators, summed.
std::uint64_t default_cap(const MonomialIdeal& ideal);

// Least k >= 1 with (P^k + I) meet sat = I, where sat is the saturation of I
// by P. The predicate is monotone in k, and existence is guaranteed for each
// fixed ideal, so the cap only guards runaway inputs.
std::uint64_t k_min(const MonomialIdeal& ideal, const MonomialIdeal& prime,
                    std::uint64_t cap);

// Least s >= 1 with P^s + I inside enclosing; requires I inside enclosing.
std::uint64_t minimal_s(const MonomialIdeal& ideal,
                        const MonomialIdeal& enclosing,
                        const MonomialIdeal& prime, std::uint64_t cap);

struct PrimeStat {
  MonomialIdeal prime;
  std::uint64_t k_min = 0;
  std::uint64_t l = 0;  // saturation stabilization index for this prime
};

struct ScanRow {
  std::vector<Integer> point;
  std::optional<MonomialIdeal> ideal;  // empty when the component vanishes
  bool zero_module = false;            // I(n) = (1)
  std::vector<PrimeStat> primes;
  std::uint64_t k_min = 0;  // max over the row's primes
};

enum class Guarantee {
  TheoremApplies,  // graded quotient: finitely generated by construction
  NoGuarantee,     // affine family
};

const char* guarantee_name(Guarantee g);

struct ScanReport {
  std::vector<ScanRow> rows;
  std::uint64_t uniform_k = 0;  // max k_min over the box
  bool stabilized = false;      // trailing window of rows has constant k_min
  std::uint64_t window = 0;
  Guarantee guarantee = Guarantee::NoGuarantee;
};

// Per-point k_min over the box; cap = 0 picks default_cap(I(n)) per point.
// CapExceededError is annotated with the offending point and prime.
ScanReport scan_uniform_k(const FamilySpec& spec, const Box& box,
                          std::uint64_t cap = 0, unsigned jobs = 1);

struct CertificateChecks {
  bool intersection_ok = false;
  bool power_containment_ok = false;
  bool irredundant_ok = false;
  bool minimal_ok = false;

  bool all() const {
    return intersection_ok && power_containment_ok && irredundant_ok &&
           minimal_ok;
  }
};

// Machine-checkable witness that the ideal admits a primary decomposition
// whose every component Q satisfies P^k + I inside Q. Constructors only ever
// return certificates with all four checks true.
struct BoundedCertificate {
  std::vector<Integer> point;  // filled by box drivers
  MonomialIdeal ideal;
  std::uint64_t k = 0;
  std::vector<PrimaryComponent> components;
  CertificateChecks checks;
};

// Builds the certificate the way the bound's existence proof does: per
// associated prime P, if the saturation by P is everything, take the
// P-component of the standard decomposition (P^k + I must then collapse to
// I); otherwise decompose P^k + I and take its P-component. The picks are
// assembled and verified; any failure throws KTooSmallError, since each one
// certifies that k is below the uniform bound.
BoundedCertificate bounded_decomposition(const MonomialIdeal& ideal,
                                         std::uint64_t k);

// Recomputes the four flags from the certificate's raw data, without trusting
// anything bounded_decomposition did.
CertificateChecks verify_certificate(const BoundedCertificate& cert);

struct CertifyRow {
  std::vector<Integer> point;
  bool zero_module = false;
  std::optional<BoundedCertificate> certificate;
};

struct CertifyReport {
  std::vector<CertifyRow> rows;
  std::uint64_t k = 0;
  std::size_t certified = 0;
  std::size_t skipped = 0;
};

// Certificates for every lattice point; points with I(n) = (1) are recorded
// as vanished components and skipped. Throws KTooSmallError naming the first
// failing point in row-major order.
CertifyReport certify_box(const FamilySpec& spec, const Box& box,
                          std::uint64_t k, unsigned jobs = 1);

// Eq-style cross-check route: intersects exactly the standard primary
// components whose prime does not contain `by` (empty intersection = unit
// ideal). Must equal h0(ideal, by).ideal; the randomized suites hammer this.
MonomialIdeal h0_via_components(const MonomialIdeal& ideal,
                                const MonomialIdeal& by);

struct H0Row {
  std::vector<Integer> point;
  MonomialIdeal test_ideal;
  bool zero_module = false;
  std::uint64_t l = 0;
  MonomialIdeal sat;
  bool cross_check_ok = false;   // component route agrees with saturation
  bool defining_eq_ok = false;   // (I : J^l_uniform) = sat
  bool torsion_free_ok = false;  // (J^l_uniform + I) meet sat = I
};

struct H0Report {
  std::vector<H0Row> rows;  // point-major, then test-ideal order
  std::uint64_t l_uniform = 0;
};

// For each (point, J): saturation index and limit, the component-route
// cross-check, and — once l_uniform = max l is known — the defining equality
// at l_uniform plus the torsion-intersection identity at l_uniform. The
// defining equality and the cross-check cannot fail unless the engine is
// broken; the torsion identity is honest data (it can be false when
// l_uniform is smaller than the family's uniform bound).
H0Report verify_h0_uniform(const FamilySpec& spec, const Box& box,
                           const std::vector<MonomialIdeal>& test_ideals,
                           std::uint64_t cap = 0, unsigned jobs = 1);

// Checks (P^m + I(n)) meet sat = I(n) for every point of the box, every
// prime in the box's Ass union, and every m in [k, k+window]. Monotone in m,
// so the window is a redundancy check by construction.
bool artin_rees_consequence(const FamilySpec& spec, const Box& box,
                            std::uint64_t k, std::uint64_t window,
                            unsigned jobs = 1);

// All squarefree monomial primes of the context followed by `random_count`
// seeded random non-zero monomial ideals.
std::vector<MonomialIdeal> battery_ideals(const ContextPtr& ctx,
                                          std::uint64_t seed,
                                          std::size_t random_count = 25);

}  // namespace upd
