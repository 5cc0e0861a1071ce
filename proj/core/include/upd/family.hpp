#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "upd/ideal.hpp"
#include "upd/monomial.hpp"
#include "upd/ring.hpp"
#include "upd/types.hpp"

namespace upd {

// Generator of a graded-quotient family: an x-monomial gated by per-parameter
// thresholds. It contributes to I(n) exactly when every threshold is <= the
// matching coordinate of n, which is the component rule for the quotient of
// A[Z_1..Z_t] by the monomial ideal these generators span.
struct GradedGenerator {
  Monomial base;                    // exponents over the x-variables
  std::vector<Integer> thresholds;  // exponents over the parameters
};

// a0 + sum_j a_j * n_j with all coefficients non-negative, so evaluation
// stays in the naturals without per-point checks.
struct AffineForm {
  Integer constant;
  std::vector<Integer> coeffs;  // one per parameter
};

struct GradedData {
  std::vector<GradedGenerator> generators;
};

struct AffineData {
  // generators[g][v] is the exponent form of variable v in generator g.
  std::vector<std::vector<AffineForm>> generators;
};

// A parametric family n -> I(n). Graded mode faithfully encodes a finitely
// generated graded module whose components are A/I(n); affine mode is
// free-form and carries no such guarantee (deliberately, as the negative
// control in the scans).
struct FamilySpec {
  ContextPtr context;
  std::vector<std::string> params;
  std::variant<GradedData, AffineData> data;

  bool is_graded() const { return std::holds_alternative<GradedData>(data); }
  std::size_t arity() const { return params.size(); }
};

// Inclusive per-parameter ranges; a finite verification window in N^t.
class Box {
 public:
  explicit Box(std::vector<std::pair<Integer, Integer>> ranges);

  std::size_t arity() const { return ranges_.size(); }
  const std::vector<std::pair<Integer, Integer>>& ranges() const {
    return ranges_;
  }

  // Number of lattice points; rejected at construction above 2^22 so report
  // buffers stay sane.
  std::size_t point_count() const { return count_; }

  // Row-major: the last parameter varies fastest.
  std::vector<Integer> point_at(std::size_t index) const;

  // True when every coordinate lies in the leading half of its range.
  bool in_first_half(const std::vector<Integer>& point) const;

 private:
  std::vector<std::pair<Integer, Integer>> ranges_;
  std::size_t count_ = 0;
};

MonomialIdeal evaluate(const FamilySpec& spec,
                       const std::vector<Integer>& point);

// Calls fn(index, point) for every lattice point in row-major order.
void for_each_point(const Box& box,
                    const std::function<void(std::size_t,
                                             const std::vector<Integer>&)>& fn);

std::vector<std::pair<std::vector<Integer>, MonomialIdeal>> iterate(
    const FamilySpec& spec, const Box& box);

struct AssUnion {
  std::vector<MonomialIdeal> primes;  // sorted, deduplicated
  bool stabilized = false;  // first half of the box already saw them all
};

// Union of Ass(A/I(n)) over the box. Components with I(n) = (1) contribute
// nothing; zero components contribute the zero prime.
AssUnion ass_union(const FamilySpec& spec, const Box& box);

}  // namespace upd
