#include "upd/family.hpp"

#include <algorithm>

#include "upd/decomposition.hpp"
#include "upd/errors.hpp"

namespace upd {

namespace {

constexpr std::size_t kMaxBoxPoints = std::size_t{1} << 22;

}  // namespace

Box::Box(std::vector<std::pair<Integer, Integer>> ranges)
    : ranges_(std::move(ranges)) {
  if (ranges_.empty()) {
    throw Error(ErrorKind::BadBox, "box needs at least one range");
  }
  Integer count = 1;
  for (const auto& [lo, hi] : ranges_) {
    if (lo < 0) throw Error(ErrorKind::BadBox, "box bounds must be >= 0");
    if (lo > hi) {
      throw Error(ErrorKind::BadBox,
                  "empty range " + lo.str() + ".." + hi.str());
    }
    count *= hi - lo + 1;
    if (count > kMaxBoxPoints) {
      throw Error(ErrorKind::BadBox, "box has too many lattice points");
    }
  }
  count_ = static_cast<std::size_t>(count);
}

std::vector<Integer> Box::point_at(std::size_t index) const {
  std::vector<Integer> point(ranges_.size());
  std::size_t rest = index;
  for (std::size_t j = ranges_.size(); j-- > 0;) {
    const auto& [lo, hi] = ranges_[j];
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    point[j] = lo + Integer(rest % width);
    rest /= width;
  }
  return point;
}

bool Box::in_first_half(const std::vector<Integer>& point) const {
  for (std::size_t j = 0; j < ranges_.size(); ++j) {
    const auto& [lo, hi] = ranges_[j];
    if (point[j] > lo + (hi - lo) / 2) return false;
  }
  return true;
}

MonomialIdeal evaluate(const FamilySpec& spec,
                       const std::vector<Integer>& point) {
  if (point.size() != spec.arity()) {
    throw Error(ErrorKind::ArityMismatch,
                "point has " + std::to_string(point.size()) +
                    " coordinates, family has " +
                    std::to_string(spec.arity()) + " parameters");
  }
  for (const auto& c : point) {
    if (c < 0) throw Error(ErrorKind::ArityMismatch, "negative coordinate");
  }
  std::vector<Monomial> gens;
  if (const auto* graded = std::get_if<GradedData>(&spec.data)) {
    for (const auto& g : graded->generators) {
      bool passes = true;
      for (std::size_t j = 0; j < point.size(); ++j) {
        if (g.thresholds[j] > point[j]) {
          passes = false;
          break;
        }
      }
      if (passes) gens.push_back(g.base);
    }
  } else {
    const auto& affine = std::get<AffineData>(spec.data);
    for (const auto& forms : affine.generators) {
      Monomial m = Monomial::one(spec.context->dim());
      for (std::size_t v = 0; v < forms.size(); ++v) {
        Integer e = forms[v].constant;
        for (std::size_t j = 0; j < point.size(); ++j) {
          e += forms[v].coeffs[j] * point[j];
        }
        m.exponents[v] = e;
      }
      gens.push_back(std::move(m));
    }
  }
  return minimalize(spec.context, std::move(gens));
}

void for_each_point(
    const Box& box,
    const std::function<void(std::size_t, const std::vector<Integer>&)>& fn) {
  for (std::size_t i = 0; i < box.point_count(); ++i) {
    fn(i, box.point_at(i));
  }
}

std::vector<std::pair<std::vector<Integer>, MonomialIdeal>> iterate(
    const FamilySpec& spec, const Box& box) {
  std::vector<std::pair<std::vector<Integer>, MonomialIdeal>> out;
  out.reserve(box.point_count());
  for_each_point(box, [&](std::size_t, const std::vector<Integer>& n) {
    out.emplace_back(n, evaluate(spec, n));
  });
  return out;
}

AssUnion ass_union(const FamilySpec& spec, const Box& box) {
  std::vector<MonomialIdeal> all;
  std::vector<MonomialIdeal> half;
  for_each_point(box, [&](std::size_t, const std::vector<Integer>& n) {
    MonomialIdeal ideal = evaluate(spec, n);
    if (ideal.is_unit()) return;  // L_n = 0 has no associated primes
    auto primes = associated_primes(ideal);
    all.insert(all.end(), primes.begin(), primes.end());
    if (box.in_first_half(n)) {
      half.insert(half.end(), primes.begin(), primes.end());
    }
  });
  auto dedupe = [](std::vector<MonomialIdeal>& v) {
    std::sort(v.begin(), v.end(), ideal_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(all);
  dedupe(half);
  const bool stabilized = half == all;
  return AssUnion{std::move(all), stabilized};
}

}  // namespace upd
