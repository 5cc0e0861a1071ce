#include "upd/ideal.hpp"

#include <algorithm>
#include <ostream>

#include "upd/errors.hpp"

namespace upd {

namespace {

void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!same_context(a.context(), b.context())) {
    throw Error(ErrorKind::DimensionMismatch,
                "operands live in different ring contexts");
  }
}

}  // namespace

MonomialIdeal MonomialIdeal::zero(ContextPtr ctx) {
  return minimalize(std::move(ctx), {});
}

MonomialIdeal MonomialIdeal::unit(ContextPtr ctx) {
  const std::size_t d = ctx->dim();
  return minimalize(std::move(ctx), {Monomial::one(d)});
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.dim() != ctx_->dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "monomial dimension disagrees with ring context");
  }
  for (const auto& g : gens_) {
    if (divides(g, m)) return true;
  }
  return false;
}

std::vector<Integer> MonomialIdeal::max_exponents() const {
  std::vector<Integer> mx(ctx_->dim(), Integer(0));
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < mx.size(); ++i) {
      if (g.exponents[i] > mx[i]) mx[i] = g.exponents[i];
    }
  }
  return mx;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  return a.gens_ == b.gens_;
}

MonomialIdeal minimalize(ContextPtr ctx, std::vector<Monomial> gens) {
  const std::size_t d = ctx->dim();
  for (const auto& g : gens) {
    if (g.dim() != d) {
      throw Error(ErrorKind::DimensionMismatch,
                  "generator dimension disagrees with ring context");
    }
    for (const auto& e : g.exponents) {
      if (e < 0) {
        throw Error(ErrorKind::Usage, "negative exponent in generator");
      }
    }
  }
  std::sort(gens.begin(), gens.end(), mono_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Generators come sorted by degree, so a divisor always precedes its
  // multiples; one forward pass keeps exactly the minimal set.
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(ctx), std::move(kept));
}

bool ideal_leq(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  for (const auto& g : a.gens()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::lexicographical_compare(a.gens().begin(), a.gens().end(),
                                      b.gens().begin(), b.gens().end(),
                                      mono_less);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) {
      gens.push_back(mul(g, h));
    }
  }
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::uint64_t k) {
  if (k == 0) return MonomialIdeal::unit(a.context());
  MonomialIdeal acc = a;
  for (std::uint64_t i = 1; i < k; ++i) {
    acc = product(acc, a);
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) {
      gens.push_back(lcm(g, h));
    }
  }
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& g) {
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const auto& h : a.gens()) {
    gens.push_back(colon_quotient(h, g));
  }
  return minimalize(a.context(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  if (b.is_zero()) {
    throw Error(ErrorKind::ZeroColon, "colon by the zero ideal");
  }
  MonomialIdeal acc = colon(a, b.gens()[0]);
  for (std::size_t i = 1; i < b.gens().size(); ++i) {
    acc = intersect(acc, colon(a, b.gens()[i]));
  }
  return acc;
}

SaturationResult saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  if (b.is_zero()) {
    throw Error(ErrorKind::ZeroColon, "saturation by the zero ideal");
  }
  MonomialIdeal cur = a;
  std::uint64_t l = 0;
  for (;;) {
    MonomialIdeal next = colon(cur, b);
    if (next == cur) return {std::move(cur), l};
    cur = std::move(next);
    ++l;
  }
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const auto& g : a.gens()) {
    gens.push_back(support(g));
  }
  return minimalize(a.context(), std::move(gens));
}

std::vector<std::string> gen_strings(const MonomialIdeal& a) {
  std::vector<std::string> out;
  out.reserve(a.gens().size());
  for (const auto& g : a.gens()) {
    out.push_back(to_string(*a.context(), g));
  }
  return out;
}

std::string to_string(const MonomialIdeal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& g : a.gens()) {
    if (!out.empty()) out += ", ";
    out += to_string(*a.context(), g);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& a) {
  return os << '(' << to_string(a) << ')';
}

}  // namespace upd
