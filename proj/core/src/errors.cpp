#include "upd/errors.hpp"

namespace upd {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::ArityMismatch: return "arity_mismatch";
    case ErrorKind::UnitIdeal: return "unit_ideal";
    case ErrorKind::ZeroColon: return "zero_colon";
    case ErrorKind::BadBox: return "bad_box";
    case ErrorKind::CapExceeded: return "cap_exceeded";
    case ErrorKind::KTooSmall: return "k_too_small";
    case ErrorKind::IntersectionMismatch: return "intersection_mismatch";
    case ErrorKind::NotPrimary: return "not_primary";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

CapExceededError::CapExceededError(std::uint64_t cap, std::string prime,
                                   std::vector<Integer> point)
    : Error(ErrorKind::CapExceeded,
            "search for prime (" + prime + ") exceeded cap " +
                std::to_string(cap) + "; raise --cap"),
      cap_(cap),
      prime_(std::move(prime)),
      point_(std::move(point)) {}

void CapExceededError::set_point(std::vector<Integer> point) {
  point_ = std::move(point);
}

KTooSmallError::KTooSmallError(std::uint64_t k, const std::string& detail,
                               std::vector<Integer> point)
    : Error(ErrorKind::KTooSmall,
            "k = " + std::to_string(k) + " is too small: " + detail),
      k_(k),
      point_(std::move(point)) {}

void KTooSmallError::set_point(std::vector<Integer> point) {
  point_ = std::move(point);
}

}  // namespace upd
