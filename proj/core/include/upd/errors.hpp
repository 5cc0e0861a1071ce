#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "upd/types.hpp"

namespace upd {

enum class ErrorKind {
  DimensionMismatch,
  ArityMismatch,
  UnitIdeal,
  ZeroColon,
  BadBox,
  CapExceeded,
  KTooSmall,
  IntersectionMismatch,
  NotPrimary,
  Parse,
  Usage,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Search hit the cap before the predicate closed. Box drivers fill in the
// lattice point; direct calls leave it empty.
class CapExceededError : public Error {
 public:
  CapExceededError(std::uint64_t cap, std::string prime,
                   std::vector<Integer> point = {});

  std::uint64_t cap() const { return cap_; }
  const std::string& prime() const { return prime_; }
  const std::vector<Integer>& point() const { return point_; }
  void set_point(std::vector<Integer> point);

 private:
  std::uint64_t cap_;
  std::string prime_;
  std::vector<Integer> point_;
};

// The requested exponent k is below the uniform bound for this component:
// either some P-primary piece is missing from the decomposition of P^k + I,
// or the assembled intersection misses I.
class KTooSmallError : public Error {
 public:
  KTooSmallError(std::uint64_t k, const std::string& detail,
                 std::vector<Integer> point = {});

  std::uint64_t k() const { return k_; }
  const std::vector<Integer>& point() const { return point_; }
  void set_point(std::vector<Integer> point);

 private:
  std::uint64_t k_;
  std::vector<Integer> point_;
};

}  // namespace upd
