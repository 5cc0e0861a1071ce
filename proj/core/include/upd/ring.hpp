#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace upd {

// The ambient polynomial ring K[x_1..x_d], fixed per computation. Only the
// variable names matter; the coefficient field is never materialized.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> var_names);

  std::size_t dim() const { return var_names_.size(); }
  const std::string& var_name(std::size_t i) const { return var_names_[i]; }
  const std::vector<std::string>& var_names() const { return var_names_; }

  friend bool operator==(const RingContext& a, const RingContext& b) {
    return a.var_names_ == b.var_names_;
  }

 private:
  std::vector<std::string> var_names_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr make_ring_context(std::vector<std::string> var_names);

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace upd
