#include "upd/ring.hpp"

#include <set>

#include "upd/errors.hpp"

namespace upd {

RingContext::RingContext(std::vector<std::string> var_names)
    : var_names_(std::move(var_names)) {
  if (var_names_.empty()) {
    throw Error(ErrorKind::Usage, "ring context needs at least one variable");
  }
  std::set<std::string> seen;
  for (const auto& name : var_names_) {
    if (name.empty()) {
      throw Error(ErrorKind::Usage, "variable names must be non-empty");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorKind::Usage, "duplicate variable name '" + name + "'");
    }
  }
}

ContextPtr make_ring_context(std::vector<std::string> var_names) {
  return std::make_shared<const RingContext>(std::move(var_names));
}

}  // namespace upd
