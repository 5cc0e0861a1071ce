#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "upd/ideal.hpp"

namespace upd {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  // Re-runnable inline-ideal specs for the first failing case, after greedy
  // shrinking; empty while everything passes.
  std::string counterexample;
};

// The randomized invariant suites from every module, run case-by-case against
// the enumeration oracles. Suites draw from independent sub-seeded streams,
// so the sequence for a given (seed, cases) never changes.
std::vector<SuiteResult> run_oracle_suites(std::uint64_t seed,
                                           std::uint64_t cases);

// Single suite by name (the acceptance checks size individual suites
// differently). Unknown names throw.
SuiteResult run_oracle_suite(const std::string& name, std::uint64_t seed,
                             std::uint64_t cases);

std::vector<std::string> oracle_suite_names();

// Greedy minimization of a failing case: drops generators, then decrements
// exponents, while the invariant keeps failing. `holds` returns true when the
// inputs satisfy the invariant.
std::vector<MonomialIdeal> minimize_failing_case(
    std::vector<MonomialIdeal> inputs,
    const std::function<bool(const std::vector<MonomialIdeal>&)>& holds);

// The minimized case as re-runnable inline-ideal specs.
std::string render_failing_case(const std::vector<MonomialIdeal>& inputs);

}  // namespace upd
