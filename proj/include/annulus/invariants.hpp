#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace annulus {

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed;
  std::string detail;
};

// Accepts module names and the aliases elliptic, hyperbolic, complex.
// Throws DomainError for anything else.
std::string canonical_module(const std::string& name);

// Runs every property of the selected module (all modules for an empty
// filter). Each module draws from its own generator seeded by (seed, module),
// so a filter never changes the samples a module sees.
std::vector<PropertyResult> run_invariants(std::uint64_t seed, const std::string& filter = "");

constexpr std::uint64_t kDefaultSeed = 20260101;

}  // namespace annulus
