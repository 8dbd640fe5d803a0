#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "divbound/primes.hpp"

namespace divbound {

struct LemmaCheck {
  std::string name;
  std::string range;  // human-readable description of what was covered
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> examples;  // first few violating inputs
  double worst_margin = 0.0;          // smallest (lhs - rhs) seen, oriented so > 0 is good
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool pass() const;
};

struct LemmaOptions {
  std::size_t k_max = 100000;
  std::size_t ramanujan_samples = 10000;
  std::uint64_t ramanujan_max_n = 1000000000;
  std::size_t wigert_samples = 1000;
  std::uint64_t seed = 20240601;
};

// Prime-sum inequalities over their stated k ranges, strict monotonicity of
// log(1 + e^x/(kx)) (1 + c log x / x) on x in [1, 30] (step 1e-3) for
// k in {1,2,5,10}, c in {0.5,1,2}, the Ramanujan product bound on random
// n <= ramanujan_max_n, and the (1 + log n/(k log k))^k bound on random
// primary n with omega in [74, 200].
LemmaReport lemma_suite(const PrimeTable& table, const LemmaOptions& options = {});

// The monotone function itself, exposed for tests.
double lemma3_function(std::size_t k, double c, double x);

}  // namespace divbound
