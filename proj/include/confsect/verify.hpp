#pragma once

#include "confsect/builders.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace confsect {

struct Violation {
  Configuration x;
  std::string kind;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  long long samples = 0;
  std::vector<Violation> violations;  // capped; see violation_count
  long long violation_count = 0;
  double max_ratio = 0;  // max d(f(x), f(y)) / d_max(x, y)
  double lipschitz = 0;  // envelope the ratio was checked against
  long long transition_pass = 0;
  long long transition_fail = 0;

  bool ok() const { return violation_count == 0 && transition_fail == 0; }
  void add(Violation v);
  void merge(const VerificationReport& o);
};

// Documented continuity envelope per method.
double default_lipschitz(const std::string& method);

// Uniform token placement on a dyadic grid, tokens at least 1e-6 apart.
Configuration random_configuration(const Graph& g, int n, std::mt19937_64& rng);

VerificationReport verify_identifying(const IdentifyingFunction& f, long long samples, std::uint64_t seed);

VerificationReport verify_continuity(const IdentifyingFunction& f, int paths, int steps, std::uint64_t seed,
                                     double lipschitz);

VerificationReport verify_transition_consistency(const IdentifyingFunction& f, int trials, std::uint64_t seed);

// Flood fill over the edges cut into `resolution` cells and at the tokens.
std::vector<Component> oracle_components(const Graph& g, const Configuration& x, int resolution);

Json report_to_json(const Graph& g, const VerificationReport& r);

}  // namespace confsect
