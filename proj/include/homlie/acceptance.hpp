#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "homlie/sl2.hpp"

namespace homlie {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Seeded rational sampler: numerator in [-9, 9], denominator in [1, 5].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  Rational next();
  Rational next_nonzero();
  GenDer5 tuple();
  GenDer5 nonzero_tuple();

 private:
  std::mt19937_64 rng_;
};

/// Runs criteria 1-8. Criterion 9 (CLI determinism) needs the executable and lives in the
/// acceptance test binary.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// J^1..J^3 as tabulated in the original derivation (J^4, J^5 agree with act_closed). Kept only so
/// the acceptance suite can report how far the tabulated formulas are from conjugation.
GenDer5 tabulated_j_action(const Rational& a, const Rational& c, const GenDer5& d);

}  // namespace homlie
