#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <vector>

namespace nervekit {

using Rational = mpq_class;

// num/den in lowest terms; den must be nonzero.
Rational make_rational(int64_t num, int64_t den);

// Parses "p/q" or "p"; throws InputError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);
// Always "p/q", including q = 1.
std::string format_rational(const Rational& q);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

// minimize c·x subject to A x = b, x >= 0, solved exactly by the two-phase
// tableau simplex method with Bland's rule. An empty `c` asks for feasibility
// only.
LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

}  // namespace nervekit
