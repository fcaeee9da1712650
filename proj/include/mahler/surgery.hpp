#ifndef MAHLER_SURGERY_HPP
#define MAHLER_SURGERY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mahler/laurent.hpp"
#include "mahler/measure.hpp"

namespace mahler {

// An Alexander polynomial with its surgery metadata: component count d,
// linking numbers lambda_i = Lk(l_i, l_d) of the first d-1 components with
// the surgery component, and the (normalized) polynomial itself.
struct LinkPoly {
  LaurentPoly delta{1};
  int d = 2;
  std::vector<long long> linking;  // length d-1
  std::string name;

  bool zero_linking() const;
};

// Validates shape and Torres condition (1) (delta = involute(delta) up to a
// unit); throws invalid_argument on failure.
LinkPoly make_link_poly(LaurentPoly delta, std::vector<long long> linking,
                        std::string name = {});

struct TorresReport {
  bool condition1_holds = false;
  bool condition2_checked = false;
  LaurentPoly condition2_lhs{1};
  LaurentPoly condition2_rhs{1};
  bool condition2_holds = false;
};

// Condition (1) always; condition (2) when the sublink polynomial
// Delta_{l'} (in d-1 variables) is supplied: compares delta(u, 1) against
// (u1^{lambda1} - 1)/(u1 - 1) * Delta_{l'} for d = 2 and
// (u1^{lambda1} ... u_{d-1}^{lambda_{d-1}} - 1) * Delta_{l'} for d >= 3,
// up to units.
TorresReport torres_check(const LinkPoly& l,
                          const std::optional<LaurentPoly>& sublink = {});

// The geometric-sum divisor (u^lambda - 1)/(u - 1) in one variable embedded
// in num_vars variables: 1 + u1 + ... + u1^{lambda-1} for lambda > 0, its bar
// image for lambda < 0, and 0 for lambda = 0.
LaurentPoly torres_quotient_divisor(long long lambda, int num_vars);

// f^(q): substitute u_d -> (u_1^{-lambda_1} ... u_{d-1}^{-lambda_{d-1}})^q,
// landing in d-1 variables. Pure substitution; any linking vector allowed.
LaurentPoly specialize_q(const LinkPoly& l, long long q);

// Delta_{l(q)} up to a unit, recovered from f^(q) by removing the measure-1
// factor: divide by u1^{lambda1}...u_{d-1}^{lambda_{d-1}} - 1 (d >= 3) or by
// the geometric sum (u1^{lambda1}-1)/(u1-1) (d = 2). Requires some
// lambda_i != 0; a division failure means the linking metadata contradicts
// the polynomial and is reported as such.
LaurentPoly surgered_polynomial(const LinkPoly& l, long long q);

// Zero-linking limit of (1/q) Delta_{l(q)} via the division route: divide
// delta by u_d - 1, set u_d = 1, and for d = 2 multiply by u1 - 1.
// Requires all lambda_i = 0.
LaurentPoly zero_linking_limit(const LinkPoly& l);

// The same limit via the derivative route (d/du_d at u_d = 1); independent
// implementation, agrees with the division route up to a unit.
LaurentPoly zero_linking_limit_derivative(const LinkPoly& l);

// (u_d - 1)^2 divides delta.
bool has_squared_factor(const LinkPoly& l);

// g = u_{d+1} f + involute(f); M(g) = M(f).
LaurentPoly boyd_lift(const LaurentPoly& f);

// Explicit surgery family Delta_{l(q)} = q * slope + intercept (the twist
// knots are q(u-1)^2 - u).
struct SurgeryFamily {
  LaurentPoly slope{1};
  LaurentPoly intercept{1};

  LaurentPoly at(long long q) const;
};

struct SweepRow {
  long long q = 0;
  LaurentPoly raw_poly{1};
  // exact scale applied to the measure when reporting (1 or 1/q)
  long long scale_num = 1;
  long long scale_den = 1;
  MeasureEstimate measure;
};

struct SweepOptions {
  MeasureOptions engine;
  // zero-linking entries need an explicit family to produce per-q rows
  std::optional<SurgeryFamily> family;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  // zero-linking: the limit target M(zero_linking_limit(l)); rows are empty
  // when no explicit family is available (flagged, not an error)
  std::optional<MeasureEstimate> limit_target;
  bool family_missing = false;
};

// q = 1..q_max. Nonzero linking: rows carry M(f^(q)) (Mahler-equal to
// M(Delta_{l(q)})). Zero linking: computes the limit target and, when an
// explicit family is supplied, the per-q measures with scale 1/q.
SweepResult sweep(const LinkPoly& l, long long q_max, const SweepOptions& opts = {});

}  // namespace mahler

#endif
