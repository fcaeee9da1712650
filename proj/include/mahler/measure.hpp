#ifndef MAHLER_MEASURE_HPP
#define MAHLER_MEASURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mahler/estimate.hpp"
#include "mahler/laurent.hpp"
#include "mahler/unipoly.hpp"

namespace mahler {

// r = (1, n, n^2, ..., n^{d-1}) together with its separation
// <r> = min{ |m|_inf : 0 != m in Z^d, (r, m) = 0 }, which equals n for this
// family (base-n digit argument).
struct SpecializationVector {
  std::vector<long long> r;
  long long separation = 0;
};

SpecializationVector specialization_vector(int d, long long n);

struct MeasureOptions {
  enum class Engine { automatic, jensen, boyd_lawton, quadrature };
  Engine engine = Engine::automatic;
  // Boyd-Lawton schedule; empty = dimension-aware default.
  std::vector<long long> schedule;
  long long samples = 1 << 20;
  std::uint64_t seed = 1;
};

// Dimension-aware default schedule (geometric, so the last-3 iterate spread
// tracks the remaining bias).
std::vector<long long> default_schedule(int d);

// Specializes f along r(n) for each n in the schedule, measures each via
// Jensen, and reports the last iterate; error = spread of the final three
// iterates plus the root-residual bound of the last one.
MeasureEstimate boyd_lawton(const LaurentPoly& f, std::span<const long long> schedule);

// exp of the mean of log|f| over a rank-1 Kronecker lattice (golden-ratio
// family generator) on the d-torus; deterministic given the seed. Error =
// spread of 8 sub-batch means. Near-zero samples (|f| < 1e-300) are skipped
// and counted in diagnostics.
MeasureEstimate quadrature(const LaurentPoly& f, long long samples, std::uint64_t seed);

// Mahler measure dispatch: 0 -> 0, units -> 1 exactly, d = 1 -> Jensen,
// d = 2,3 -> Boyd-Lawton with a quadrature cross-check folded into the error
// bound, d >= 4 -> quadrature (the pinned specialization family needs
// infeasible degrees there).
MeasureEstimate measure(const LaurentPoly& f, const MeasureOptions& opts = {});

// M(1 + u1 + u2) = exp((3 sqrt(3) / 4 pi) L(2, chi_3)), chi_3 the quadratic
// character mod 3; series summed in paired terms to < 1e-12.
double smyth_chi3();

// M(1 + u1 + u2 + u3) = exp(7 zeta(3) / 2 pi^2); zeta(3) by direct summation
// with an integral tail bound, absolute error < 1e-12.
double smyth_zeta3();

// zeta(3) itself (exposed for diagnostics).
double zeta3();

}  // namespace mahler

#endif
