#ifndef MAHLER_UNIPOLY_HPP
#define MAHLER_UNIPOLY_HPP

#include <complex>
#include <string>
#include <vector>

#include "mahler/estimate.hpp"
#include "mahler/laurent.hpp"

namespace mahler {

// Dense univariate integer polynomial c_0 + c_1 u + ... + c_n u^n with
// c_n != 0; the zero polynomial has an empty coefficient vector.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs);
  static UniPoly from_ints(std::initializer_list<long long> ascending);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& leading() const { return coeffs_.back(); }
  Int coeff(int k) const;
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  bool operator==(const UniPoly& rhs) const = default;

private:
  std::vector<Int> coeffs_;  // ascending, trailing (leading) entry nonzero
};

UniPoly add(const UniPoly& a, const UniPoly& b);
UniPoly mul(const UniPoly& a, const UniPoly& b);
UniPoly negate(const UniPoly& a);
inline UniPoly operator+(const UniPoly& a, const UniPoly& b) { return add(a, b); }
inline UniPoly operator*(const UniPoly& a, const UniPoly& b) { return mul(a, b); }

// Coefficient reversal u^n p(1/u); equals the bar involution up to a unit.
UniPoly reverse(const UniPoly& p);

// Exact division; nullopt when the remainder is nonzero.
std::optional<UniPoly> exact_divide(const UniPoly& f, const UniPoly& g);

// Densify a one-variable Laurent polynomial after unit normalization; the
// dropped unit factor does not change the Mahler measure.
UniPoly from_laurent(const LaurentPoly& f);
LaurentPoly to_laurent(const UniPoly& p);
std::string to_string(const UniPoly& p);

// All complex roots with per-root residual estimates.
struct RootSet {
  std::vector<std::complex<double>> roots;
  // Backward-relative residual |p(r)| / sum_k |c_k| max(|r|,1)^k per root.
  std::vector<double> residuals;
  // Newton-correction magnitude |p(r)/p'(r)| at the final iterate (absolute
  // root-error estimate; for clustered roots the cluster radius applies).
  std::vector<double> newton_errors;
  // Groups of root indices within the 1e-7 cluster tolerance (multiplicities).
  std::vector<std::vector<int>> multiplicity_clusters;
  bool converged = true;
  int iterations = 0;
};

// Aberth-Ehrlich simultaneous iteration. Deterministic given the polynomial.
// Non-convergence after the iteration cap returns the best iterate with
// converged=false; residuals then tell whether the roots are still usable.
RootSet find_roots(const UniPoly& p);

// Jensen's formula: |c_n| * prod max(|r_j|, 1); measure of the zero
// polynomial is 0. Error bound propagated from root residuals.
MeasureEstimate mahler_jensen(const UniPoly& p);

// Coefficient sequence is a palindrome up to sign.
bool is_reciprocal(const UniPoly& p);

// The n-th cyclotomic polynomial (exact, memoized).
const UniPoly& cyclotomic(int n);

// Exact test: p is +- a monomial times a product of cyclotomic polynomials
// (equivalently M(p) = 1). Decided by trial division by Phi_n for all n with
// phi(n) <= remaining degree.
bool kronecker_test(const UniPoly& p);

// Divides out monomial and cyclotomic factors (to multiplicity); the
// measure-1 part of p is the complement of what remains.
UniPoly strip_cyclotomic_factors(const UniPoly& p);

enum class AlgebraicTag { kronecker, pv, salem, other };

struct AlgebraicClass {
  AlgebraicTag tag = AlgebraicTag::other;
  // For pv/salem: the modulus of the unique root outside the unit circle.
  // Root configurations are identified up to u -> -u, so a negative real
  // dominant root reports its absolute value (the measure).
  double dominant_root = 0.0;
  bool irreducibility_certified = false;  // always false in v1
  std::string note;
};

const char* tag_name(AlgebraicTag t);

// Root-configuration classification after exact cyclotomic stripping, with
// circle tolerance 1e-8. Requires monic input of degree >= 2 (throws
// otherwise). Ambiguous configurations (roots inside the tolerance band on
// the deciding side) come back as "other" with a note.
AlgebraicClass classify(const UniPoly& p);

}  // namespace mahler

#endif
