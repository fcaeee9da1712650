#ifndef MAHLER_LAURENT_HPP
#define MAHLER_LAURENT_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mahler {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of a monomial u_1^{e_1}...u_d^{e_d}. Length = ambient
// variable count; std::vector's operator< is the lex order used everywhere
// for canonicalization.
using ExponentVector = std::vector<int>;

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Sparse multivariate Laurent polynomial over Z. Invariants: no stored
// coefficient is zero, exponent vectors all have length num_vars(), the zero
// polynomial is the empty term map. Immutable after construction.
class LaurentPoly {
public:
  using TermMap = std::map<ExponentVector, Int>;

  explicit LaurentPoly(int num_vars = 1);

  static LaurentPoly zero(int num_vars);
  static LaurentPoly constant(int num_vars, Int c);
  static LaurentPoly monomial(int num_vars, ExponentVector e, Int c);
  // 1-based variable index, as in u1..u9.
  static LaurentPoly variable(int num_vars, int var);
  static LaurentPoly from_terms(int num_vars, TermMap terms);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Int coeff(const ExponentVector& e) const;
  // true when the polynomial is a single term +-u^e (a unit of the ring).
  bool is_unit() const;
  // Per-variable minimum/maximum exponent over the support; zero poly -> 0.
  int min_exponent(int var) const;
  int max_exponent(int var) const;

  bool operator==(const LaurentPoly& rhs) const = default;

private:
  int num_vars_;
  TermMap terms_;
};

// A monomial substitution u_i -> sign_i * prod_j v_j^{E_ij}. Image
// coefficients are restricted to +-1 so substitution stays in the ring and
// units map to units.
struct MonomialMap {
  struct Image {
    int sign = 1;  // +1 or -1
    ExponentVector exponents;
  };
  int source_num_vars = 0;
  int target_num_vars = 0;
  std::vector<Image> images;  // one per source variable

  static MonomialMap identity(int num_vars);
  // u_i -> -u_i for every variable.
  static MonomialMap negate_all(int num_vars);
  // u_i -> u^{r_i} into a single target variable.
  static MonomialMap power_line(std::span<const long long> r);
};

// Ring operations (all exact; dimension mismatch throws invalid_argument).
LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly negate(const LaurentPoly& a);
LaurentPoly scale(const LaurentPoly& a, const Int& c);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a) { return negate(a); }

// The bar involution u_i -> u_i^{-1}.
LaurentPoly involute(const LaurentPoly& f);

// Canonical representative of f modulo units: minimum exponent 0 in every
// variable and positive leading (lex-largest) coefficient. normalize(0) = 0.
LaurentPoly normalize(const LaurentPoly& f);
// Same, returning the unit m with m * f = normalize(f): (sign, monomial shift).
struct UnitMonomial {
  int sign = 1;
  ExponentVector shift;
};
LaurentPoly normalize(const LaurentPoly& f, UnitMonomial& unit_out);

// f = g up to multiplication by a unit +-u^e.
bool eq_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

// Exact image under a monomial map; exponents computed in 64-bit and checked.
LaurentPoly substitute(const LaurentPoly& f, const MonomialMap& m);

// Term-wise formal derivative in variable var (1-based); Laurent exponents
// allowed.
LaurentPoly partial_derivative(const LaurentPoly& f, int var);

// Evaluation homomorphism u_var = 1; result has one variable fewer (d >= 2)
// or is a constant polynomial in one variable (d = 1).
LaurentPoly set_var_one(const LaurentPoly& f, int var);

// Exact division in the Laurent ring: returns h with g*h = f, or nullopt when
// f is not divisible by g. "Not divisible" is a normal outcome, not an error.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g);

// Pointwise evaluation; Horner grouping per variable. Every coordinate must
// be nonzero (negative exponents).
std::complex<double> evaluate(const LaurentPoly& f,
                              std::span<const std::complex<double>> point);

// Evaluation at the torus point s_j = exp(2*pi*i*angle_j); exact phase
// arithmetic per term, used by the quadrature engine.
std::complex<double> evaluate_torus(const LaurentPoly& f, std::span<const double> angles);

// Text form. parse() accepts the grammar
//   expr := ('+'|'-')? term (('+'|'-') term)*
//   term := factor ('*' factor)*
//   factor := INT | VAR power? | '(' expr ')' power?
//   power := '^' ('-'? INT) ; VAR := 'u' digits | 'x' | 'y' | 'z'
// with x,y,z aliases for u1,u2,u3. Errors carry a byte offset.
// expected_num_vars, when given, fixes the arity and rejects larger indices.
LaurentPoly parse(std::string_view text, std::optional<int> expected_num_vars = {});

// Canonical printing: terms in descending lex order, explicit '*' and '^',
// e.g. "u1*u2 - u1 - u2 + 1". parse(to_string(f)) == f.
std::string to_string(const LaurentPoly& f);

}  // namespace mahler

#endif
