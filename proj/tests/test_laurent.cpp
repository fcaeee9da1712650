#include <doctest.h>

#include <complex>
#include <random>

#include "mahler/laurent.hpp"

using namespace mahler;

namespace {

LaurentPoly P(const char* s) { return parse(s); }
LaurentPoly P(const char* s, int d) { return parse(s, d); }

// small random Laurent polynomial: coefficients in [-3,3], exponents in
// [-2,2], d variables
LaurentPoly random_poly(std::mt19937_64& rng, int d, int max_terms = 5) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2), nterms(0, max_terms);
  LaurentPoly::TermMap t;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    ExponentVector e(d);
    for (int j = 0; j < d; ++j) e[j] = expo(rng);
    const int c = coef(rng);
    if (c == 0) continue;
    auto [it, inserted] = t.emplace(std::move(e), c);
    if (!inserted) it->second += c;
  }
  for (auto it = t.begin(); it != t.end();)
    it = (it->second == 0) ? t.erase(it) : std::next(it);
  return LaurentPoly::from_terms(d, std::move(t));
}

LaurentPoly random_nonzero(std::mt19937_64& rng, int d, int max_terms = 5) {
  for (;;) {
    LaurentPoly f = random_poly(rng, d, max_terms);
    if (!f.is_zero()) return f;
  }
}

}  // namespace

TEST_CASE("parse: grammar and examples") {
  CHECK(P("(u1-1)*(u2-1)") == P("u1*u2-u1-u2+1"));
  CHECK(P("0").is_zero());
  CHECK(P("0").num_vars() == 1);

  const LaurentPoly moss = P("u1^-2*u2^-2+u1^-1-u2^-1-1+u1-u2+u1^2*u2^2");
  CHECK(moss.term_count() == 7);
  CHECK(moss.min_exponent(1) == -2);
  CHECK(moss.min_exponent(2) == -2);
  CHECK(moss.coeff({-2, -2}) == 1);
  CHECK(moss.coeff({0, 1}) == -1);

  // aliases, whitespace, powers of parenthesized expressions
  CHECK(P("x*y - x - y + 1") == P("(u1-1)*(u2-1)"));
  CHECK(P(" ( x - 1 ) ^ 2 ") == P("u1^2-2*u1+1"));
  CHECK(P("2*u1^3") == P("u1^3+u1^3"));
  CHECK(P("-u1+1") == P("1-u1"));
  CHECK(P("u2+0*u1").num_vars() == 2);
}

TEST_CASE("parse: errors carry byte offsets") {
  CHECK_THROWS_AS(P("u1++1"), ParseError);
  CHECK_THROWS_AS(P("2u1"), ParseError);  // juxtaposition is not multiplication
  CHECK_THROWS_AS(P("(u1-1"), ParseError);
  CHECK_THROWS_AS(P("u0"), ParseError);
  CHECK_THROWS_AS(P("w"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("(u1+1)^-2"), ParseError);  // negative power of a non-unit

  try {
    P("u1 + $");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  // declared arity violations
  CHECK_THROWS_AS(P("u3", 2), ParseError);
  CHECK(P("u1", 3).num_vars() == 3);
}

TEST_CASE("printing: canonical descending-lex form and round trip") {
  CHECK(to_string(P("(u1-1)*(u2-1)")) == "u1*u2 - u1 - u2 + 1");
  CHECK(to_string(P("0")) == "0");
  CHECK(to_string(P("u1^-1 - 1")) == "-1 + u1^-1");
  CHECK(to_string(P("-2*u1*u2^-3")) == "-2*u1*u2^-3");

  std::mt19937_64 rng(12345);
  for (int d = 1; d <= 3; ++d) {
    for (int i = 0; i < 60; ++i) {
      const LaurentPoly f = random_poly(rng, d, 6);
      CHECK(parse(to_string(f), d) == f);
    }
  }
}

TEST_CASE("add/mul: spec examples") {
  CHECK(add(P("u1-1"), P("1")) == P("u1"));
  const LaurentPoly f = P("u1^2*u2 - 3*u2^-1");
  CHECK(add(f, negate(f)).is_zero());
  CHECK(add(P("u1*u2-u1-u2+1"), P("u1+u2")) == P("u1*u2+1"));

  CHECK(mul(P("u1-1", 2), P("u2-1")) == P("u1*u2-u1-u2+1"));
  CHECK(mul(f, P("1", 2)) == f);
  CHECK(mul(P("u1-1"), P("u1-1")) == P("u1^2-2*u1+1"));

  CHECK_THROWS_AS(add(P("u1"), P("u2+0*u1*u3")), std::invalid_argument);
  CHECK_THROWS_AS(mul(P("u1"), P("u1+u2")), std::invalid_argument);
}

TEST_CASE("ring laws on random small polynomials") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly a = random_poly(rng, d), b = random_poly(rng, d),
                      c = random_poly(rng, d);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
  }
}

TEST_CASE("involute") {
  CHECK(involute(P("u1-1")) == P("u1^-1-1"));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly f = random_poly(rng, 2);
    CHECK(involute(involute(f)) == f);
  }
  // Lehmer's polynomial is reciprocal: involute equals it up to a unit
  const LaurentPoly L = P("1+u1-u1^3-u1^4-u1^5-u1^6-u1^7+u1^9+u1^10");
  CHECK(eq_up_to_unit(involute(L), L));
}

TEST_CASE("normalize") {
  CHECK(normalize(P("u1^-1-1")) == P("u1-1"));  // multiply by -u1
  CHECK(normalize(P("-u1*u2")) == P("1", 2));
  CHECK(normalize(P("0")).is_zero());

  std::mt19937_64 rng(21);
  for (int i = 0; i < 80; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly f = random_poly(rng, d);
    const LaurentPoly n = normalize(f);
    CHECK(normalize(n) == n);  // idempotent
    if (!n.is_zero()) {
      for (int v = 1; v <= d; ++v) CHECK(n.min_exponent(v) == 0);
      CHECK(n.terms().rbegin()->second > 0);
    }
    // unit tracking: unit * f == normalize(f)
    UnitMonomial u;
    const LaurentPoly n2 = normalize(f, u);
    CHECK(n2 == n);
    CHECK(mul(f, LaurentPoly::monomial(d, u.shift, u.sign)) == n);
  }
}

TEST_CASE("eq_up_to_unit is an equivalence compatible with units") {
  CHECK(eq_up_to_unit(P("u1-1"), P("1-u1")));
  CHECK(eq_up_to_unit(P("u1-1+0*u2"), mul(P("u1-1+0*u2"), P("u2^3"))));
  CHECK(!eq_up_to_unit(P("u1-1"), P("u1+1")));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly f = random_poly(rng, d);
    ExponentVector e(d);
    for (int j = 0; j < d; ++j) e[j] = static_cast<int>(rng() % 5) - 2;
    const LaurentPoly unit = LaurentPoly::monomial(d, e, (rng() & 1) ? 1 : -1);
    CHECK(eq_up_to_unit(f, mul(unit, f)));
  }
}

TEST_CASE("substitute") {
  // u_i -> -u_i
  CHECK(substitute(P("1+u1+u2"), MonomialMap::negate_all(2)) == P("1-u1-u2"));
  // r = (1,3): f_r(u) = (u-1)(u^3-1)
  const long long r[] = {1, 3};
  CHECK(substitute(P("(u1-1)*(u2-1)"), MonomialMap::power_line(r)) ==
        P("(u1-1)*(u1^3-1)"));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const LaurentPoly f = random_poly(rng, 2);
    CHECK(substitute(f, MonomialMap::identity(2)) == f);
  }
  // multiplicativity: substitute(f*g) = substitute(f)*substitute(g)
  for (int i = 0; i < 40; ++i) {
    const LaurentPoly f = random_poly(rng, 2), g = random_poly(rng, 2);
    MonomialMap m = MonomialMap::negate_all(2);
    m.images[1].exponents = {1, 2};  // u2 -> -u1*u2^2
    CHECK(substitute(mul(f, g), m) == mul(substitute(f, m), substitute(g, m)));
  }
}

TEST_CASE("partial_derivative") {
  CHECK(partial_derivative(P("(u1-1)*(u2-1)"), 2) == P("u1-1+0*u2"));
  CHECK(partial_derivative(P("5", 2), 1).is_zero());
  CHECK(partial_derivative(P("u1^-1"), 1) == P("-u1^-2"));
  CHECK_THROWS_AS(partial_derivative(P("u1"), 2), std::invalid_argument);
}

TEST_CASE("set_var_one") {
  CHECK(set_var_one(P("(u1-1)*(u2-1)"), 2).is_zero());
  CHECK(set_var_one(P("7", 2), 1) == P("7"));
  CHECK(set_var_one(P("u1*u2^2 + u2^-1*u1"), 2) == P("2*u1"));
  // d = 1 collapses to a constant in one variable
  CHECK(set_var_one(P("u1^3 - u1 + 4"), 1) == P("4"));
}

TEST_CASE("exact_divide") {
  CHECK(exact_divide(P("u1*u2-u1-u2+1"), P("u2-1+0*u1")).value() == P("u1-1+0*u2"));
  CHECK(!exact_divide(P("u1-1+0*u2"), P("u2-1+0*u1")).has_value());
  // quotient from the three-component example
  const LaurentPoly big = P("(u2-1)*(u3-1)*(u1+2*u2-2*u1*u2-u2^2)");
  const auto q = exact_divide(big, P("u3-1+0*u1*u2"));
  REQUIRE(q.has_value());
  CHECK(eq_up_to_unit(*q, P("(u2-1)*(u1+2*u2-2*u1*u2-u2^2)+0*u3")));
  CHECK_THROWS_AS(exact_divide(P("u1"), P("0")), std::invalid_argument);

  // Laurent units divide everything
  CHECK(exact_divide(P("u1"), P("u1^2")).value() == P("u1^-1"));

  std::mt19937_64 rng(77);
  for (int i = 0; i < 80; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly f = random_poly(rng, d), g = random_nonzero(rng, d);
    const auto h = exact_divide(mul(f, g), g);
    REQUIRE(h.has_value());
    CHECK(*h == f);
  }
}

TEST_CASE("evaluate") {
  using C = std::complex<double>;
  const C one{1.0, 0.0};
  {
    const C pt[] = {one};
    CHECK(std::abs(evaluate(P("u1-1"), pt)) == 0.0);
    const LaurentPoly L = P("1+u1-u1^3-u1^4-u1^5-u1^6-u1^7+u1^9+u1^10");
    CHECK(evaluate(L, pt).real() == doctest::Approx(-1.0));  // sum of coefficients
  }
  {
    const C pt[] = {one, one};
    CHECK(evaluate(P("1+u1+u2"), pt).real() == doctest::Approx(3.0));
    CHECK_THROWS_AS(evaluate(P("1+u1+u2"), std::span<const C>(&one, 1)),
                    std::invalid_argument);
    const C bad[] = {one, C{0.0, 0.0}};
    CHECK_THROWS_AS(evaluate(P("u2^-1+u1"), bad), std::domain_error);
  }

  // ring homomorphism within 1e-12 relative on the torus
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ang(0.0, 1.0);
  std::uniform_int_distribution<int> coef(-1000, 1000);
  for (int i = 0; i < 50; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    LaurentPoly f = random_poly(rng, d), g = random_poly(rng, d);
    f = scale(f, coef(rng));
    std::vector<C> pt(d);
    for (auto& p : pt) p = std::polar(1.0, 6.283185307179586 * ang(rng));
    const C lhs = evaluate(mul(f, g), pt);
    const C rhs = evaluate(f, pt) * evaluate(g, pt);
    const double scale_mag =
        std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CHECK(std::abs(lhs - rhs) / scale_mag < 1e-12);
  }

  // torus evaluation agrees with generic evaluation at unit-modulus points
  for (int i = 0; i < 30; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const LaurentPoly f = random_poly(rng, d);
    std::vector<double> angles(d);
    std::vector<C> pt(d);
    for (int j = 0; j < d; ++j) {
      angles[j] = ang(rng);
      pt[j] = std::polar(1.0, 6.283185307179586 * angles[j]);
    }
    CHECK(std::abs(evaluate_torus(f, angles) - evaluate(f, pt)) < 1e-9);
  }
}
