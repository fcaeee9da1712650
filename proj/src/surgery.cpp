#include "mahler/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mahler {

bool LinkPoly::zero_linking() const {
  return std::all_of(linking.begin(), linking.end(), [](long long v) { return v == 0; });
}

LinkPoly make_link_poly(LaurentPoly delta, std::vector<long long> linking, std::string name) {
  LinkPoly l;
  l.d = delta.num_vars();
  if (l.d < 2) throw std::invalid_argument("make_link_poly: need d >= 2 components");
  if (static_cast<int>(linking.size()) != l.d - 1)
    throw std::invalid_argument("make_link_poly: linking vector must have d-1 entries");
  if (!eq_up_to_unit(delta, involute(delta)))
    throw std::invalid_argument(
        "make_link_poly: Torres condition 1 fails (polynomial is not reciprocal)");
  l.delta = normalize(delta);
  l.linking = std::move(linking);
  l.name = std::move(name);
  return l;
}

LaurentPoly torres_quotient_divisor(long long lambda, int num_vars) {
  if (lambda == 0) return LaurentPoly::zero(num_vars);
  LaurentPoly::TermMap t;
  if (lambda > 0) {
    for (long long k = 0; k < lambda; ++k) {
      ExponentVector e(num_vars, 0);
      e[0] = static_cast<int>(k);
      t.emplace(std::move(e), 1);
    }
  } else {
    // (u^lambda - 1)/(u - 1) = -u^lambda (1 + u + ... + u^{|lambda|-1})
    for (long long k = 0; k < -lambda; ++k) {
      ExponentVector e(num_vars, 0);
      e[0] = static_cast<int>(lambda + k);
      t.emplace(std::move(e), -1);
    }
  }
  return LaurentPoly::from_terms(num_vars, std::move(t));
}

TorresReport torres_check(const LinkPoly& l, const std::optional<LaurentPoly>& sublink) {
  TorresReport rep;
  rep.condition1_holds = eq_up_to_unit(l.delta, involute(l.delta));
  if (!sublink) return rep;
  if (sublink->num_vars() != std::max(1, l.d - 1))
    throw std::invalid_argument("torres_check: sublink polynomial must have d-1 variables");

  rep.condition2_checked = true;
  rep.condition2_lhs = set_var_one(l.delta, l.d);
  if (l.d == 2) {
    rep.condition2_rhs = mul(torres_quotient_divisor(l.linking[0], 1), *sublink);
  } else {
    ExponentVector e(l.d - 1, 0);
    bool in_range = true;
    for (int i = 0; i < l.d - 1; ++i) {
      if (l.linking[i] > std::numeric_limits<int>::max() ||
          l.linking[i] < std::numeric_limits<int>::min())
        in_range = false;
      else
        e[i] = static_cast<int>(l.linking[i]);
    }
    if (!in_range) throw std::overflow_error("torres_check: linking number out of range");
    LaurentPoly factor = sub(LaurentPoly::monomial(l.d - 1, std::move(e), 1),
                             LaurentPoly::constant(l.d - 1, 1));
    rep.condition2_rhs = mul(factor, *sublink);
  }
  if (rep.condition2_lhs.is_zero() && rep.condition2_rhs.is_zero())
    rep.condition2_holds = true;
  else if (rep.condition2_lhs.is_zero() || rep.condition2_rhs.is_zero())
    rep.condition2_holds = false;
  else
    rep.condition2_holds = eq_up_to_unit(rep.condition2_lhs, rep.condition2_rhs);
  return rep;
}

LaurentPoly specialize_q(const LinkPoly& l, long long q) {
  if (q < 1) throw std::invalid_argument("specialize_q: q must be >= 1");
  const int d = l.d;
  const int dt = d - 1;
  MonomialMap m;
  m.source_num_vars = d;
  m.target_num_vars = dt;
  for (int i = 0; i < dt; ++i) {
    ExponentVector e(dt, 0);
    e[i] = 1;
    m.images.push_back({1, std::move(e)});
  }
  ExponentVector e(dt, 0);
  for (int i = 0; i < dt; ++i) {
    const long long k = -l.linking[i] * q;
    if (k > std::numeric_limits<int>::max() || k < std::numeric_limits<int>::min())
      throw std::overflow_error("specialize_q: exponent out of range");
    e[i] = static_cast<int>(k);
  }
  m.images.push_back({1, std::move(e)});
  return substitute(l.delta, m);
}

LaurentPoly surgered_polynomial(const LinkPoly& l, long long q) {
  if (l.zero_linking())
    throw std::invalid_argument(
        "surgered_polynomial: all linking numbers are zero; use zero_linking_limit");
  LaurentPoly fq = specialize_q(l, q);
  LaurentPoly divisor{1};
  if (l.d == 2) {
    divisor = torres_quotient_divisor(l.linking[0], 1);
  } else {
    ExponentVector e(l.d - 1, 0);
    for (int i = 0; i < l.d - 1; ++i) {
      if (l.linking[i] > std::numeric_limits<int>::max() ||
          l.linking[i] < std::numeric_limits<int>::min())
        throw std::overflow_error("surgered_polynomial: linking number out of range");
      e[i] = static_cast<int>(l.linking[i]);
    }
    divisor = sub(LaurentPoly::monomial(l.d - 1, std::move(e), 1),
                  LaurentPoly::constant(l.d - 1, 1));
  }
  auto h = exact_divide(fq, divisor);
  if (!h)
    throw std::runtime_error(
        "surgered_polynomial: exact division failed; the linking metadata contradicts the "
        "surgery formula for this polynomial");
  return *h;
}

namespace {

LaurentPoly var_minus_one(int num_vars, int var) {
  return sub(LaurentPoly::variable(num_vars, var), LaurentPoly::constant(num_vars, 1));
}

}  // namespace

LaurentPoly zero_linking_limit(const LinkPoly& l) {
  if (!l.zero_linking())
    throw std::invalid_argument("zero_linking_limit: linking numbers must all be zero");
  auto h = exact_divide(l.delta, var_minus_one(l.d, l.d));
  if (!h)
    throw std::runtime_error(
        "zero_linking_limit: u_d - 1 does not divide delta; zero-linking metadata is "
        "inconsistent with the polynomial");
  LaurentPoly lim = set_var_one(*h, l.d);
  if (l.d == 2) lim = mul(lim, var_minus_one(1, 1));
  return lim;
}

LaurentPoly zero_linking_limit_derivative(const LinkPoly& l) {
  if (!l.zero_linking())
    throw std::invalid_argument("zero_linking_limit: linking numbers must all be zero");
  LaurentPoly der = set_var_one(partial_derivative(l.delta, l.d), l.d);
  if (l.d == 2) der = mul(der, var_minus_one(1, 1));
  return der;
}

bool has_squared_factor(const LinkPoly& l) {
  auto h = exact_divide(l.delta, var_minus_one(l.d, l.d));
  if (!h) return false;
  return exact_divide(*h, var_minus_one(l.d, l.d)).has_value();
}

LaurentPoly boyd_lift(const LaurentPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("boyd_lift: f must be nonzero");
  const int d = f.num_vars();
  LaurentPoly::TermMap t;
  for (const auto& [e, c] : f.terms()) {
    ExponentVector ne = e;
    ne.push_back(1);
    t.emplace(std::move(ne), c);
  }
  for (const auto& [e, c] : f.terms()) {
    ExponentVector ne(d + 1, 0);
    for (int i = 0; i < d; ++i) ne[i] = -e[i];
    auto [it, inserted] = t.emplace(std::move(ne), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }
  return LaurentPoly::from_terms(d + 1, std::move(t));
}

LaurentPoly SurgeryFamily::at(long long q) const {
  return add(scale(slope, Int(q)), intercept);
}

SweepResult sweep(const LinkPoly& l, long long q_max, const SweepOptions& opts) {
  if (q_max < 1) throw std::invalid_argument("sweep: q_max must be >= 1");
  SweepResult out;
  if (!l.zero_linking()) {
    for (long long q = 1; q <= q_max; ++q) {
      SweepRow row;
      row.q = q;
      row.raw_poly = normalize(specialize_q(l, q));
      row.measure = measure(row.raw_poly, opts.engine);
      out.rows.push_back(std::move(row));
    }
    return out;
  }
  // zero-linking branch: Corollary-2.5 scaling against the limit target
  out.limit_target = measure(zero_linking_limit(l), opts.engine);
  if (!opts.family) {
    out.family_missing = true;
    return out;
  }
  for (long long q = 1; q <= q_max; ++q) {
    SweepRow row;
    row.q = q;
    row.raw_poly = normalize(opts.family->at(q));
    row.scale_num = 1;
    row.scale_den = q;
    row.measure = measure(row.raw_poly, opts.engine);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace mahler
