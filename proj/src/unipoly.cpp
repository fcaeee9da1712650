#include "mahler/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <functional>
#include <numeric>
#include <sstream>

namespace mahler {

const char* method_name(Method m) {
  switch (m) {
    case Method::jensen: return "jensen";
    case Method::boyd_lawton: return "boyd-lawton";
    case Method::quadrature: return "quadrature";
    case Method::closed_form: return "closed-form";
  }
  return "?";
}

const char* tag_name(AlgebraicTag t) {
  switch (t) {
    case AlgebraicTag::kronecker: return "Kronecker";
    case AlgebraicTag::pv: return "PV";
    case AlgebraicTag::salem: return "Salem";
    case AlgebraicTag::other: return "other";
  }
  return "?";
}

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::from_ints(std::initializer_list<long long> ascending) {
  std::vector<Int> c;
  c.reserve(ascending.size());
  for (long long v : ascending) c.emplace_back(v);
  return UniPoly(std::move(c));
}

Int UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

UniPoly add(const UniPoly& a, const UniPoly& b) {
  std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return UniPoly(std::move(c));
}

UniPoly negate(const UniPoly& a) {
  std::vector<Int> c = a.coeffs();
  for (auto& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UniPoly(std::move(c));
}

UniPoly reverse(const UniPoly& p) {
  std::vector<Int> c(p.coeffs().rbegin(), p.coeffs().rend());
  return UniPoly(std::move(c));
}

std::optional<UniPoly> exact_divide(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_divide: divisor is zero");
  if (f.is_zero()) return UniPoly();
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<Int> rem = f.coeffs();
  std::vector<Int> quo(f.degree() - g.degree() + 1, 0);
  const auto& gc = g.coeffs();
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    const Int& top = rem[k + g.degree()];
    if (top == 0) continue;
    Int q = top / gc.back();
    if (q * gc.back() != top) return std::nullopt;
    quo[k] = q;
    for (int j = 0; j <= g.degree(); ++j) rem[k + j] -= q * gc[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return UniPoly(std::move(quo));
}

UniPoly from_laurent(const LaurentPoly& f) {
  if (f.num_vars() != 1)
    throw std::invalid_argument("from_laurent: polynomial must have one variable");
  LaurentPoly n = normalize(f);
  if (n.is_zero()) return UniPoly();
  std::vector<Int> c(n.max_exponent(1) + 1, 0);
  for (const auto& [e, k] : n.terms()) c[e[0]] = k;
  return UniPoly(std::move(c));
}

LaurentPoly to_laurent(const UniPoly& p) {
  LaurentPoly::TermMap t;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeffs()[k] != 0) t.emplace(ExponentVector{k}, p.coeffs()[k]);
  return LaurentPoly::from_terms(1, std::move(t));
}

std::string to_string(const UniPoly& p) { return to_string(to_laurent(p)); }

// ---------------------------------------------------------------------------
// Root finding (Aberth-Ehrlich)
// ---------------------------------------------------------------------------

namespace {

struct DensePoly {
  std::vector<double> c;   // ascending
  std::vector<double> cr;  // reversed
  int n = 0;

  // Newton ratio p(z)/p'(z). For |z| > 1 the reversed polynomial at w = 1/z
  // avoids overflow: p(z) = z^n q(w), p'(z) = z^{n-1} (n q(w) - w q'(w)).
  std::complex<double> newton_ratio(std::complex<double> z) const {
    if (std::abs(z) <= 1.0) {
      std::complex<double> p = 0.0, dp = 0.0;
      for (int k = n; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + c[k];
      }
      return p / dp;
    }
    const std::complex<double> w = 1.0 / z;
    std::complex<double> q = 0.0, dq = 0.0;
    for (int k = n; k >= 0; --k) {
      dq = dq * w + q;
      q = q * w + cr[k];
    }
    return z * q / (static_cast<double>(n) * q - w * dq);
  }

  // A true m-fold root is a simple root of the (m-1)-th derivative; Newton
  // there recovers it to machine accuracy where the split cluster cannot.
  // Only called near the unit circle, so plain Horner is safe.
  std::complex<double> refine_multiple(std::complex<double> z0, int m) const {
    std::vector<double> v = c;
    for (int k = 1; k < m; ++k) {
      for (std::size_t j = 0; j + 1 < v.size(); ++j)
        v[j] = v[j + 1] * static_cast<double>(j + 1);
      v.pop_back();
    }
    if (v.size() < 2) return z0;
    std::complex<double> z = z0;
    for (int it = 0; it < 30; ++it) {
      std::complex<double> p = 0.0, dp = 0.0;
      for (std::size_t k = v.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + v[k];
      }
      const std::complex<double> step = p / dp;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return z0;
      z -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    return z;
  }

  // Backward-relative residual |p(z)| / sum_k |c_k| max(|z|,1)^k.
  double rel_residual(std::complex<double> z) const {
    if (std::abs(z) <= 1.0) {
      std::complex<double> p = 0.0;
      double s = 0.0;
      const double az = std::abs(z);
      for (int k = n; k >= 0; --k) {
        p = p * z + c[k];
        s = s * az + std::abs(c[k]);
      }
      return s > 0 ? std::abs(p) / s : 0.0;
    }
    const std::complex<double> w = 1.0 / z;
    const double aw = std::abs(w);
    std::complex<double> q = 0.0;
    double s = 0.0;
    for (int k = n; k >= 0; --k) {
      q = q * w + cr[k];
      s = s * aw + std::abs(cr[k]);
    }
    return s > 0 ? std::abs(q) / s : 0.0;
  }
};

DensePoly to_dense(const UniPoly& p) {
  DensePoly d;
  d.n = p.degree();
  d.c.resize(d.n + 1);
  // scale by the largest magnitude so huge integer coefficients stay finite
  Int maxabs = 0;
  for (const auto& k : p.coeffs())
    if (abs(k) > maxabs) maxabs = abs(k);
  const double scale = maxabs.convert_to<double>();
  for (int k = 0; k <= d.n; ++k)
    d.c[k] = (p.coeffs()[k].convert_to<double>()) / scale;
  d.cr.assign(d.c.rbegin(), d.c.rend());
  return d;
}

}  // namespace

RootSet find_roots(const UniPoly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw std::invalid_argument("find_roots: degree must be >= 1");

  // strip roots at the origin (unit factors in the Laurent ring)
  std::vector<Int> cs = p.coeffs();
  std::size_t shift = 0;
  while (cs[shift] == 0) ++shift;
  cs.erase(cs.begin(), cs.begin() + shift);
  UniPoly q(std::move(cs));

  RootSet rs;
  const int n = q.degree();
  if (n == 0) return rs;

  DensePoly dp = to_dense(q);
  const double r_geom = std::pow(std::abs(dp.c[0] / dp.c[n]), 1.0 / n);
  // Cauchy annulus: every root satisfies r_lo <= |z| <= r_hi. Iterates are
  // clamped back into it, which keeps them out of root-free dead zones where
  // p is locally constant and p' underflows (lacunary polynomials).
  double cauchy = 0.0, cauchy_rev = 0.0;
  for (int k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(dp.c[k] / dp.c[n]));
  for (int k = 1; k <= n; ++k) cauchy_rev = std::max(cauchy_rev, std::abs(dp.c[k] / dp.c[0]));
  const double r_hi = (1.0 + cauchy) * 1.000001;
  const double r_lo = 0.999999 / (1.0 + cauchy_rev);
  const double r0 = std::clamp(r_geom, 1e-6, r_hi);

  std::vector<std::complex<double>> z(n);
  for (int j = 0; j < n; ++j) {
    const double ang = 2.0 * M_PI * j / n + 0.7;
    const double rad = r0 * (1.0 + 0.08 * std::sin(11.0 * ang + 1.3));
    z[j] = std::polar(rad, ang);
  }

  constexpr int kMaxIter = 500;
  constexpr double kTol = 1e-14;
  std::vector<char> frozen(n, 0);
  std::vector<std::complex<double>> last_ratio(n, 0.0);
  int it = 0;
  for (; it < kMaxIter; ++it) {
    double max_step = 0.0;
    int active = 0;
    for (int i = 0; i < n; ++i) {
      if (frozen[i]) continue;
      ++active;
      const std::complex<double> w = dp.newton_ratio(z[i]);
      last_ratio[i] = w;
      std::complex<double> S = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const std::complex<double> d = z[i] - z[j];
        S += 1.0 / d;
      }
      std::complex<double> corr = w / (1.0 - w * S);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) {
        // coincident iterates; nudge deterministically and retry next sweep
        z[i] *= std::complex<double>(1.0 + 1e-9, 1e-9);
        max_step = std::max(max_step, 1.0);
        continue;
      }
      z[i] -= corr;
      const double az = std::abs(z[i]);
      if (az < r_lo)
        z[i] *= r_lo / az;
      else if (az > r_hi)
        z[i] *= r_hi / az;
      const double step = std::abs(corr);
      max_step = std::max(max_step, step);
      if (step < kTol * std::max(1.0, std::abs(z[i]))) frozen[i] = 1;
    }
    if (active == 0 || max_step < kTol * std::max(1.0, r0)) break;
  }
  rs.iterations = it;
  rs.converged = std::all_of(frozen.begin(), frozen.end(), [](char f) { return f != 0; });

  rs.roots = z;
  rs.residuals.resize(n);
  rs.newton_errors.resize(n);
  for (int i = 0; i < n; ++i) {
    rs.residuals[i] = dp.rel_residual(z[i]);
    rs.newton_errors[i] = std::abs(last_ratio[i]);
  }

  // cluster roots within 1e-7 (multiplicity report); sweep by real part
  constexpr double kCluster = 1e-7;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (z[a].real() != z[b].real()) return z[a].real() < z[b].real();
    return z[a].imag() < z[b].imag();
  });
  std::vector<int> cluster_of(n, -1);
  for (int a = 0; a < n; ++a) {
    const int i = order[a];
    if (cluster_of[i] >= 0) continue;
    std::vector<int> group{i};
    cluster_of[i] = static_cast<int>(rs.multiplicity_clusters.size());
    for (int b = a + 1; b < n; ++b) {
      const int j = order[b];
      if (z[j].real() - z[i].real() > kCluster) break;
      if (cluster_of[j] < 0 && std::abs(z[j] - z[i]) <= kCluster) {
        cluster_of[j] = cluster_of[i];
        group.push_back(j);
      }
    }
    rs.multiplicity_clusters.push_back(std::move(group));
  }
  return rs;
}

MeasureEstimate mahler_jensen(const UniPoly& p) {
  if (p.is_zero()) {
    MeasureEstimate e = MeasureEstimate::of(0.0, 0.0, Method::jensen);
    e.log_value = -HUGE_VAL;
    return e;
  }
  double lead = abs(p.leading()).convert_to<double>();
  if (!std::isfinite(lead))
    throw std::overflow_error("mahler_jensen: leading coefficient exceeds double range");
  if (p.degree() < 1 || (p.degree() >= 1 && [&] {
        for (int k = 0; k < static_cast<int>(p.coeffs().size()) - 1; ++k)
          if (p.coeffs()[k] != 0) return false;
        return true;  // pure monomial c*u^n
      }())) {
    MeasureEstimate e = MeasureEstimate::of(lead, 0.0, Method::jensen);
    e.diagnostics.emplace_back("degree", p.degree());
    return e;
  }

  RootSet rs = find_roots(p);
  const std::size_t n = rs.roots.size();

  // Residual evaluator on the zero-root-stripped polynomial (the one
  // find_roots actually solved).
  std::vector<Int> stripped = p.coeffs();
  {
    std::size_t lo = 0;
    while (stripped[lo] == 0) ++lo;
    stripped.erase(stripped.begin(), stripped.begin() + lo);
  }
  const DensePoly dense = to_dense(UniPoly(std::move(stripped)));

  // Split multiple roots at the unit circle are evaluated through their
  // cluster centroid: the splitting of an m-fold root is symmetric, so the
  // centroid recovers the true root to machine accuracy while max(|r|,1)
  // over the split members does not cancel. A candidate cluster counts as a
  // true multiple root only when the residual at its centroid is at machine
  // level; otherwise it is re-clustered at a finer scale.
  double log_m = std::log(lead);
  int outside = 0;
  double err_log = 0.0;
  // the coarsest scale only makes sense while it is below the typical root
  // spacing ~ 2 pi / n of a large polynomial
  static constexpr double kScalesSmall[] = {1.5e-3, 1e-5, 1e-7, 0.0};
  static constexpr double kScalesLarge[] = {1e-5, 1e-7, 0.0, 0.0};
  const double* kScales = (n <= 600) ? kScalesSmall : kScalesLarge;

  auto singleton = [&](std::size_t i) {
    const double a = std::abs(rs.roots[i]);
    if (a > 1.0) {
      log_m += std::log(a);
      ++outside;
    }
    if (a > 1.0 - 1e-6) err_log += std::min(rs.newton_errors[i], 1e-2);
  };

  // connected components under |r_i - r_j| <= scale, built with a sweep over
  // the real parts so dense root circles stay near-linear
  auto cluster_at = [&](std::vector<std::size_t> members, double scale) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      if (rs.roots[a].real() != rs.roots[b].real())
        return rs.roots[a].real() < rs.roots[b].real();
      return rs.roots[a].imag() < rs.roots[b].imag();
    });
    const std::size_t k = members.size();
    std::vector<char> used(k, 0);
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < k; ++a) {
      if (used[a]) continue;
      std::vector<std::size_t> stack{a}, g;
      used[a] = 1;
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        g.push_back(members[cur]);
        const double re = rs.roots[members[cur]].real();
        for (std::size_t b = cur + 1; b < k && rs.roots[members[b]].real() - re <= scale; ++b) {
          if (!used[b] && std::abs(rs.roots[members[b]] - rs.roots[members[cur]]) <= scale) {
            used[b] = 1;
            stack.push_back(b);
          }
        }
        for (std::size_t b = cur; b-- > 0 && re - rs.roots[members[b]].real() <= scale;) {
          if (!used[b] && std::abs(rs.roots[members[b]] - rs.roots[members[cur]]) <= scale) {
            used[b] = 1;
            stack.push_back(b);
          }
        }
      }
      groups.push_back(std::move(g));
    }
    return groups;
  };

  std::function<void(const std::vector<std::size_t>&, int)> handle =
      [&](const std::vector<std::size_t>& members, int level) {
        if (members.size() == 1) {
          singleton(members[0]);
          return;
        }
        std::complex<double> centroid = 0.0;
        for (std::size_t i : members) centroid += rs.roots[i];
        centroid /= static_cast<double>(members.size());
        double radius = 0.0;
        for (std::size_t i : members)
          radius = std::max(radius, std::abs(rs.roots[i] - centroid));
        const bool near_circle = std::abs(std::abs(centroid) - 1.0) < 2e-3;
        if (near_circle && dense.rel_residual(centroid) <= 1e-12) {
          std::complex<double> z = dense.refine_multiple(centroid, static_cast<int>(members.size()));
          if (std::abs(z - centroid) > radius + 1e-4 || dense.rel_residual(z) > 1e-12)
            z = centroid;
          const double a = std::abs(z);
          if (a > 1.0) {
            log_m += members.size() * std::log(a);
            outside += static_cast<int>(members.size());
          }
          err_log += members.size() * 1e-13;
          return;
        }
        if (kScales[level + 1] == 0.0) {
          for (std::size_t i : members) singleton(i);
          return;
        }
        for (const auto& g : cluster_at(members, kScales[level + 1])) handle(g, level + 1);
      };

  {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (const auto& g : cluster_at(all, kScales[0])) handle(g, 0);
  }

  double max_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_res = std::max(max_res, rs.residuals[i]);
  err_log += static_cast<double>(n) * 4e-16;
  if (max_res > 1e-4)
    throw std::runtime_error("mahler_jensen: root finding failed (residual too large)");

  MeasureEstimate e;
  e.value = std::exp(log_m);
  e.log_value = log_m;
  e.error_bound = e.value * 2.0 * err_log;
  e.method = Method::jensen;
  e.diagnostics.emplace_back("degree", p.degree());
  e.diagnostics.emplace_back("roots_outside", outside);
  e.diagnostics.emplace_back("iterations", rs.iterations);
  e.diagnostics.emplace_back("converged", rs.converged ? 1.0 : 0.0);
  e.diagnostics.emplace_back("max_residual", max_res);
  return e;
}

bool is_reciprocal(const UniPoly& p) {
  if (p.is_zero()) return true;
  std::vector<Int> c = p.coeffs();
  std::size_t lo = 0;
  while (c[lo] == 0) ++lo;
  c.erase(c.begin(), c.begin() + lo);
  bool plus = true, minus = true;
  for (std::size_t i = 0, j = c.size() - 1; i < c.size(); ++i, --j) {
    if (c[i] != c[j]) plus = false;
    if (c[i] != -c[j]) minus = false;
  }
  return plus || minus;
}

// ---------------------------------------------------------------------------
// Cyclotomic machinery
// ---------------------------------------------------------------------------

namespace {

UniPoly compose_power(const UniPoly& f, int k) {
  // f(u^k)
  std::vector<Int> c(static_cast<std::size_t>(f.degree()) * k + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(i) * k] = f.coeffs()[i];
  return UniPoly(std::move(c));
}

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

const UniPoly& cyclotomic(int n) {
  static std::map<int, UniPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
  UniPoly phi;
  if (n == 1) {
    phi = UniPoly::from_ints({-1, 1});
  } else {
    const auto primes = prime_factors(n);
    int rad = 1;
    for (int p : primes) rad *= p;
    // squarefree part: Phi_{mp}(u) = Phi_m(u^p) / Phi_m(u) for p not dividing m
    UniPoly f = UniPoly::from_ints({-1, 1});
    for (int p : primes) {
      auto q = exact_divide(compose_power(f, p), f);
      f = std::move(*q);
    }
    phi = (n == rad) ? f : compose_power(f, n / rad);
  }
  return cache.emplace(n, std::move(phi)).first->second;
}

namespace {

// totients 1..bound via linear sieve
std::vector<int> totient_table(int bound) {
  std::vector<int> phi(bound + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (int p = 2; p <= bound; ++p) {
    if (phi[p] == p) {  // prime
      for (int k = p; k <= bound; k += p) phi[k] -= phi[k] / p;
    }
  }
  return phi;
}

UniPoly strip_monomial(const UniPoly& p) {
  std::vector<Int> c = p.coeffs();
  std::size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  c.erase(c.begin(), c.begin() + lo);
  return UniPoly(std::move(c));
}

}  // namespace

UniPoly strip_cyclotomic_factors(const UniPoly& p) {
  if (p.is_zero()) return p;
  UniPoly cur = strip_monomial(p);
  if (cur.degree() < 1) return cur;
  const int d0 = cur.degree();
  // phi(n) >= sqrt(n/2), so phi(n) <= D implies n <= 2 D^2
  const int bound = 2 * d0 * d0 + 1;
  const auto phi = totient_table(bound);
  for (int n = 1; n <= bound && cur.degree() >= 1; ++n) {
    if (phi[n] > cur.degree()) continue;
    for (;;) {
      auto q = exact_divide(cur, cyclotomic(n));
      if (!q) break;
      cur = std::move(*q);
    }
  }
  return cur;
}

bool kronecker_test(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("kronecker_test: zero polynomial");
  if (p.leading() != 1 && p.leading() != -1) return false;
  UniPoly rem = strip_cyclotomic_factors(p);
  return rem.degree() == 0 && (rem.leading() == 1 || rem.leading() == -1);
}

AlgebraicClass classify(const UniPoly& p) {
  if (p.is_zero() || !p.is_monic())
    throw std::invalid_argument("classify: polynomial must be monic");
  if (p.degree() < 2) throw std::invalid_argument("classify: degree must be >= 2");

  AlgebraicClass out;
  out.irreducibility_certified = false;

  UniPoly rem = strip_cyclotomic_factors(p);
  if (rem.degree() == 0) {
    out.tag = AlgebraicTag::kronecker;
    out.note = "product of cyclotomic polynomials (and a monomial)";
    return out;
  }

  RootSet rs = find_roots(rem);
  double max_res = 0.0;
  for (double r : rs.residuals) max_res = std::max(max_res, r);
  if (!rs.converged && max_res > 1e-8) {
    out.tag = AlgebraicTag::other;
    out.note = "root finding did not certify the configuration";
    return out;
  }

  constexpr double kTol = 1e-8;
  constexpr double kBand = 1e-7;
  int outside = 0, on = 0, inside = 0;
  double dominant = 0.0;
  bool ambiguous = false;
  for (const auto& z : rs.roots) {
    const double a = std::abs(z);
    const double d = std::abs(a - 1.0);
    if (d > kTol && d <= kBand) ambiguous = true;
    if (a > 1.0 + kTol) {
      ++outside;
      dominant = std::max(dominant, a);
    } else if (a < 1.0 - kTol) {
      ++inside;
    } else {
      ++on;
    }
  }
  if (ambiguous) {
    out.tag = AlgebraicTag::other;
    out.note = "root within the tolerance band of |z| = 1; configuration ambiguous";
    return out;
  }
  if (outside == 1) {
    // the lone outside root is real (complex roots pair up); configurations
    // are identified up to u -> -u, so report |root|
    out.dominant_root = dominant;
    if (on == 0) {
      out.tag = AlgebraicTag::pv;
      return out;
    }
    out.tag = AlgebraicTag::salem;
    return out;
  }
  out.tag = AlgebraicTag::other;
  std::ostringstream os;
  os << outside << " roots outside, " << on << " on, " << inside << " inside the unit circle";
  out.note = os.str();
  return out;
}

}  // namespace mahler
