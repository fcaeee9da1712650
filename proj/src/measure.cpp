#include "mahler/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mahler {

SpecializationVector specialization_vector(int d, long long n) {
  if (d < 2) throw std::invalid_argument("specialization_vector: d must be >= 2");
  if (n < 2) throw std::invalid_argument("specialization_vector: n must be >= 2");
  SpecializationVector sv;
  sv.r.resize(d);
  long long acc = 1;
  for (int i = 0; i < d; ++i) {
    sv.r[i] = acc;
    if (i + 1 < d) {
      if (acc > std::numeric_limits<long long>::max() / n)
        throw std::overflow_error("specialization_vector: overflow");
      acc *= n;
    }
  }
  // (n, -1, 0, ...) is orthogonal to r; no shorter vector exists since a
  // relation sum m_i n^i = 0 with |m_i| < n forces every base-n digit to
  // vanish.
  sv.separation = n;
  return sv;
}

std::vector<long long> default_schedule(int d) {
  switch (d) {
    case 2: return {50, 100, 200, 400};
    case 3: return {8, 16, 32};
    case 4: return {4, 8, 16};
    default: return {2, 4, 6};
  }
}

MeasureEstimate boyd_lawton(const LaurentPoly& f, std::span<const long long> schedule) {
  if (f.num_vars() < 2) throw std::invalid_argument("boyd_lawton: d must be >= 2");
  if (schedule.size() < 3)
    throw std::invalid_argument("boyd_lawton: schedule needs >= 3 points for the spread error");
  for (std::size_t i = 1; i < schedule.size(); ++i)
    if (schedule[i] <= schedule[i - 1])
      throw std::invalid_argument("boyd_lawton: schedule must be strictly increasing");
  if (f.is_zero()) {
    MeasureEstimate e = MeasureEstimate::of(0.0, 0.0, Method::boyd_lawton);
    e.log_value = -HUGE_VAL;
    return e;
  }

  const int d = f.num_vars();
  MeasureEstimate out;
  out.method = Method::boyd_lawton;
  std::vector<double> iterates;
  double last_jensen_err = 0.0;
  for (long long n : schedule) {
    SpecializationVector sv = specialization_vector(d, n);
    // degree guard before densifying
    long long deg_bound = 0;
    for (int v = 1; v <= d; ++v) {
      const long long span =
          static_cast<long long>(f.max_exponent(v)) - f.min_exponent(v);
      deg_bound += span * sv.r[v - 1];
    }
    if (deg_bound > 1000000)
      throw std::overflow_error("boyd_lawton: specialized degree exceeds 10^6");

    LaurentPoly fr = substitute(f, MonomialMap::power_line(sv.r));
    MeasureEstimate mj = mahler_jensen(from_laurent(fr));
    iterates.push_back(mj.value);
    last_jensen_err = mj.error_bound;
    std::ostringstream key;
    key << "M(f_r), n=" << n;
    out.diagnostics.emplace_back(key.str(), mj.value);
  }

  const std::size_t k = iterates.size();
  double lo = iterates[k - 1], hi = iterates[k - 1];
  for (std::size_t i = k - std::min<std::size_t>(3, k); i < k; ++i) {
    lo = std::min(lo, iterates[i]);
    hi = std::max(hi, iterates[i]);
  }
  out.value = iterates.back();
  out.log_value = out.value > 0 ? std::log(out.value) : -HUGE_VAL;
  out.error_bound = (hi - lo) + last_jensen_err;
  return out;
}

namespace {

// splitmix64; fixed offset sequence for a given seed
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// positive root of x^{d+1} = x + 1 (golden ratio for d = 1); alpha_j are the
// inverse powers, the standard Kronecker generator family.
double kronecker_base(int d) {
  double x = 2.0;
  for (int i = 0; i < 64; ++i) x = std::pow(1.0 + x, 1.0 / (d + 1));
  return x;
}

}  // namespace

MeasureEstimate quadrature(const LaurentPoly& f, long long samples, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("quadrature: f must be nonzero");
  if (samples < 1000) throw std::invalid_argument("quadrature: samples must be >= 1000");
  const int d = f.num_vars();

  const double base = kronecker_base(d);
  std::vector<double> alpha(d), offset(d);
  double a = 1.0;
  for (int j = 0; j < d; ++j) {
    a /= base;
    alpha[j] = a;
  }
  std::uint64_t state = seed;
  for (int j = 0; j < d; ++j)
    offset[j] = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;

  // per-term data for the torus evaluation f(s) = sum c_t e^{2 pi i <e_t, x>}
  const std::size_t nt = f.term_count();
  std::vector<double> coef(nt);
  std::vector<const ExponentVector*> exps(nt);
  {
    std::size_t t = 0;
    for (const auto& [e, c] : f.terms()) {
      coef[t] = c.convert_to<double>();
      exps[t] = &e;
      ++t;
    }
  }

  constexpr double two_pi = 6.283185307179586476925286766559;
  const long long batch = samples / 8;
  double total_sum = 0.0;
  long long total_count = 0, degenerate = 0;
  std::vector<double> batch_means;
  std::vector<double> x(d);
  double sum = 0.0;
  long long count = 0;
  for (long long k = 0; k < samples; ++k) {
    for (int j = 0; j < d; ++j) {
      double v = std::fma(static_cast<double>(k), alpha[j], offset[j]);
      x[j] = v - std::floor(v);
    }
    double re = 0.0, im = 0.0;
    for (std::size_t t = 0; t < nt; ++t) {
      double phase = 0.0;
      const ExponentVector& e = *exps[t];
      for (int j = 0; j < d; ++j) phase += e[j] * x[j];
      phase -= std::floor(phase);
      re += coef[t] * std::cos(two_pi * phase);
      im += coef[t] * std::sin(two_pi * phase);
    }
    const double mag = std::sqrt(re * re + im * im);
    if (mag < 1e-300) {
      ++degenerate;
    } else {
      sum += std::log(mag);
      ++count;
    }
    if ((k + 1) % batch == 0 && batch_means.size() < 8) {
      if (count == 0)
        throw std::runtime_error("quadrature: all samples degenerate in a batch");
      batch_means.push_back(sum / count);
      total_sum += sum;
      total_count += count;
      sum = 0.0;
      count = 0;
    }
  }
  total_sum += sum;
  total_count += count;
  if (total_count == 0) throw std::runtime_error("quadrature: all samples degenerate");

  const double mean_log = total_sum / total_count;
  double lo = batch_means.empty() ? mean_log : batch_means[0];
  double hi = lo;
  for (double m : batch_means) {
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  MeasureEstimate e;
  e.method = Method::quadrature;
  e.log_value = mean_log;
  e.value = std::exp(mean_log);
  e.error_bound = e.value * (hi - lo);
  e.diagnostics.emplace_back("samples", static_cast<double>(samples));
  e.diagnostics.emplace_back("degenerate", static_cast<double>(degenerate));
  e.diagnostics.emplace_back("batch_spread_log", hi - lo);
  return e;
}

MeasureEstimate measure(const LaurentPoly& f, const MeasureOptions& opts) {
  using Engine = MeasureOptions::Engine;
  if (f.is_zero()) {
    MeasureEstimate e = MeasureEstimate::of(0.0, 0.0, Method::closed_form);
    e.log_value = -HUGE_VAL;
    e.diagnostics.emplace_back("zero_polynomial", 1.0);
    return e;
  }
  const LaurentPoly g = normalize(f);
  const int d = g.num_vars();

  Engine engine = opts.engine;
  if (engine == Engine::automatic) {
    if (d == 1) engine = Engine::jensen;
    else if (d <= 3) engine = Engine::boyd_lawton;
    else engine = Engine::quadrature;
  }

  if (g.is_unit()) {
    MeasureEstimate e = MeasureEstimate::of(1.0, 0.0, Method::closed_form);
    e.diagnostics.emplace_back("unit", 1.0);
    return e;
  }

  switch (engine) {
    case Engine::jensen: {
      if (d != 1)
        throw std::invalid_argument("measure: jensen engine needs a one-variable polynomial");
      return mahler_jensen(from_laurent(g));
    }
    case Engine::boyd_lawton: {
      if (d == 1) return mahler_jensen(from_laurent(g));
      std::vector<long long> sched = opts.schedule.empty() ? default_schedule(d) : opts.schedule;
      MeasureEstimate bl = boyd_lawton(g, sched);
      if (opts.engine == Engine::automatic) {
        // fold a quadrature cross-check into the error bound
        MeasureEstimate q = quadrature(g, 1 << 17, opts.seed);
        const double gap = std::abs(bl.value - q.value);
        bl.error_bound = std::max(bl.error_bound, gap + q.error_bound);
        bl.diagnostics.emplace_back("quadrature_crosscheck", q.value);
        bl.diagnostics.emplace_back("engine_gap", gap);
      }
      return bl;
    }
    case Engine::quadrature: {
      MeasureEstimate q = quadrature(g, opts.samples, opts.seed);
      if (opts.engine == Engine::automatic)
        q.diagnostics.emplace_back("dimension_dispatch", static_cast<double>(d));
      return q;
    }
    case Engine::automatic: break;
  }
  throw std::logic_error("measure: unreachable");
}

double smyth_chi3() {
  // L(2, chi_3) summed in pairs 1/(3k+1)^2 - 1/(3k+2)^2, tail ~ 0.037/K^2
  long double s = 0.0L;
  const long long K = 2000000;
  for (long long k = K - 1; k >= 0; --k) {
    const long double a = 3.0L * k + 1.0L, b = 3.0L * k + 2.0L;
    s += 1.0L / (a * a) - 1.0L / (b * b);
  }
  const double pi = 3.14159265358979323846;
  return std::exp(3.0 * std::sqrt(3.0) / (4.0 * pi) * static_cast<double>(s));
}

double zeta3() {
  // direct summation plus the Euler-Maclaurin tail 1/(2N^2) - 1/(2N^3) + ...
  const long long N = 1000000;
  long double s = 0.0L;
  for (long long n = N; n >= 1; --n) {
    const long double x = static_cast<long double>(n);
    s += 1.0L / (x * x * x);
  }
  const long double Nd = static_cast<long double>(N);
  s += 1.0L / (2.0L * Nd * Nd) - 1.0L / (2.0L * Nd * Nd * Nd);
  return static_cast<double>(s);
}

double smyth_zeta3() {
  const double pi = 3.14159265358979323846;
  return std::exp(7.0 * zeta3() / (2.0 * pi * pi));
}

}  // namespace mahler
