#include "mahler/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace mahler {

namespace {

void check_same_arity(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (a.num_vars() != b.num_vars()) {
    std::ostringstream os;
    os << op << ": dimension mismatch (" << a.num_vars() << " vs " << b.num_vars() << ")";
    throw std::invalid_argument(os.str());
  }
}

void check_var_index(const LaurentPoly& f, int var, const char* op) {
  if (var < 1 || var > f.num_vars()) {
    std::ostringstream os;
    os << op << ": variable index " << var << " out of range 1.." << f.num_vars();
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

LaurentPoly::LaurentPoly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw std::invalid_argument("LaurentPoly: num_vars must be >= 1");
}

LaurentPoly LaurentPoly::zero(int num_vars) { return LaurentPoly(num_vars); }

LaurentPoly LaurentPoly::constant(int num_vars, Int c) {
  return monomial(num_vars, ExponentVector(num_vars, 0), std::move(c));
}

LaurentPoly LaurentPoly::monomial(int num_vars, ExponentVector e, Int c) {
  LaurentPoly p(num_vars);
  if (static_cast<int>(e.size()) != num_vars)
    throw std::invalid_argument("monomial: exponent vector length != num_vars");
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int var) {
  if (var < 1 || var > num_vars)
    throw std::invalid_argument("variable: index out of range");
  ExponentVector e(num_vars, 0);
  e[var - 1] = 1;
  return monomial(num_vars, std::move(e), 1);
}

LaurentPoly LaurentPoly::from_terms(int num_vars, TermMap terms) {
  LaurentPoly p(num_vars);
  for (auto it = terms.begin(); it != terms.end();) {
    if (static_cast<int>(it->first.size()) != num_vars)
      throw std::invalid_argument("from_terms: exponent vector length != num_vars");
    it = (it->second == 0) ? terms.erase(it) : std::next(it);
  }
  p.terms_ = std::move(terms);
  return p;
}

Int LaurentPoly::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

int LaurentPoly::min_exponent(int var) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var - 1] < m) m = e[var - 1];
    first = false;
  }
  return m;
}

int LaurentPoly::max_exponent(int var) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var - 1] > m) m = e[var - 1];
    first = false;
  }
  return m;
}

MonomialMap MonomialMap::identity(int num_vars) {
  MonomialMap m;
  m.source_num_vars = num_vars;
  m.target_num_vars = num_vars;
  for (int i = 0; i < num_vars; ++i) {
    ExponentVector e(num_vars, 0);
    e[i] = 1;
    m.images.push_back({1, std::move(e)});
  }
  return m;
}

MonomialMap MonomialMap::negate_all(int num_vars) {
  MonomialMap m = identity(num_vars);
  for (auto& img : m.images) img.sign = -1;
  return m;
}

MonomialMap MonomialMap::power_line(std::span<const long long> r) {
  MonomialMap m;
  m.source_num_vars = static_cast<int>(r.size());
  m.target_num_vars = 1;
  for (long long ri : r) {
    if (ri > std::numeric_limits<int>::max() || ri < std::numeric_limits<int>::min())
      throw std::overflow_error("power_line: exponent out of range");
    m.images.push_back({1, ExponentVector{static_cast<int>(ri)}});
  }
  return m;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_arity(a, b, "add");
  LaurentPoly::TermMap out = a.terms();
  for (const auto& [e, c] : b.terms()) {
    auto [it, inserted] = out.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return LaurentPoly::from_terms(a.num_vars(), std::move(out));
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, negate(b)); }

LaurentPoly negate(const LaurentPoly& a) {
  LaurentPoly::TermMap out;
  for (const auto& [e, c] : a.terms()) out.emplace(e, -c);
  return LaurentPoly::from_terms(a.num_vars(), std::move(out));
}

LaurentPoly scale(const LaurentPoly& a, const Int& c) {
  if (c == 0) return LaurentPoly::zero(a.num_vars());
  LaurentPoly::TermMap out;
  for (const auto& [e, k] : a.terms()) out.emplace(e, k * c);
  return LaurentPoly::from_terms(a.num_vars(), std::move(out));
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_arity(a, b, "mul");
  const int d = a.num_vars();
  LaurentPoly::TermMap out;
  ExponentVector e(d);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (int i = 0; i < d; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return LaurentPoly::from_terms(d, std::move(out));
}

LaurentPoly involute(const LaurentPoly& f) {
  LaurentPoly::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    ExponentVector ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    out.emplace(std::move(ne), c);
  }
  return LaurentPoly::from_terms(f.num_vars(), std::move(out));
}

LaurentPoly normalize(const LaurentPoly& f, UnitMonomial& unit_out) {
  const int d = f.num_vars();
  unit_out.sign = 1;
  unit_out.shift.assign(d, 0);
  if (f.is_zero()) return f;
  for (int v = 1; v <= d; ++v) unit_out.shift[v - 1] = -f.min_exponent(v);
  LaurentPoly::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    ExponentVector ne(d);
    for (int i = 0; i < d; ++i) ne[i] = e[i] + unit_out.shift[i];
    out.emplace(std::move(ne), c);
  }
  // leading (lex-largest) coefficient positive
  if (out.rbegin()->second < 0) {
    unit_out.sign = -1;
    for (auto& [e, c] : out) c = -c;
  }
  return LaurentPoly::from_terms(d, std::move(out));
}

LaurentPoly normalize(const LaurentPoly& f) {
  UnitMonomial u;
  return normalize(f, u);
}

bool eq_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_arity(a, b, "eq_up_to_unit");
  return normalize(a) == normalize(b);
}

LaurentPoly substitute(const LaurentPoly& f, const MonomialMap& m) {
  if (m.source_num_vars != f.num_vars() ||
      static_cast<int>(m.images.size()) != f.num_vars())
    throw std::invalid_argument("substitute: map does not cover all variables");
  const int dt = m.target_num_vars;
  if (dt < 1) throw std::invalid_argument("substitute: target_num_vars must be >= 1");
  for (const auto& img : m.images) {
    if (img.sign != 1 && img.sign != -1)
      throw std::invalid_argument("substitute: image coefficient must be +-1");
    if (static_cast<int>(img.exponents.size()) != dt)
      throw std::invalid_argument("substitute: image exponent length != target_num_vars");
  }
  LaurentPoly::TermMap out;
  ExponentVector e(dt);
  std::vector<long long> acc(dt);
  for (const auto& [ef, c] : f.terms()) {
    std::fill(acc.begin(), acc.end(), 0);
    bool neg = false;
    for (int i = 0; i < f.num_vars(); ++i) {
      const auto& img = m.images[i];
      const long long k = ef[i];
      for (int j = 0; j < dt; ++j) acc[j] += k * img.exponents[j];
      if (img.sign < 0 && (k & 1)) neg = !neg;
    }
    for (int j = 0; j < dt; ++j) {
      if (acc[j] > std::numeric_limits<int>::max() || acc[j] < std::numeric_limits<int>::min())
        throw std::overflow_error("substitute: exponent overflow");
      e[j] = static_cast<int>(acc[j]);
    }
    Int cc = neg ? -c : c;
    auto [it, inserted] = out.emplace(e, std::move(cc));
    if (!inserted) {
      it->second += neg ? -c : c;
      if (it->second == 0) out.erase(it);
    }
  }
  return LaurentPoly::from_terms(dt, std::move(out));
}

LaurentPoly partial_derivative(const LaurentPoly& f, int var) {
  check_var_index(f, var, "partial_derivative");
  LaurentPoly::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    const int k = e[var - 1];
    if (k == 0) continue;
    ExponentVector ne = e;
    ne[var - 1] = k - 1;
    out.emplace(std::move(ne), c * k);
  }
  return LaurentPoly::from_terms(f.num_vars(), std::move(out));
}

LaurentPoly set_var_one(const LaurentPoly& f, int var) {
  check_var_index(f, var, "set_var_one");
  const int d = f.num_vars();
  const int dt = std::max(1, d - 1);
  LaurentPoly::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    ExponentVector ne;
    ne.reserve(dt);
    if (d == 1) {
      ne.assign(1, 0);
    } else {
      for (int i = 0; i < d; ++i)
        if (i != var - 1) ne.push_back(e[i]);
    }
    auto [it, inserted] = out.emplace(std::move(ne), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return LaurentPoly::from_terms(dt, std::move(out));
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  check_same_arity(f, g, "exact_divide");
  if (g.is_zero()) throw std::invalid_argument("exact_divide: divisor is zero");
  if (f.is_zero()) return LaurentPoly::zero(f.num_vars());
  const int d = f.num_vars();

  UnitMonomial uf, ug;
  LaurentPoly F = normalize(f, uf);
  LaurentPoly G = normalize(g, ug);

  // Term-driven division by the single divisor G in lex order. Divisibility
  // in the Laurent ring equals polynomial divisibility of the normal forms
  // (minimum exponents of a product add in an integral domain).
  LaurentPoly::TermMap rem = F.terms();
  LaurentPoly::TermMap quo;
  const auto& glead = *G.terms().rbegin();  // lex-largest term of G
  ExponentVector qe(d);
  while (!rem.empty()) {
    const auto& rlead = *rem.rbegin();
    bool ok = true;
    for (int i = 0; i < d; ++i) {
      qe[i] = rlead.first[i] - glead.first[i];
      if (qe[i] < 0) ok = false;
    }
    if (!ok) return std::nullopt;
    Int qc = rlead.second / glead.second;
    if (qc * glead.second != rlead.second) return std::nullopt;
    quo.emplace(qe, qc);
    // rem -= (qc * u^qe) * G
    ExponentVector te(d);
    for (const auto& [ge, gc] : G.terms()) {
      for (int i = 0; i < d; ++i) te[i] = ge[i] + qe[i];
      auto [it, inserted] = rem.emplace(te, -qc * gc);
      if (!inserted) {
        it->second -= qc * gc;
        if (it->second == 0) rem.erase(it);
      } else if (it->second == 0) {
        rem.erase(it);
      }
    }
  }
  // F = G * Q with F = uf*f, G = ug*g  =>  f = g * (ug/uf) * Q.
  LaurentPoly Q = LaurentPoly::from_terms(d, std::move(quo));
  ExponentVector shift(d);
  for (int i = 0; i < d; ++i) shift[i] = ug.shift[i] - uf.shift[i];
  LaurentPoly unit = LaurentPoly::monomial(d, std::move(shift), Int(ug.sign * uf.sign));
  return mul(Q, unit);
}

std::complex<double> evaluate(const LaurentPoly& f,
                              std::span<const std::complex<double>> point) {
  if (static_cast<int>(point.size()) != f.num_vars())
    throw std::invalid_argument("evaluate: point length != num_vars");
  for (const auto& s : point)
    if (s == std::complex<double>(0.0, 0.0))
      throw std::domain_error("evaluate: zero coordinate");

  // Horner grouping on the first variable: split the (lex-sorted) terms into
  // runs of equal e_1 and recurse on the remaining variables.
  struct Rec {
    static std::complex<double> go(const LaurentPoly::TermMap& terms, int var,
                                   int num_vars,
                                   std::span<const std::complex<double>> point) {
      if (terms.empty()) return {0.0, 0.0};
      if (var == num_vars - 1) {
        // innermost variable: plain Horner over gaps
        std::complex<double> acc = 0.0;
        int prev_exp = 0;
        bool first = true;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
          const int k = it->first[var];
          if (!first) acc *= ipow(point[var], prev_exp - k);
          acc += it->second.convert_to<double>();
          prev_exp = k;
          first = false;
        }
        return acc * ipow(point[var], prev_exp);
      }
      std::complex<double> acc = 0.0;
      int prev_exp = 0;
      bool first = true;
      auto run_begin = terms.rbegin();
      while (run_begin != terms.rend()) {
        const int k = run_begin->first[var];
        LaurentPoly::TermMap run;
        auto it = run_begin;
        for (; it != terms.rend() && it->first[var] == k; ++it) run.emplace(it->first, it->second);
        if (!first) acc *= ipow(point[var], prev_exp - k);
        acc += go(run, var + 1, num_vars, point);
        prev_exp = k;
        first = false;
        run_begin = it;
      }
      return acc * ipow(point[var], prev_exp);
    }
    static std::complex<double> ipow(std::complex<double> z, long long e) {
      if (e == 0) return {1.0, 0.0};
      if (e < 0) return 1.0 / ipow(z, -e);
      std::complex<double> r = 1.0;
      while (e) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
      }
      return r;
    }
  };
  return Rec::go(f.terms(), 0, f.num_vars(), point);
}

std::complex<double> evaluate_torus(const LaurentPoly& f, std::span<const double> angles) {
  if (static_cast<int>(angles.size()) != f.num_vars())
    throw std::invalid_argument("evaluate_torus: angle count != num_vars");
  constexpr double two_pi = 6.283185307179586476925286766559;
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) phase += e[i] * angles[i];
    phase -= std::floor(phase);
    acc += c.convert_to<double>() * std::polar(1.0, two_pi * phase);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing / printing
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
  Parser(std::string_view text, std::optional<int> expected_d)
      : text_(text), expected_d_(expected_d) {}

  LaurentPoly run() {
    skip_ws();
    Node n = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    const int d = expected_d_.value_or(std::max(max_var_, 1));
    LaurentPoly::TermMap out;
    for (auto& [e, c] : n.terms) {
      ExponentVector ev(d, 0);
      for (const auto& [var, k] : e) ev[var - 1] = k;
      auto [it, inserted] = out.emplace(std::move(ev), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.erase(it);
      }
    }
    return LaurentPoly::from_terms(d, std::move(out));
  }

private:
  // exponents kept as sorted (var, exp) pairs until the arity is known
  using SparseExp = std::map<int, int>;
  struct Node {
    std::map<SparseExp, Int> terms;
  };

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("syntax error at byte " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Node parse_expr() {
    Node acc;
    int sign = 1;
    if (eat('+')) sign = 1;
    else if (eat('-')) sign = -1;
    acc = parse_term();
    if (sign < 0) neg_inplace(acc);
    for (;;) {
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else break;
      Node t = parse_term();
      if (sign < 0) neg_inplace(t);
      add_inplace(acc, t);
    }
    return acc;
  }

  Node parse_term() {
    Node acc = parse_factor();
    while (eat('*')) {
      Node f = parse_factor();
      acc = mul_nodes(acc, f);
    }
    return acc;
  }

  Node parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected factor");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Node inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      if (peek() == '^') return pow_node(inner, parse_power());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int v = parse_int();
      Node n;
      if (v != 0) n.terms.emplace(SparseExp{}, v);
      return n;
    }
    int var = 0;
    if (c == 'u') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected variable index after 'u'");
      long long idx = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        idx = idx * 10 + (text_[pos_] - '0');
        if (idx > 64) fail("variable index too large");
        ++pos_;
      }
      if (idx < 1) fail("variable index must be >= 1");
      var = static_cast<int>(idx);
    } else if (c == 'x' || c == 'y' || c == 'z') {
      ++pos_;
      var = c == 'x' ? 1 : (c == 'y' ? 2 : 3);
    } else {
      fail("expected integer, variable or '('");
    }
    if (expected_d_ && var > *expected_d_)
      fail("variable index exceeds declared variable count");
    max_var_ = std::max(max_var_, var);
    int e = 1;
    if (peek() == '^') e = parse_power();
    Node n;
    if (e != 0) n.terms.emplace(SparseExp{{var, e}}, Int(1));
    else n.terms.emplace(SparseExp{}, Int(1));
    return n;
  }

  int parse_power() {
    if (!eat('^')) fail("expected '^'");
    skip_ws();
    int sign = 1;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      sign = -1;
      ++pos_;
    }
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(sign * v);
  }

  Int parse_int() {
    Int v = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++digits;
      ++pos_;
    }
    if (digits == 0) fail("expected integer");
    return v;
  }

  static void neg_inplace(Node& n) {
    for (auto& [e, c] : n.terms) c = -c;
  }

  static void add_inplace(Node& a, const Node& b) {
    for (const auto& [e, c] : b.terms) {
      auto [it, inserted] = a.terms.emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) a.terms.erase(it);
      }
    }
  }

  static Node mul_nodes(const Node& a, const Node& b) {
    Node out;
    for (const auto& [ea, ca] : a.terms) {
      for (const auto& [eb, cb] : b.terms) {
        SparseExp e = ea;
        for (const auto& [var, k] : eb) {
          e[var] += k;
          if (e[var] == 0) e.erase(var);
        }
        auto [it, inserted] = out.terms.emplace(std::move(e), ca * cb);
        if (!inserted) {
          it->second += ca * cb;
          if (it->second == 0) out.terms.erase(it);
        }
      }
    }
    return out;
  }

  Node pow_node(const Node& base, int e) {
    if (e < 0) {
      // only a single monomial can be inverted inside the ring
      if (base.terms.size() != 1 || (base.terms.begin()->second != 1 && base.terms.begin()->second != -1))
        fail("negative power of a non-unit");
      Node inv;
      SparseExp se;
      for (const auto& [var, k] : base.terms.begin()->first) se[var] = -k;
      inv.terms.emplace(std::move(se), base.terms.begin()->second);
      return pow_node(inv, -e);
    }
    Node acc;
    acc.terms.emplace(SparseExp{}, Int(1));
    Node b = base;
    int k = e;
    while (k) {
      if (k & 1) acc = mul_nodes(acc, b);
      b = mul_nodes(b, b);
      k >>= 1;
    }
    return acc;
  }

  std::string_view text_;
  std::optional<int> expected_d_;
  std::size_t pos_ = 0;
  int max_var_ = 0;
};

void print_monomial(std::ostream& os, const ExponentVector& e, const Int& abs_coeff) {
  bool printed = abs_coeff != 1;
  if (printed) os << abs_coeff;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (printed) os << "*";
    os << "u" << (i + 1);
    if (e[i] != 1) os << "^" << e[i];
    printed = true;
  }
  if (!printed) os << "1";
}

}  // namespace

LaurentPoly parse(std::string_view text, std::optional<int> expected_num_vars) {
  return Parser(text, expected_num_vars).run();
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const bool neg = it->second < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    print_monomial(os, it->first, neg ? Int(-it->second) : it->second);
    first = false;
  }
  return os.str();
}

}  // namespace mahler
