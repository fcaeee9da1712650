#include "mahler/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

namespace mahler {

const LaurentPoly& CatalogEntry::polynomial() const {
  if (const auto* l = std::get_if<LinkPoly>(&poly)) return l->delta;
  return std::get<LaurentPoly>(poly);
}

const LinkPoly* CatalogEntry::link() const { return std::get_if<LinkPoly>(&poly); }

namespace {

CatalogEntry link_entry(std::string key, const char* delta, std::vector<long long> linking,
                        std::string source) {
  CatalogEntry e;
  e.key = key;
  e.poly = make_link_poly(parse(delta), std::move(linking), key);
  e.source = std::move(source);
  return e;
}

CatalogEntry plain_entry(std::string key, const char* poly, std::string source) {
  CatalogEntry e;
  e.key = std::move(key);
  e.poly = parse(poly);
  e.source = std::move(source);
  return e;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> v;

  {
    CatalogEntry e = plain_entry(
        "lehmer", "1+u1-u1^3-u1^4-u1^5-u1^6-u1^7+u1^9+u1^10", "Lehmer 1933");
    e.reference_measure = 1.17628;
    e.reference_tol = 1e-4;
    e.notes = "smallest known Mahler measure > 1 of an integer polynomial; Salem number";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry("whitehead", "(u1-1)*(u2-1)", {0},
                                "Whitehead link 5^2_1, Rolfsen table");
    e.reference_measure = 1.0;
    e.reference_tol = 1e-8;
    // twist-knot family q(u-1)^2 - u
    SurgeryFamily fam;
    fam.slope = parse("(x-1)^2");
    fam.intercept = parse("-x");
    e.family = std::move(fam);
    e.sublink = parse("1", 1);
    e.notes = "1/q surgery on the second component gives the twist knots";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry(
        "9_3_8", "(u2-1)*(u3-1)*(u1+2*u2-2*u1*u2-u2^2)", {0, 0},
        "link 9^3_8, Rolfsen table");
    SurgeryFamily fam;
    fam.slope = parse("(u2-1)*(u1+2*u2-2*u1*u2-u2^2)", 2);
    fam.intercept = parse("-u2-u1*u2^2", 2);
    e.family = std::move(fam);
    e.linking_inferred = true;
    e.notes =
        "zero linking with the third component; surgery family q*A + B with A the "
        "derivative limit and B inferred (Torres condition 1 holds for every q with "
        "the unit u1*u2^3); the 1/q-scaled measures approach M(A) = 2";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry(
        "7_2_1", "1-u1+(-1+u1-u1^2)*u2+(-u1+u1^2)*u2^2", {-1},
        "link 7^2_1, Rolfsen table; measure from Boyd 1978");
    e.reference_measure = 1.25543;
    e.reference_tol = 2e-3;
    e.sublink = parse("1", 1);
    e.linking_inferred = true;
    e.schematic =
        "      -1 +1\n"
        " -1 +1 -1\n"
        " +1 -1\n"
        "(coefficient of u1^i u2^j in column i, row j, bottom row j = 0)";
    e.notes =
        "|linking| = 1 forced by Torres condition 2 against an Alexander-trivial "
        "sublink; sign chosen so the q-specialization is Delta(u, u^q)";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry("6_2_2", "u1+(1-u1+u1^2)*u2+u1*u2^2", {3},
                                "link 6^2_2, Rolfsen table; measure from Boyd 1978");
    e.reference_measure = 1.28573;
    e.reference_tol = 2e-3;
    e.sublink = parse("1", 1);
    e.linking_inferred = true;
    e.schematic =
        "    +1\n"
        " +1 -1 +1\n"
        "    +1\n";
    e.notes = "Delta(u1, 1) = u1^2+u1+1 forces |linking| = 3 against an unknotted sublink";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = plain_entry("mossinghoff",
                                 "u1^2*u2*(u2+1)+u1*(u2^4-u2^2+1)+u2^2*(u2+1)",
                                 "Mossinghoff 1998");
    e.reference_measure = 1.30909;
    e.reference_tol = 2e-3;
    e.schematic =
        "    +1\n"
        " +1\n"
        " +1 -1 +1\n"
        "       +1\n"
        "    +1\n";
    e.notes =
        "registered as a plain polynomial: Torres condition 2 would force a sublink "
        "polynomial with value 5 at u = 1, so no 2-component link presents it as printed";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry("mossinghoff_sym",
                                "u1^-2*u2^-2+u1^-1-u2^-1-1+u1-u2+u1^2*u2^2", {1},
                                "Mossinghoff, symmetric variant");
    e.reference_measure = 1.30909;
    e.reference_tol = 2e-3;
    e.sublink = parse("x^4+x^3-3*x^2+x+1", 1);
    e.linking_inferred = true;
    e.schematic =
        "             +1\n"
        "       -1\n"
        "    +1 -1 +1\n"
        "       -1\n"
        " +1\n"
        "(rows j = -2..2, columns i = -2..2)";
    e.notes = "realizable as a 2-component link polynomial by Levine's construction";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry("6_1_3", "u1+u2+u3-u1*u2-u1*u3-u2*u3", {1, 1},
                                "link 6^3_1 = pretzel(2,2,2), Rolfsen table");
    e.reference_measure = 1.38135;
    e.reference_tol = 2e-3;
    e.sublink = parse("1", 2);
    e.linking_inferred = true;
    e.notes = "Hopf sublink (Delta = 1); measure equals M(1+u1+u2)";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry(
        "8_4_2",
        "1-u1-u2+u2*u3+u1*u2*u3*u4^-1-u2*u3*u4^-1-u1*u3*u4^-1+u1*u4^-1",
        {1, 0, 1}, "link 8^4_2 = pretzel(2,2,2,-2), Rolfsen table");
    e.reference_measure = 1.53154;
    e.reference_tol = 2e-3;
    e.sublink = parse("u2-1", 3);
    e.linking_inferred = true;
    e.notes = "measure equals M(1+u1+u2+u3); Delta(.,1) = (1-u2)(1-u1*u3)";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry(
        "pretzel_22m2",
        "u1-u1*u3-u1*u4-u2*u3+u3*u4+u1*u2*u3"
        "-u2*u3*u4*u5+u2*u4*u5+u2*u3*u5+u1*u4*u5-u1*u2*u5-u4*u5",
        {1, 0, 0, -1}, "pretzel link l(2,-2,2,-2,2)");
    e.reference_measure = 1.729;
    e.reference_tol = 5e-3;
    e.sublink = parse("(u2-1)*(u3-1)", 4);
    e.linking_inferred = true;
    e.notes =
        "f + v*bar(f) with f = u1-u1*u3-u1*u4-u2*u3+u3*u4+u1*u2*u3 and "
        "v = -u1*u2*u3*u4*u5; measure equals M(f); "
        "Delta(.,1) = (1-u2)(1-u3)(u1-u4)";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = link_entry("encircled_pretzel",
                                "u1^2-u1^3+u1^5+u2*(1-u1^2+u1^3)", {2},
                                "pretzel knot (-2,3,1) with the third band encircled");
    e.reference_measure = 1.32471;
    e.reference_tol = 1e-4;
    e.sublink = parse("x^4-x^3+x^2-x+1", 1);
    e.linking_inferred = true;
    e.notes =
        "q twists give the (-2,3,2q+1) pretzel knots; measures are Salem numbers "
        "approaching the minimum PV number (real root of u^3-u-1); linking 2 pinned "
        "by reproducing the twist table (q = 3 yields Lehmer's polynomial in -u)";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = plain_entry("sum2", "1+u1+u2", "Smyth 1981");
    e.reference_measure = 1.38135;
    e.reference_tol = 1e-3;
    e.notes = "closed form exp((3 sqrt 3 / 4 pi) L(2, chi_3))";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = plain_entry("sum3", "1+u1+u2+u3", "Smyth 1981");
    e.reference_measure = 1.53154;
    e.reference_tol = 1e-3;
    e.notes = "closed form exp(7 zeta(3) / 2 pi^2)";
    v.push_back(std::move(e));
  }
  {
    CatalogEntry e = plain_entry("sum4", "1+u1+u2+u3+u4", "Boyd (numeric)");
    e.reference_measure = 1.723;
    e.reference_tol = 5e-3;
    v.push_back(std::move(e));
  }
  return v;
}

std::string canon(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '^' || c == ' ') c = '_';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

const std::map<std::string, std::size_t>& alias_index() {
  static const std::map<std::string, std::size_t> idx = [] {
    std::map<std::string, std::size_t> m;
    const auto& es = catalog_entries();
    auto put = [&](const std::string& k, std::size_t i) { m.emplace(canon(k), i); };
    for (std::size_t i = 0; i < es.size(); ++i) put(es[i].key, i);
    auto find = [&](const std::string& k) {
      for (std::size_t i = 0; i < es.size(); ++i)
        if (es[i].key == k) return i;
      throw std::logic_error("alias target missing: " + k);
    };
    put("5_2_1", find("whitehead"));
    put("5^2_1", find("whitehead"));
    put("twist", find("whitehead"));
    put("7_1^2", find("7_2_1"));
    put("7^2_1", find("7_2_1"));
    put("6_2^2", find("6_2_2"));
    put("6^2_2", find("6_2_2"));
    put("9_8^3", find("9_3_8"));
    put("9^3_8", find("9_3_8"));
    put("6_1^3", find("6_1_3"));
    put("6^3_1", find("6_1_3"));
    put("8_2^4", find("8_4_2"));
    put("8^4_2", find("8_4_2"));
    put("mossinghoff_asym", find("mossinghoff"));
    put("pretzel", find("pretzel_22m2"));
    put("l(2,-2,2,-2,2)", find("pretzel_22m2"));
    put("1+u1+u2", find("sum2"));
    put("1+u1+u2+u3", find("sum3"));
    put("1+u1+u2+u3+u4", find("sum4"));
    return m;
  }();
  return idx;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

const CatalogEntry& catalog_get(const std::string& key) {
  const auto& idx = alias_index();
  auto it = idx.find(canon(key));
  if (it != idx.end()) return catalog_entries()[it->second];
  // fuzzy suggestion: closest registered alias
  std::string best;
  std::size_t best_d = std::numeric_limits<std::size_t>::max();
  for (const auto& [alias, i] : idx) {
    const std::size_t d = edit_distance(canon(key), alias);
    if (d < best_d) {
      best_d = d;
      best = catalog_entries()[i].key;
    }
  }
  throw UnknownKeyError("unknown catalog key '" + key + "' (closest match: " + best + ")",
                        best);
}

std::vector<CatalogLine> catalog_list() {
  std::vector<CatalogLine> out;
  for (const auto& e : catalog_entries()) {
    CatalogLine line;
    line.key = e.key;
    line.source = e.source;
    std::ostringstream os;
    const LaurentPoly& p = e.polynomial();
    os << p.num_vars() << " vars, " << p.term_count() << " terms";
    if (e.link()) {
      os << ", linking (";
      const auto& lk = e.link()->linking;
      for (std::size_t i = 0; i < lk.size(); ++i) os << (i ? "," : "") << lk[i];
      os << ")";
    }
    if (e.reference_measure) os << ", M ~ " << *e.reference_measure;
    line.summary = os.str();
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace mahler
