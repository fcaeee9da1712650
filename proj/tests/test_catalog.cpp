#include <doctest.h>

#include <cmath>

#include "mahler/catalog.hpp"
#include "mahler/measure.hpp"

using namespace mahler;

TEST_CASE("lookup and aliases") {
  CHECK(catalog_get("whitehead").key == "whitehead");
  CHECK(catalog_get("5_2_1").key == "whitehead");
  CHECK(catalog_get("7_1^2").key == "7_2_1");
  CHECK(catalog_get("8_2^4").key == "8_4_2");
  CHECK(catalog_get("6^3_1").key == "6_1_3");
  CHECK(catalog_get("LEHMER").key == "lehmer");
  try {
    catalog_get("lehmr");
    CHECK(false);
  } catch (const UnknownKeyError& e) {
    CHECK(e.suggestion() == "lehmer");
  }
}

TEST_CASE("spec'd polynomials are registered as printed") {
  CHECK(catalog_get("whitehead").polynomial() == parse("(u1-1)*(u2-1)"));
  CHECK(catalog_get("lehmer").polynomial() ==
        parse("1+u1-u1^3-u1^4-u1^5-u1^6-u1^7+u1^9+u1^10"));
  CHECK(catalog_get("6_1_3").polynomial() ==
        normalize(parse("u1+u2+u3-u1*u2-u1*u3-u2*u3")));
  CHECK(catalog_get("7_2_1").polynomial() ==
        normalize(parse("1-u1+(-1+u1-u1^2)*u2+(-u1+u1^2)*u2^2")));
  CHECK(catalog_get("6_2_2").polynomial() == parse("u1+(1-u1+u1^2)*u2+u1*u2^2"));
  // the 4-component entry expands the printed u4^{-1} form
  CHECK(eq_up_to_unit(
      catalog_get("8_4_2").polynomial(),
      parse("1-u1-u2+u2*u3+u1*u2*u3*u4^-1*(1-u1^-1-u2^-1+u2^-1*u3^-1)")));
  // pretzel entry is f + v * involute(f)
  const LaurentPoly f = parse("u1-u1*u3-u1*u4-u2*u3+u3*u4+u1*u2*u3", 5);
  const LaurentPoly v = parse("-u1*u2*u3*u4*u5");
  CHECK(catalog_get("pretzel_22m2").polynomial() ==
        normalize(add(f, mul(v, involute(f)))));
}

TEST_CASE("list is deterministic and complete") {
  const auto lines = catalog_list();
  CHECK(lines.size() == catalog_entries().size());
  std::vector<std::string> keys;
  for (const auto& l : lines) keys.push_back(l.key);
  for (const char* want :
       {"lehmer", "whitehead", "9_3_8", "7_2_1", "6_2_2", "mossinghoff",
        "mossinghoff_sym", "6_1_3", "8_4_2", "pretzel_22m2", "encircled_pretzel",
        "sum2", "sum3", "sum4"})
    CHECK(std::find(keys.begin(), keys.end(), want) != keys.end());
  CHECK(catalog_list()[0].key == lines[0].key);
}

TEST_CASE("every link entry passes Torres condition 1; sublinks pass condition 2") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.key);
    if (const LinkPoly* l = e.link()) {
      TorresReport r = torres_check(*l, e.sublink);
      CHECK(r.condition1_holds);
      if (e.sublink) CHECK(r.condition2_holds);
    }
    // polynomials survive a print/parse round trip
    CHECK(parse(to_string(e.polynomial()), e.polynomial().num_vars()) == e.polynomial());
  }
}

TEST_CASE("families satisfy Torres condition 1 for several q") {
  for (const auto& e : catalog_entries()) {
    if (!e.family) continue;
    CAPTURE(e.key);
    for (long long q : {1, 2, 7, 50}) {
      const LaurentPoly fq = e.family->at(q);
      CHECK(eq_up_to_unit(fq, involute(fq)));
    }
  }
}
