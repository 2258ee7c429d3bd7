#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qsym;

TEST(Text, Elements) {
  EXPECT_EQ(to_text(convert(Element(Basis::sh, {3, 2}), Basis::H)), "H[3,2] - H[4,1]");
  EXPECT_EQ(to_text(Element(Basis::shStar, {1, 2}, 2)), "2*sh*[1,2]");
  EXPECT_EQ(to_text(Element(Basis::E, {1}, -1) + Element(Basis::E, {}, 3)), "3*E[] - E[1]");
  EXPECT_EQ(to_text(Element(Basis::R, {2}, -2)), "-2*R[2]");
  EXPECT_EQ(to_text(Element(Algebra::QSym)), "0");
}

TEST(Text, TensorsAndSym) {
  EXPECT_EQ(to_text(coproduct(Element(Basis::M, {2}))), "M[] (x) M[2] + M[2] (x) M[]");
  SymElement s{SymBasis::s, {}};
  s.add(Partition{2, 2}, 1);
  EXPECT_EQ(to_text(s), "s[2,2]");
}

TEST(Text, Tableaux) {
  const Tableau t{Shape::skew({3, 2}, {1}), Family::shin, {{1, 1}, {2, 3}}};
  EXPECT_EQ(to_text(t), "[.,1,1] [2,3]");
}

TEST(Parse, Elements) {
  EXPECT_EQ(parse_element("H[3,2] - H[4,1]"), Element(Basis::H, {3, 2}) - Element(Basis::H, {4, 1}));
  EXPECT_EQ(parse_element("2*sh*[1,2]"), Element(Basis::shStar, {1, 2}, 2));
  EXPECT_EQ(parse_element("-3 F[2] + 2F[1,1]"), Element(Basis::F, {2}, -3) + Element(Basis::F, {1, 1}, 2));
  EXPECT_EQ(parse_element("bshStar[2]"), Element(Basis::bshStar, {2}));
  EXPECT_EQ(parse_element("H[]"), Element::one(Algebra::NSym));
  EXPECT_EQ(parse_element("0", Algebra::QSym), Element(Algebra::QSym));
  EXPECT_EQ(parse_element("12345678901234567890*M[1]").coefficient(Basis::M, {1}), Integer("12345678901234567890"));
}

TEST(Parse, Errors) {
  for (const char* bad : {"", "0", "H[1", "Q[1]", "H[1] M[1]", "H[1] + M[1]", "H[0]", "H1", "H[1]+"})
    EXPECT_THROW(parse_element(bad), parse_error) << bad;
  EXPECT_THROW(parse_element("H[1]", Algebra::QSym), parse_error);
}

TEST(Parse, TextRoundTrip) {
  for (const auto& a : compositions_up_to(4))
    for (Basis b : qsym_bases) {
      const Element x = convert(Element(b, a), Basis::F);
      ASSERT_EQ(parse_element(to_text(x), Algebra::QSym), x);
    }
}

TEST(Json, ElementsRoundTrip) {
  const Element x = Element(Basis::sh, {2, 3}, -4) + Element(Basis::H, {1});
  const json j = to_json(x);
  EXPECT_EQ(j["algebra"], "NSym");
  EXPECT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(element_from_json(j), x);
  EXPECT_EQ(element_from_json(json::parse(j.dump())), x);
  EXPECT_THROW(element_from_json(json{{"algebra", "Sym"}, {"terms", json::array()}}), parse_error);
}

TEST(Json, TableauxRoundTrip) {
  const Tableau t{Shape::skew2({2, 3, 3}, {1, 2}), Family::flipped, {{1, 1}, {3, 2}, {3}}};
  const json j = to_json(t);
  EXPECT_EQ(j["shape"]["kind"], "skew2");
  EXPECT_EQ(tableau_from_json(j), t);
  EXPECT_THROW(shape_from_json(json{{"kind", "round"}, {"outer", {1}}}), parse_error);
}

TEST(Json, Matrices) {
  const json j = to_json(transition_matrix(Basis::R, Basis::H, 2));
  EXPECT_EQ(j, json::parse(R"([["1","-1"],["0","1"]])"));
}
