#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qsym;

namespace {

Element X(Basis b, std::initializer_list<int> a, int c = 1) { return Element(b, Composition(a), c); }

Element in_h(const std::map<std::vector<int>, Integer>& m) {
  Element out(Algebra::NSym);
  for (const auto& [a, c] : m) out.add(Term{Basis::H, Composition(a)}, c);
  return out;
}

/// Σ c ⟨l, f⟩⟨r, g⟩ for an NSym tensor.
Integer pair2(const TensorElement& t, const Element& f, const Element& g) {
  Integer s = 0;
  for (const auto& [k, c] : t.terms())
    s += c * pair(Element(k.first.basis, k.first.index), f) * pair(Element(k.second.basis, k.second.index), g);
  return s;
}

}  // namespace

TEST(Elements, Arithmetic) {
  Element x = X(Basis::H, {2, 1}) + X(Basis::H, {3}, 2);
  EXPECT_EQ(x.size(), 2u);
  x -= X(Basis::H, {3}, 2);
  EXPECT_EQ(x, X(Basis::H, {2, 1}));
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(Integer(3) * x, X(Basis::H, {2, 1}, 3));
  EXPECT_EQ(-x, X(Basis::H, {2, 1}, -1));
  EXPECT_EQ(Element::one(Algebra::QSym), X(Basis::M, {}));
  EXPECT_THROW(X(Basis::H, {1}) + X(Basis::M, {1}), qsym::domain_error);
}

TEST(Elements, StructuralAndValueEquality) {
  const Element r = X(Basis::R, {1, 1});
  const Element h = X(Basis::H, {1, 1}) - X(Basis::H, {2});
  EXPECT_NE(r, h);
  EXPECT_TRUE(equal(r, h));
}

TEST(Convert, Examples) {
  EXPECT_EQ(convert(X(Basis::R, {1, 1}), Basis::H), X(Basis::H, {1, 1}) - X(Basis::H, {2}));
  EXPECT_EQ(convert(X(Basis::R, {2}), Basis::H), X(Basis::H, {2}));
  EXPECT_EQ(convert(X(Basis::F, {2, 1}), Basis::M), X(Basis::M, {2, 1}) + X(Basis::M, {1, 1, 1}));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(convert(X(Basis::H, {n}), Basis::sh), Element(Basis::sh, Composition{n}));
}

TEST(Convert, RibbonsAndElementaryMatchSubsetSums) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& a : enumerate_compositions(n))
      ASSERT_EQ(convert(Element(Basis::R, a), Basis::H), in_h(oracle::ribbon_in_h(a.vec()))) << to_string(a);
    if (n > 0) ASSERT_EQ(convert(Element(Basis::E, Composition{n}), Basis::H), in_h(oracle::elementary_in_h(n)));
  }
}

TEST(Convert, FundamentalsMatchPolynomials) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : enumerate_compositions(n))
      ASSERT_EQ(oracle::evaluate(Element(Basis::F, a), n), oracle::fundamental(a.vec(), n)) << to_string(a);
}

TEST(Convert, RoundTripsThroughEveryBasis) {
  for (const auto& a : compositions_up_to(5)) {
    for (Basis b : nsym_bases)
      for (Basis c : nsym_bases) ASSERT_EQ(convert(convert(Element(b, a), c), b), Element(b, a));
    for (Basis b : qsym_bases)
      for (Basis c : qsym_bases) ASSERT_EQ(convert(convert(Element(b, a), c), b), Element(b, a));
  }
  EXPECT_THROW(convert(X(Basis::H, {1}), Basis::M), qsym::domain_error);
}

TEST(Matrices, IntegralInversion) {
  Matrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  EXPECT_TRUE((invert_integral(a) * a).is_identity());
  Matrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  EXPECT_THROW(invert_integral(s), qsym::domain_error);
  Matrix d(1, 1);
  d(0, 0) = 2;
  EXPECT_THROW(invert_integral(d), qsym::domain_error);
}

TEST(Matrices, TransitionMatricesCompose) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_TRUE((transition_matrix(Basis::sh, Basis::R, n) * transition_matrix(Basis::R, Basis::sh, n)).is_identity());
    EXPECT_TRUE((transition_matrix(Basis::H, Basis::E, n) * transition_matrix(Basis::E, Basis::H, n)).is_identity());
    EXPECT_TRUE(
        (transition_matrix(Basis::bshStar, Basis::F, n) * transition_matrix(Basis::F, Basis::bshStar, n)).is_identity());
  }
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(X(Basis::R, {1}), X(Basis::R, {2})), X(Basis::R, {1, 2}) + X(Basis::R, {3}));
  EXPECT_EQ(convert(multiply(X(Basis::sh, {3}), X(Basis::H, {2})), Basis::sh),
            X(Basis::sh, {5}) + X(Basis::sh, {4, 1}) + X(Basis::sh, {3, 2}));
  EXPECT_EQ(multiply(X(Basis::shStar, {1}), X(Basis::shStar, {1})), X(Basis::shStar, {2}) + X(Basis::shStar, {1, 1}));
  EXPECT_EQ(multiply(X(Basis::H, {2, 1}), X(Basis::H, {3})), X(Basis::H, {2, 1, 3}));
  EXPECT_EQ(multiply(X(Basis::M, {1}), X(Basis::M, {1})), X(Basis::M, {2}) + X(Basis::M, {1, 1}, 2));
  EXPECT_THROW(multiply(X(Basis::H, {1}), X(Basis::M, {1})), qsym::domain_error);
}

TEST(Multiply, NSymIsNotCommutative) {
  EXPECT_NE(multiply(X(Basis::H, {1}), X(Basis::H, {2})), multiply(X(Basis::H, {2}), X(Basis::H, {1})));
}

TEST(Multiply, QSymProductsMatchPolynomials) {
  const int k = 5;
  for (const auto& a : compositions_up_to(3))
    for (const auto& b : compositions_up_to(k - a.size()))
      for (Basis basis : {Basis::M, Basis::F, Basis::shStar, Basis::bshStar}) {
        const Element x(basis, a), y(basis, b);
        ASSERT_EQ(oracle::evaluate(multiply(x, y), k), oracle::mul(oracle::evaluate(x, k), oracle::evaluate(y, k)))
            << token(basis) << to_string(a) << " * " << to_string(b);
      }
}

TEST(Multiply, Associativity) {
  for (const auto& a : compositions_up_to(2))
    for (const auto& b : compositions_up_to(2))
      for (const auto& c : compositions_up_to(2)) {
        const Element x(Basis::sh, a), y(Basis::R, b), z(Basis::E, c);
        ASSERT_TRUE(equal(multiply(multiply(x, y), z), multiply(x, multiply(y, z))));
        const Element u(Basis::F, a), v(Basis::rshStar, b), w(Basis::M, c);
        ASSERT_TRUE(equal(multiply(multiply(u, v), w), multiply(u, multiply(v, w))));
      }
  EXPECT_EQ(product({}, Algebra::NSym), Element::one(Algebra::NSym));
}

TEST(Coproduct, Examples) {
  const Basis h = Basis::H, m = Basis::M;
  TensorElement want(Algebra::NSym);
  want.add(Term{h, {}}, Term{h, {2}}, 1);
  want.add(Term{h, {1}}, Term{h, {1}}, 1);
  want.add(Term{h, {2}}, Term{h, {}}, 1);
  EXPECT_EQ(coproduct(X(h, {2})), want);

  TensorElement dm(Algebra::QSym);
  dm.add(Term{m, {}}, Term{m, {2, 1}}, 1);
  dm.add(Term{m, {2}}, Term{m, {1}}, 1);
  dm.add(Term{m, {2, 1}}, Term{m, {}}, 1);
  EXPECT_EQ(coproduct(X(m, {2, 1})), dm);

  EXPECT_EQ(coproduct(Element::one(Algebra::NSym)), tensor(Element::one(Algebra::NSym), Element::one(Algebra::NSym)));
}

TEST(Coproduct, QSymCoproductSplitsTheAlphabet) {
  const int k = 4;
  for (const auto& a : compositions_up_to(k))
    for (Basis basis : {Basis::F, Basis::shStar, Basis::fshStar}) {
      const Element x(basis, a);
      ASSERT_EQ(oracle::evaluate(coproduct(x), k), oracle::evaluate(x, 2 * k)) << token(basis) << to_string(a);
    }
}

TEST(Coproduct, NSymCoproductIsDualToQSymProduct) {
  for (const auto& a : compositions_up_to(4))
    for (const auto& b : compositions_up_to(2))
      for (const auto& c : compositions_up_to(4 - b.size())) {
        if (b.size() + c.size() != a.size()) continue;
        const Element h(Basis::sh, a), f(Basis::F, b), g(Basis::shStar, c);
        ASSERT_EQ(pair2(coproduct(h), f, g), pair(h, multiply(f, g)));
      }
}

TEST(Coproduct, CounitAndConvertedLegs) {
  EXPECT_EQ(counit(Element::one(Algebra::QSym)), 1);
  EXPECT_EQ(counit(X(Basis::sh, {2})), 0);
  const TensorElement t = convert(coproduct(X(Basis::F, {1, 1})), Basis::F, Basis::F);
  EXPECT_EQ(t.coefficient(Term{Basis::F, {1}}, Term{Basis::F, {1}}), 1);
  EXPECT_EQ(t.coefficient(Term{Basis::F, {}}, Term{Basis::F, {1, 1}}), 1);
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pair(X(Basis::H, {2, 1}), X(Basis::M, {2, 1})), 1);
  EXPECT_EQ(pair(X(Basis::R, {2, 1}), X(Basis::F, {1, 2})), 0);
  EXPECT_EQ(pair(X(Basis::sh, {2, 3}), X(Basis::shStar, {2, 3})), 1);
  EXPECT_THROW(pair(X(Basis::M, {1}), X(Basis::H, {1})), qsym::domain_error);
}

TEST(Pairing, RibbonsAndFundamentalsAreDual) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& a : enumerate_compositions(n))
      for (const auto& b : enumerate_compositions(n))
        ASSERT_EQ(pair(Element(Basis::R, a), Element(Basis::F, b)), a == b ? 1 : 0);
}

TEST(Perp, Examples) {
  EXPECT_EQ(perp(X(Basis::H, {1}), X(Basis::M, {1, 1})), X(Basis::M, {1}));
  const Element f = X(Basis::shStar, {2, 1}) + X(Basis::F, {3}, 2);
  EXPECT_TRUE(equal(perp(Element::one(Algebra::NSym), f), f));
  EXPECT_TRUE(equal(rperp(Element::one(Algebra::NSym), f), f));
  EXPECT_EQ(rperp(X(Basis::H, {1}), X(Basis::M, {2, 1})), X(Basis::M, {2}));
  EXPECT_TRUE(perp(X(Basis::H, {1}), X(Basis::M, {2, 1})).is_zero());
}

TEST(Involutions, Examples) {
  EXPECT_EQ(involution(Involution::psi, X(Basis::F, {3, 2})), X(Basis::F, {1, 1, 2, 1}));
  EXPECT_EQ(involution(Involution::omega, X(Basis::shStar, {2, 3})), X(Basis::bshStar, {3, 2}));
  EXPECT_EQ(involution(Involution::psi, X(Basis::sh, {2, 3})), X(Basis::rsh, {2, 3}));
  EXPECT_EQ(involution(Involution::rho, X(Basis::sh, {2, 3})), X(Basis::fsh, {3, 2}));
  EXPECT_EQ(involution(Involution::psi, X(Basis::H, {2, 1})), X(Basis::E, {2, 1}));
  EXPECT_EQ(involution(Involution::rho, X(Basis::H, {2, 1})), X(Basis::H, {1, 2}));
  EXPECT_EQ(parse_involution("omega"), Involution::omega);
  EXPECT_THROW(parse_involution("phi"), parse_error);
}

TEST(Involutions, SquareToIdentity) {
  for (const auto& a : compositions_up_to(5))
    for (Involution w : {Involution::psi, Involution::rho, Involution::omega}) {
      const Element x = Element(Basis::sh, a) + Element(Basis::R, a);
      ASSERT_TRUE(equal(involution(w, involution(w, x)), x));
      const Element y = Element(Basis::fshStar, a);
      ASSERT_EQ(involution(w, involution(w, y)), y);
    }
}

TEST(Antipode, Examples) {
  EXPECT_EQ(antipode(X(Basis::R, {2})), X(Basis::R, {1, 1}));
  EXPECT_EQ(antipode(X(Basis::H, {2})), X(Basis::H, {1, 1}) - X(Basis::H, {2}));
  EXPECT_EQ(convert(antipode(X(Basis::sh, {2})), Basis::H), X(Basis::H, {1, 1}) - X(Basis::H, {2}));
  EXPECT_EQ(convert(antipode(X(Basis::sh, {2})), Basis::bsh), X(Basis::bsh, {2}));
}

TEST(Antipode, IsAnAntiAutomorphismOfOrderTwo) {
  for (const auto& a : compositions_up_to(3))
    for (const auto& b : compositions_up_to(3)) {
      const Element x(Basis::sh, a), y(Basis::H, b);
      ASSERT_TRUE(equal(antipode(multiply(x, y)), multiply(antipode(y), antipode(x))));
      const Element u(Basis::shStar, a), v(Basis::F, b);
      ASSERT_TRUE(equal(antipode(multiply(u, v)), multiply(antipode(v), antipode(u))));
    }
  for (const auto& a : compositions_up_to(5)) {
    ASSERT_EQ(antipode(antipode(Element(Basis::rsh, a))), Element(Basis::rsh, a));
    ASSERT_EQ(antipode(antipode(Element(Basis::M, a))), Element(Basis::M, a));
  }
}

TEST(Antipode, ConvolutionIsTheCounit) {
  for (const auto& a : compositions_up_to(4)) {
    const Element x(Basis::sh, a), y(Basis::F, a);
    ASSERT_EQ(antipode_convolution(x), counit(x) * Element::one(Algebra::NSym));
    ASSERT_EQ(antipode_convolution(y), counit(y) * Element::one(Algebra::QSym));
  }
}
