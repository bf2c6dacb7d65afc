#include <gtest/gtest.h>

#include <random>

#include "cdgl/errors.hpp"
#include "cdgl/lie_basis.hpp"
#include "cdgl/linalg.hpp"
#include "cdgl/morphism.hpp"
#include "cdgl/series.hpp"

using namespace cdgl;

namespace {

struct Algebra {
  AlphabetPtr alphabet;
  int n;
  LieElement gen(const std::string& name) const { return LieElement::generator(alphabet, n, name); }
  LieElement zero() const { return LieElement(alphabet, n); }
  LieElement word(const std::vector<std::string>& names, Rational c = 1) const {
    std::vector<int> idx;
    for (const auto& s : names) idx.push_back(alphabet->index_of(s));
    ElementBuilder b(alphabet, n);
    b.add(Word::from(idx), c);
    return b.build();
  }
};

Algebra make(std::vector<GradedGenerator> gens, int n) { return {make_alphabet(std::move(gens)), n}; }

// Random Lie element of a fixed degree built from brackets of generators.
LieElement random_lie(std::mt19937& rng, const Algebra& A, int degree, int max_length) {
  LieBasis basis(A.alphabet, A.n);
  LieElement x = A.zero();
  for (int k = 1; k <= max_length; ++k) {
    for (const Word& w : basis.words(k, degree)) {
      int c = static_cast<int>(rng() % 5) - 2;
      if (c != 0) x += Rational(c) * basis.element(w);
    }
  }
  return x;
}

// dim of the (k, n) slice of the free Lie algebra, as the rank of the Dynkin
// images of all words of that shape.
std::size_t slice_dimension_by_dynkin(const Algebra& A, int k, int degree) {
  std::vector<std::vector<int>> words{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int g = 0; g < A.alphabet->size(); ++g) {
        auto v = w;
        v.push_back(g);
        next.push_back(v);
      }
    words = next;
  }
  std::vector<LieElement> images;
  std::unordered_map<Word, std::size_t, WordHash> row;
  for (const auto& w : words) {
    Word word = Word::from(w);
    if (A.alphabet->word_degree(word) != degree) continue;
    ElementBuilder b(A.alphabet, A.n);
    b.add(word, 1);
    images.push_back(dynkin(b.build()));
    for (const auto& [u, c] : images.back().terms()) row.try_emplace(u, row.size());
  }
  SparseMatrix m(row.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [u, c] : images[j].terms()) m.set(row[u], j, c);
  return rank(m);
}

}  // namespace

TEST(Bracket, DegreeZeroCommutator) {
  auto A = make({{"x", 0}, {"y", 0}}, 4);
  EXPECT_EQ(bracket(A.gen("x"), A.gen("y")), A.word({"x", "y"}) - A.word({"y", "x"}));
}

TEST(Bracket, OddSquareSurvives) {
  auto A = make({{"a", -1}}, 4);
  EXPECT_EQ(bracket(A.gen("a"), A.gen("a")), A.word({"a", "a"}, 2));
}

TEST(Bracket, EvenSquareVanishes) {
  auto A = make({{"x", 0}}, 4);
  EXPECT_TRUE(bracket(A.gen("x"), A.gen("x")).is_zero());
}

TEST(Bracket, MismatchedTruncationThrows) {
  auto A = make({{"x", 0}}, 4);
  auto B = Algebra{A.alphabet, 5};
  EXPECT_THROW(bracket(A.gen("x"), B.gen("x")), AlgebraError);
}

TEST(IsLie, Examples) {
  auto A = make({{"x", 0}, {"y", 0}}, 4);
  EXPECT_TRUE(is_lie(A.gen("x")));
  EXPECT_FALSE(is_lie(A.word({"x", "y"})));
  EXPECT_TRUE(is_lie(bracket(A.gen("x"), A.gen("y"))));
}

TEST(Bernoulli, Values) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli(6), Rational(1, 42));
  EXPECT_THROW(bernoulli(-1), AlgebraError);
}

TEST(Bch, UnitInverseAndLengthTwo) {
  auto A = make({{"x", 0}, {"y", 0}}, 6);
  auto x = A.gen("x"), y = A.gen("y");
  EXPECT_EQ(bch(x, A.zero()), x);
  EXPECT_TRUE(bch(x, -x).is_zero());
  EXPECT_EQ(bch(x, y).length_slice(2), Rational(1, 2) * bracket(x, y));
  // length 3: (1/12)([x,[x,y]] + [y,[y,x]])
  EXPECT_EQ(bch(x, y).length_slice(3),
            Rational(1, 12) * (bracket(x, bracket(x, y)) + bracket(y, bracket(y, x))));
  EXPECT_TRUE(is_lie(bch(x, y)));
}

TEST(Bch, RejectsNonzeroDegree) {
  auto A = make({{"a", -1}, {"x", 0}}, 4);
  EXPECT_THROW(bch(A.gen("a"), A.gen("x")), AlgebraError);
}

TEST(AdSeries, Examples) {
  auto A = make({{"x", 0}, {"y", 0}}, 5);
  auto x = A.gen("x"), y = A.gen("y");
  EXPECT_EQ(ad_series({1, 0, 0, 0}, x, y), y);
  EXPECT_EQ(ad_series({3, 1, 1}, A.zero(), y), Rational(3) * y);
  auto s = ad_series(z_over_exp_minus_one(5), x, y).up_to_length(3);
  EXPECT_EQ(s, y - Rational(1, 2) * bracket(x, y) + Rational(1, 12) * bracket(x, bracket(x, y)));
}

TEST(ComponentBasis, Examples) {
  auto odd = make({{"a", -1}}, 4);
  auto b = component_basis(odd.alphabet, 4, 2, -2);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], bracket(odd.gen("a"), odd.gen("a")));
  auto even = make({{"x", 0}}, 4);
  EXPECT_TRUE(component_basis(even.alphabet, 4, 2, 0).empty());
  auto two = make({{"x", 0}, {"y", 0}}, 4);
  auto c = component_basis(two.alphabet, 4, 2, 0);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], bracket(two.gen("x"), two.gen("y")));
}

TEST(ComponentBasis, MatchesDynkinSpanDimension) {
  auto A = make({{"a", -1}, {"b", -1}, {"x", 0}}, 5);
  LieBasis basis(A.alphabet, 5);
  for (int k = 1; k <= 5; ++k) {
    for (int d = -k; d <= 0; ++d) {
      EXPECT_EQ(basis.words(k, d).size(), slice_dimension_by_dynkin(A, k, d)) << "k=" << k << " d=" << d;
      EXPECT_EQ(component_basis(A.alphabet, 5, k, d).size(), basis.words(k, d).size());
      for (const Word& w : basis.words(k, d)) EXPECT_TRUE(is_lie(basis.element(w)));
    }
  }
  auto odd = make({{"u", 1}, {"v", 2}}, 6);
  LieBasis ob(odd.alphabet, 6);
  for (int k = 1; k <= 5; ++k)
    for (int d = k; d <= 2 * k; ++d) EXPECT_EQ(ob.words(k, d).size(), slice_dimension_by_dynkin(odd, k, d));
}

TEST(LieBasis, CoordinatesReconstruct) {
  std::mt19937 rng(3);
  auto A = make({{"a", -1}, {"x", 0}, {"y", 0}}, 5);
  LieBasis basis(A.alphabet, 5);
  LieElement x = random_lie(rng, A, -1, 5);
  LieElement rebuilt = A.zero();
  for (const auto& [w, c] : basis.coordinates(x)) rebuilt += c * basis.element(w);
  EXPECT_EQ(rebuilt, x);
  EXPECT_THROW(basis.coordinates(A.word({"x", "y"})), AlgebraError);
}

TEST(Morphism, IdentityAndKilling) {
  auto A = make({{"g", 0}, {"y", 0}}, 5);
  auto x = bracket(A.gen("g"), bracket(A.gen("g"), A.gen("y")));
  EXPECT_EQ(LieMorphism::identity(A.alphabet, 5).apply(x), x);
  auto kill = LieMorphism::from_named(A.alphabet, A.alphabet, 5, {{"y", A.gen("y")}});
  EXPECT_TRUE(kill.apply(bracket(A.gen("g"), A.gen("y"))).is_zero());
}

TEST(Morphism, PreservesBrackets) {
  std::mt19937 rng(11);
  auto A = make({{"a", -1}, {"x", 0}, {"y", 0}}, 5);
  auto f = LieMorphism::from_named(A.alphabet, A.alphabet, 5,
                                   {{"a", A.gen("a") + bracket(A.gen("x"), A.gen("a"))},
                                    {"x", A.gen("y") + Rational(1, 2) * bracket(A.gen("x"), A.gen("y"))},
                                    {"y", A.gen("x") - A.gen("y")}});
  for (int t = 0; t < 5; ++t) {
    auto u = random_lie(rng, A, -1, 3), v = random_lie(rng, A, 0, 3);
    EXPECT_EQ(f.apply(bracket(u, v)), bracket(f.apply(u), f.apply(v)));
  }
}

TEST(InvertMorphism, IdentityAndAdjointSeries) {
  auto A = make({{"a", 0}, {"b", 0}}, 6);
  EXPECT_EQ(invert_morphism(LieMorphism::identity(A.alphabet, 6)), LieMorphism::identity(A.alphabet, 6));
  // f(a) = a, f(b) = b + [a,b]; inverse sends b to sum (-1)^n ad_a^n(b).
  auto f = LieMorphism::from_named(A.alphabet, A.alphabet, 6,
                                   {{"a", A.gen("a")}, {"b", A.gen("b") + bracket(A.gen("a"), A.gen("b"))}});
  auto g = invert_morphism(f);
  std::vector<Rational> alternating(7);
  for (int k = 0; k <= 6; ++k) alternating[k] = (k % 2 == 0) ? 1 : -1;
  EXPECT_EQ(g.image("b"), ad_series(alternating, A.gen("a"), A.gen("b")));
  EXPECT_EQ(compose(f, g), LieMorphism::identity(A.alphabet, 6));
}

TEST(InvertMorphism, RejectsSingularLinearPart) {
  auto A = make({{"a", 0}, {"b", 0}}, 4);
  auto f = LieMorphism::from_named(A.alphabet, A.alphabet, 4, {{"a", A.gen("a")}, {"b", A.gen("a")}});
  EXPECT_THROW(invert_morphism(f), AlgebraError);
}

TEST(Derivation, LeibnizSigns) {
  auto A = make({{"v", 0}, {"v'", 0}, {"sv'", 1}}, 4);
  auto i = LieDerivation::from_named(A.alphabet, 4, 1, {{"v", A.gen("sv'")}});
  EXPECT_TRUE(LieDerivation::zero(A.alphabet, 4, 1).apply(A.gen("v")).is_zero());
  EXPECT_EQ(i.apply(A.gen("v")), A.gen("sv'"));
  EXPECT_EQ(i.apply(bracket(A.gen("v"), A.gen("v'"))), bracket(A.gen("sv'"), A.gen("v'")));
}

TEST(Derivation, GradedLeibnizRandom) {
  std::mt19937 rng(5);
  auto A = make({{"a", -1}, {"b", -1}, {"x", 0}}, 5);
  auto d = LieDerivation::from_named(A.alphabet, 5, -1,
                                     {{"a", Rational(-1, 2) * bracket(A.gen("a"), A.gen("a"))},
                                      {"x", A.gen("b") - A.gen("a") + bracket(A.gen("x"), A.gen("b"))}});
  for (int t = 0; t < 5; ++t) {
    auto u = random_lie(rng, A, 0, 3), v = random_lie(rng, A, -1, 3);
    EXPECT_EQ(d.apply(bracket(u, v)), bracket(d.apply(u), v) + bracket(u, d.apply(v)));
    EXPECT_EQ(d.apply(bracket(v, u)), bracket(d.apply(v), u) - bracket(v, d.apply(u)));
  }
}

TEST(ExpDerivation, ZeroAndMultiplicative) {
  std::mt19937 rng(9);
  auto A = make({{"a", -1}, {"x", 0}, {"y", 0}}, 5);
  auto zero = LieDerivation::zero(A.alphabet, 5, 0);
  EXPECT_EQ(exp_derivation(zero, A.gen("a")), A.gen("a"));
  auto D = LieDerivation::from_named(A.alphabet, 5, 0,
                                     {{"a", bracket(A.gen("x"), A.gen("a"))}, {"y", bracket(A.gen("x"), A.gen("y"))}});
  for (int t = 0; t < 4; ++t) {
    auto u = random_lie(rng, A, -1, 2), v = random_lie(rng, A, 0, 2);
    EXPECT_EQ(exp_derivation(D, bracket(u, v)), bracket(exp_derivation(D, u), exp_derivation(D, v)));
  }
  auto nonzero_degree = LieDerivation::zero(A.alphabet, 5, 1);
  EXPECT_THROW(exp_derivation(nonzero_degree, A.gen("a")), AlgebraError);
}

TEST(ExpDerivation, NonNilpotentSeriesThrows) {
  auto A = make({{"x", 0}}, 3);
  auto D = LieDerivation::from_named(A.alphabet, 3, 0, {{"x", A.gen("x")}});
  EXPECT_THROW(exp_derivation(D, A.gen("x")), SolveError);
}

TEST(AlgebraLaws, AntisymmetryJacobiAndBchAssociativity) {
  std::mt19937 rng(21);
  auto A = make({{"a", -1}, {"u", 1}, {"x", 0}, {"y", 0}}, 5);
  const int degrees[] = {-1, 0, 1};
  for (int t = 0; t < 6; ++t) {
    int p = degrees[rng() % 3], q = degrees[rng() % 3], r = degrees[rng() % 3];
    auto x = random_lie(rng, A, p, 2), y = random_lie(rng, A, q, 2), z = random_lie(rng, A, r, 2);
    Rational s = ((p * q) % 2 == 0) ? 1 : -1;
    EXPECT_TRUE((bracket(x, y) + s * bracket(y, x)).is_zero());
    EXPECT_EQ(bracket(x, bracket(y, z)), bracket(bracket(x, y), z) + s * bracket(y, bracket(x, z)));
  }
  for (int t = 0; t < 3; ++t) {
    auto x = random_lie(rng, A, 0, 2), y = random_lie(rng, A, 0, 2), z = random_lie(rng, A, 0, 2);
    EXPECT_EQ(bch(bch(x, y), z), bch(x, bch(y, z)));
    EXPECT_TRUE(is_lie(bch(x, y)));
    EXPECT_TRUE(is_lie(ad_series(z_over_exp_minus_one(5), x, y)));
  }
}
