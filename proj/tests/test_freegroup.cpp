#include <doctest.h>

#include <algorithm>

#include <random>

#include "fsplit/automorphism.hpp"
#include "fsplit/whitehead.hpp"
#include "whitehead_oracle.hpp"

using namespace fsplit;

namespace
{

Word w(char const *text, int rank) { return Word::parse(text, rank); }

} // namespace

TEST_CASE("reduction and conjugacy")
{
  CHECK(w("x1x2X2", 2) == w("x1", 2));
  CHECK(to_string(w("x1X1", 2)) == "1");
  CHECK(cyclic_reduce(w("x2x1x3X2", 3)) == w("x1x3", 3));
  CHECK(is_conjugate(w("x1x2", 2), w("x2x1", 2)));
  CHECK_FALSE(is_conjugate(w("x1", 2), w("x2", 2)));
  CHECK_THROWS_AS(Word::parse("x3", 2), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("x1y2", 2), std::invalid_argument);
}

TEST_CASE("nielsen automorphisms")
{
  FreeAutomorphism const n = nielsen(3, 1, 2, Side::right);
  CHECK(n.apply(w("x1", 3)) == w("x1x2", 3));
  CHECK(n.apply(w("x3", 3)) == w("x3", 3));
  CHECK(nielsen(3, 1, 2, Side::left).apply(w("x1", 3)) == w("x2x1", 3));
  CHECK(n.then(n.inverse()) == FreeAutomorphism::identity(3));
  CHECK_THROWS_AS(nielsen(3, 2, 2), std::invalid_argument);
}

TEST_CASE("twists")
{
  Word const c = commutator(w("x1", 3), w("x2", 3));
  FreeAutomorphism const right = twist(3, c, Side::right);
  CHECK(right.apply(w("x3", 3)) == w("x3", 3) * c);
  CHECK(right.apply(w("x1x2", 3)) == w("x1x2", 3));
  CHECK(twist(3, Word(3), Side::left) == FreeAutomorphism::identity(3));
  CHECK_THROWS_AS(twist(3, w("x3x1", 3), Side::left), std::invalid_argument);

  // left and right twists commute
  FreeAutomorphism const left = twist(3, w("x1x1x2", 3), Side::left);
  for (auto const &letters : oracle::cyclically_reduced_words(3, 4)) {
    Word const u(3, letters);
    CHECK(left.then(right).apply(u) == right.then(left).apply(u));
  }
}

TEST_CASE("whitehead graph")
{
  WhiteheadGraph const g = whitehead_graph(w("x1x2X1X2", 2));
  CHECK(g.total_multiplicity() == 4);
  for (int l : {1, -1, 2, -2})
    CHECK(g.degree(l) == 2);
  CHECK(g.connected_without_cut_vertex());

  WhiteheadGraph const single = whitehead_graph(w("x1", 2));
  CHECK(single.multiplicity(1, -1) == 1);
  CHECK(single.total_multiplicity() == 1);
  CHECK_FALSE(connected_no_cutvertex(single));

  // x1 x2 x3: path X... edges {x1,X2}, {x2,X3}, {x3,X1} form three disjoint edges
  CHECK_FALSE(whitehead_graph(w("x1x2x3", 3)).connected_without_cut_vertex());
  CHECK_THROWS_AS(whitehead_graph(Word(2)), std::invalid_argument);

  for (auto const &letters : oracle::cyclically_reduced_words(2, 5))
    CHECK(whitehead_graph(Word(2, letters)).total_multiplicity() == static_cast<int>(letters.size()));
}

TEST_CASE("stable letter edges in the whitehead graph of t w t^-1 a")
{
  // w = [x1,x2] written x1 x2 X1 X2, t = x3; g = t w t^-1 x1 is cyclically reduced
  Word const g = w("x3x1x2X1X2X3x1", 3);
  WhiteheadGraph const wh = whitehead_graph(g);
  // two distinct edges at t: to x_1^{-1} = X1 and to x_n = X2
  CHECK(wh.multiplicity(3, -1) == 1);
  CHECK(wh.multiplicity(3, -2) == 1);
  CHECK(wh.degree(3) == 2);
  CHECK(wh.degree(3) + wh.degree(-3) == 4);
}

TEST_CASE("is_simple anchors")
{
  CHECK(is_simple(w("x1", 2)));
  CHECK(is_simple(w("x1x2", 2)));
  CHECK_FALSE(is_simple(w("x1x2X1X2", 2)));
  CHECK(is_simple(w("x1x1x2", 2)));
  CHECK_FALSE(is_simple(w("x1x1x2x2", 2)));
  CHECK_THROWS_AS(is_simple(Word(2)), std::invalid_argument);
}

TEST_CASE("minimization never lengthens and ends at a minimum")
{
  for (auto const &letters : oracle::cyclically_reduced_words(2, 6)) {
    Word const u(2, letters);
    Minimization const m = whitehead_minimize(u);
    CHECK(m.word.length() <= cyclic_reduce(u).length());
    for (auto const &mv : whitehead_moves(2))
      CHECK(cyclic_reduce(mv.automorphism().apply(m.word)).length() >= m.word.length());
  }
}

TEST_CASE("whitehead move inverses")
{
  for (int rank : {2, 3})
    for (auto const &mv : whitehead_moves(rank))
      CHECK(mv.automorphism().then(mv.inverse().automorphism()) == FreeAutomorphism::identity(rank));
  CHECK(whitehead_moves(2).size() == 8);
  CHECK(whitehead_moves(3).size() == 84);
}

TEST_CASE("is_simple is invariant under inversion, conjugation and automorphisms")
{
  std::vector<FreeAutomorphism> autos{nielsen(2, 1, 2), nielsen(2, 2, 1, Side::left)};
  for (auto const &mv : whitehead_moves(2))
    autos.push_back(mv.automorphism());
  for (auto const &letters : oracle::cyclically_reduced_words(2, 5)) {
    Word const u(2, letters);
    bool const s = is_simple(u);
    CHECK(is_simple(u.inverse()) == s);
    CHECK(is_simple(w("x2x1", 2) * u * w("X1X2", 2)) == s);
    for (auto const &a : autos)
      CHECK(is_simple(a.apply(u)) == s);
  }
  std::vector<FreeAutomorphism> autos3{nielsen(3, 1, 2), nielsen(3, 3, 1, Side::left)};
  for (auto const &mv : whitehead_moves(3))
    autos3.push_back(mv.automorphism());
  for (auto const &letters : oracle::cyclically_reduced_words(3, 4)) {
    Word const u(3, letters);
    bool const s = is_simple(u);
    CHECK(is_simple(u.inverse()) == s);
    for (auto const &a : autos3)
      CHECK(is_simple(a.apply(u)) == s);
  }
}

TEST_CASE("connected without cut vertex implies nonsimple")
{
  for (auto const &letters : oracle::cyclically_reduced_words(3, 5)) {
    Word const u(3, letters);
    if (whitehead_graph(u).connected_without_cut_vertex())
      CHECK_FALSE(is_simple(u));
  }
}

TEST_CASE("automorphism round trip on random compositions")
{
  std::mt19937 rng(11);
  auto const &moves = whitehead_moves(3);
  auto const words = oracle::cyclically_reduced_words(3, 4);
  for (int trial = 0; trial < 50; ++trial) {
    FreeAutomorphism phi = FreeAutomorphism::identity(3);
    for (int k = 0; k < 4; ++k)
      phi = phi.then(moves[rng() % moves.size()].automorphism());
    Word const u(3, words[rng() % words.size()]);
    CHECK(phi.inverse().apply(phi.apply(u)) == u);
  }
}

TEST_CASE("factor product enumeration")
{
  Word const c = commutator(w("x1", 2), w("x2", 2));
  auto const one = enumerate_factor_product(2, c, 1);
  CHECK(one.size() == 4);
  auto const eight = enumerate_factor_product(2, c, 8);
  Word const twt = w("x3", 3) * Word(3, c.letters()) * w("X3", 3);
  CHECK(std::find(eight.begin(), eight.end(), twt) != eight.end());
  CHECK(std::is_sorted(eight.begin(), eight.end()));
  for (auto const &g : eight) {
    CHECK(g.length() <= 8);
    int exponent = 0;
    for (int l : g.letters())
      exponent += l == 3 ? 1 : l == -3 ? -1 : 0;
    CHECK(exponent == 0);
  }
  CHECK_THROWS_AS(enumerate_factor_product(2, w("x1x3", 3), 4), std::invalid_argument);
}

TEST_CASE("conjugate_into_factor")
{
  CHECK(conjugate_into_factor(w("x3x1X3", 3), 2));
  CHECK_FALSE(conjugate_into_factor(w("x3x1", 3), 2));
  CHECK(conjugate_into_factor(w("x3x1x2X1X2X3", 3), 2));
}

TEST_CASE("is_simple agrees with the brute-force oracle on short words")
{
  for (auto const &letters : oracle::cyclically_reduced_words(2, 5))
    CHECK(is_simple(Word(2, letters)) == oracle::is_simple(2, letters));
}
