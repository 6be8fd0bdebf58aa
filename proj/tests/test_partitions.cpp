#include <doctest.h>

#include <algorithm>

#include "fsplit/partition.hpp"
#include "fsplit/verify.hpp"

using namespace fsplit;

namespace
{

Partition part(int rank, char const *side) { return parse_partition(side, rank); }

} // namespace

TEST_CASE("directions parse and print")
{
  CHECK(to_string(parse_direction("x3-")) == "x3-");
  CHECK(parse_direction("x12+") == Direction{12, Sign::plus});
  CHECK_THROWS_AS(parse_direction("y1+"), std::invalid_argument);
  CHECK_THROWS_AS(parse_direction("x0+"), std::invalid_argument);
  CHECK(to_string(parse_direction_set("x2-, x1+", 3)) == "x1+,x2-");
  CHECK_THROWS(parse_direction_set("x1+,x1+", 3));
  CHECK_THROWS(parse_direction_set("x4+", 3));
}

TEST_CASE("canonical orientation puts x1+ on side2")
{
  Partition const a = part(3, "x1-,x2+");
  Partition const b = part(3, "x1+,x2-,x3+,x3-");
  CHECK(a == b);
  CHECK(!a.side1().contains(Direction{1, Sign::plus}));
  CHECK_THROWS_AS(Partition(3, DirectionSet::all(3)), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, DirectionSet{}), std::invalid_argument);
}

TEST_CASE("is_thick")
{
  CHECK(is_thick(part(6, "x1-,x2+")));
  CHECK_FALSE(is_thick(part(6, "x1+")));
  CHECK_FALSE(is_thick(part(3, "x2-")));
}

TEST_CASE("is_ideal")
{
  CHECK(is_ideal(part(6, "x1-,x2+")));
  CHECK_FALSE(is_ideal(part(3, "x1+,x1-")));
  CHECK(is_ideal(part(3, "x1+")));
}

TEST_CASE("crosses")
{
  for (int k = 2; k <= 4; ++k)
    CHECK(crosses(rigid_tau(6), rigid_q(6, k)));
  Partition const p = part(4, "x1-,x3+");
  CHECK_FALSE(crosses(p, p));
  for (int n = 3; n <= 6; ++n)
    CHECK_FALSE(crosses(rigid_p(n, 1), rigid_p(n, 2)));
}

TEST_CASE("aligned_sides")
{
  auto const a = aligned_sides(rigid_p(3, 1), rigid_p(3, 2));
  REQUIRE(a.has_value());
  CHECK(to_string(a->p_side) == "x1-,x2+");
  CHECK(to_string(a->q_side) == "x2-,x3+");

  CHECK_FALSE(aligned_sides(rigid_tau(6), rigid_q(6, 2)).has_value());

  Partition const p = part(3, "x1-,x3+");
  auto const self = aligned_sides(p, p);
  REQUIRE(self.has_value());
  CHECK((self->p_side & self->q_side).empty());
  CHECK((self->p_side | self->q_side) == DirectionSet::all(3));
}

TEST_CASE("rose_compatible")
{
  CHECK(rose_compatible(rigid_p(3, 1), rigid_p(3, 2)));
  Partition const tau1 = part(3, "x2+,x3-");
  Partition const sigma2 = part(3, "x2-,x3+");
  CHECK(compatible(tau1, sigma2));
  CHECK_FALSE(rose_compatible(tau1, sigma2));
  CHECK(circle_compatible(tau1, sigma2));
  CHECK_FALSE(rose_compatible(rigid_tau(6), rigid_q(6, 2)));
  CHECK_THROWS_AS(rose_compatible(part(3, "x1+,x1-"), tau1), NotIdealError);
}

TEST_CASE("corner_sets")
{
  int const n = 6;
  for (int k = 2; k <= n - 2; ++k) {
    CornerSets const c = corner_sets(rigid_tau(n), rigid_q(n, k));
    DirectionSet k11;
    DirectionSet k12;
    DirectionSet k21;
    DirectionSet k22 = DirectionSet::of({Direction{1, Sign::plus}});
    for (int i = 1; i <= k; ++i)
      k11 = k11.with(Direction{i, Sign::minus});
    for (int i = k + 1; i <= n; ++i)
      k12 = k12.with(Direction{i, Sign::minus});
    for (int i = 2; i <= k + 1; ++i)
      k21 = k21.with(Direction{i, Sign::plus});
    for (int i = k + 2; i <= n; ++i)
      k22 = k22.with(Direction{i, Sign::plus});
    CHECK(c.at(1, 1) == k11);
    CHECK(c.at(1, 2) == k12);
    CHECK(c.at(2, 1) == k21);
    CHECK(c.at(2, 2) == k22);
  }

  Partition const p = part(3, "x1-,x3+");
  CornerSets const self = corner_sets(p, p);
  CHECK(self.at(1, 2).empty());
  CHECK(self.at(2, 1).empty());
  CHECK(self.at(1, 1) == p.side1());

  auto const disjoint = corner_sets(rigid_p(4, 1), rigid_p(4, 3)).flat();
  CHECK(std::count_if(disjoint.begin(), disjoint.end(), [](DirectionSet s) { return s.empty(); }) == 1);
}

TEST_CASE("is_cagey")
{
  for (int k = 2; k <= 4; ++k)
    CHECK(is_cagey(rigid_tau(6), rigid_q(6, k)));
  CHECK_FALSE(is_cagey(rigid_tau(6), petal_partition(6, Direction{1, Sign::plus})));
  CHECK(is_cagey(part(3, "x2+,x3-"), rigid_p(3, 1)));
  CHECK_THROWS_AS(is_cagey(part(3, "x1+,x1-"), rigid_p(3, 1)), NotIdealError);
}

TEST_CASE("enumeration counts at rank 3")
{
  auto const all = enumerate_ideal_edges(3);
  CHECK(all.size() == 28);
  CHECK(enumerate_ideal_edges(3, true).size() == 22);
  CHECK(count_splitting_classes(3) == 25);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (auto const &p : all)
    CHECK(p.is_ideal());
}

TEST_CASE("enumeration counts at larger ranks")
{
  CHECK(count_splitting_classes(4) == 116);
  CHECK(count_splitting_classes(5) == 491);
  CHECK(count_splitting_classes(6) == 2010);
}

TEST_CASE("rank guard")
{
  CHECK_THROWS_AS(enumerate_ideal_edges(2), std::out_of_range);
  CHECK_THROWS_AS(enumerate_ideal_edges(8), std::out_of_range);
  CHECK_THROWS_AS(enumerate_ideal_edges(6, false, 5), std::out_of_range);
}

TEST_CASE("petal identification")
{
  for (int i = 1; i <= 4; ++i) {
    SplittingClass const a(petal_partition(4, Direction{i, Sign::plus}));
    SplittingClass const b(petal_partition(4, Direction{i, Sign::minus}));
    CHECK(a == b);
    CHECK(a == SplittingClass::petal(4, i));
    CHECK(to_string(a) == "x" + std::to_string(i));
  }
}
