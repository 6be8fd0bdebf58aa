#include "fsplit/partition.hpp"

#include <algorithm>
#include <numeric>

namespace fsplit
{

namespace
{

constexpr Direction x1_plus{1, Sign::plus};

void require_ideal(Partition const &p, char const *what)
{
  if (!p.is_ideal())
    throw NotIdealError(std::string(what) + " is defined for ideal edges only; got " + to_string(p));
}

void require_same_rank(Partition const &p, Partition const &q)
{
  if (p.rank() != q.rank())
    throw std::invalid_argument("partitions of different rank");
}

} // namespace

Partition::Partition(int rank, DirectionSet side) : rank_(rank)
{
  if (rank < kMinRank || rank > kMaxStorableRank)
    throw std::invalid_argument("rank " + std::to_string(rank) + " out of range");
  DirectionSet const all = DirectionSet::all(rank);
  if ((side.bits() & ~all.bits()) != 0)
    throw std::invalid_argument("side mentions directions beyond rank " + std::to_string(rank));
  if (side.empty() || side == all)
    throw std::invalid_argument("both sides of a partition must be nonempty");

  side1_ = side.contains(x1_plus) ? side.complement(rank) : side;
}

bool Partition::is_thick() const { return side1().size() >= 2 && side2().size() >= 2; }

std::optional<int> Partition::petal_index() const
{
  if (side1().size() == 1)
    return side1().directions().front().index;
  if (side2().size() == 1)
    return side2().directions().front().index;
  return std::nullopt;
}

std::strong_ordering operator<=>(Partition const &a, Partition const &b)
{
  if (a.rank_ != b.rank_)
    return a.rank_ <=> b.rank_;
  if (a.side1_ == b.side1_)
    return std::strong_ordering::equal;
  return lex_less(a.side1_, b.side1_) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(Partition const &p) { return to_string(p.side1()); }

Partition parse_partition(std::string_view text, int rank)
{
  return Partition(rank, parse_direction_set(text, rank));
}

Partition petal_partition(int rank, Direction d) { return Partition(rank, DirectionSet::of({d})); }

SplittingClass::SplittingClass(Partition const &p) : rep_(p), petal_(p.petal_index())
{
  if (petal_) {
    Partition const a = petal_partition(p.rank(), Direction{*petal_, Sign::plus});
    Partition const b = petal_partition(p.rank(), Direction{*petal_, Sign::minus});
    rep_ = std::min(a, b);
  }
}

SplittingClass SplittingClass::petal(int rank, int index)
{
  if (index < 1 || index > rank)
    throw std::invalid_argument("petal index out of range");
  return SplittingClass(petal_partition(rank, Direction{index, Sign::plus}));
}

std::string to_string(SplittingClass const &c)
{
  if (c.is_petal())
    return "x" + std::to_string(*c.petal_index());
  return to_string(c.representative());
}

bool is_thick(Partition const &p) { return p.is_thick(); }
bool is_ideal(Partition const &p) { return p.is_ideal(); }

CornerSets corner_sets(Partition const &p, Partition const &q)
{
  require_same_rank(p, q);
  CornerSets c;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      c.k[i - 1][j - 1] = p.side(i) & q.side(j);
  return c;
}

bool crosses(Partition const &p, Partition const &q)
{
  auto const corners = corner_sets(p, q).flat();
  return std::none_of(corners.begin(), corners.end(), [](DirectionSet s) { return s.empty(); });
}

std::vector<Alignment> all_alignments(Partition const &p, Partition const &q)
{
  require_same_rank(p, q);
  std::vector<Alignment> out;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      if (!p.side(i).intersects(q.side(j)))
        out.push_back(Alignment{p.side(i), q.side(j)});

  std::sort(out.begin(), out.end(), [](Alignment const &a, Alignment const &b) {
    if (a.p_side != b.p_side)
      return lex_less(a.p_side, b.p_side);
    return lex_less(a.q_side, b.q_side);
  });
  return out;
}

std::optional<Alignment> aligned_sides(Partition const &p, Partition const &q)
{
  auto all = all_alignments(p, q);
  if (all.empty())
    return std::nullopt;
  return all.front();
}

bool rose_compatible(Partition const &p, Partition const &q)
{
  require_ideal(p, "rose compatibility");
  require_ideal(q, "rose compatibility");
  auto const a = aligned_sides(p, q);
  if (!a)
    return false;
  return (a->p_side | a->q_side).separates_some_pair(p.rank());
}

bool circle_compatible(Partition const &p, Partition const &q)
{
  return compatible(p, q) && !rose_compatible(p, q);
}

bool is_cagey(Partition const &p, Partition const &q)
{
  require_ideal(p, "caginess");
  require_ideal(q, "caginess");
  if (!crosses(p, q))
    return false;

  int const rank = p.rank();
  auto const corners = corner_sets(p, q).flat();
  for (DirectionSet k : corners)
    if (!k.separates_some_pair(rank))
      return false;

  for (std::size_t a = 0; a < corners.size(); ++a)
    for (std::size_t b = a + 1; b < corners.size(); ++b)
      if (!(corners[a] | corners[b]).separates_some_pair(rank))
        return false;
  return true;
}

bool crosses(SplittingClass const &a, SplittingClass const &b)
{
  return crosses(a.representative(), b.representative());
}

bool rose_compatible(SplittingClass const &a, SplittingClass const &b)
{
  if (a == b)
    return false;
  return rose_compatible(a.representative(), b.representative());
}

bool is_cagey(SplittingClass const &a, SplittingClass const &b)
{
  return is_cagey(a.representative(), b.representative());
}

void check_rank_guard(int rank, int ceiling)
{
  ceiling = std::min(ceiling, kDefaultRankCeiling);
  if (rank < kMinRank || rank > ceiling)
    throw std::out_of_range("rank " + std::to_string(rank) + " outside guard range [" +
                            std::to_string(kMinRank) + ", " + std::to_string(ceiling) + "]");
}

std::vector<Partition> enumerate_ideal_edges(int rank, bool thick_only, int ceiling)
{
  check_rank_guard(rank, ceiling);
  std::vector<Partition> out;
  std::uint32_t const limit = DirectionSet::all(rank).bits();
  // canonical side1 never holds x_1^+ (bit 0)
  for (std::uint32_t bits = 2; bits < limit; bits += 2) {
    Partition p(rank, DirectionSet(bits));
    if (!p.is_ideal())
      continue;
    if (thick_only && !p.is_thick())
      continue;
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SplittingClass> enumerate_splitting_classes(int rank, int ceiling)
{
  std::vector<SplittingClass> out;
  for (Partition const &p : enumerate_ideal_edges(rank, false, ceiling))
    out.emplace_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_splitting_classes(int rank, int ceiling)
{
  return enumerate_splitting_classes(rank, ceiling).size();
}

Direction SignedPermutation::apply(Direction d) const
{
  Direction out{perm.at(d.index - 1), d.sign};
  return flip.at(d.index - 1) ? out.opposite() : out;
}

DirectionSet SignedPermutation::apply(DirectionSet s) const
{
  DirectionSet out;
  for (Direction d : s.directions())
    out = out.with(apply(d));
  return out;
}

Partition SignedPermutation::apply(Partition const &p) const
{
  return Partition(p.rank(), apply(p.side1()));
}

std::vector<SignedPermutation> SignedPermutation::all(int rank)
{
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
      SignedPermutation g{perm, std::vector<bool>(rank)};
      for (int i = 0; i < rank; ++i)
        g.flip[i] = (mask >> i) & 1u;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

} // namespace fsplit
