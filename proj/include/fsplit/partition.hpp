#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/direction.hpp"

namespace fsplit
{

inline constexpr int kMinRank = 3;

/// Default ceiling for exhaustive enumeration; the universe has 2^(2N-1)-1
/// bipartitions.
inline constexpr int kDefaultRankCeiling = 7;

/**
 * A two-block split of the 2N directions at the rose vertex.
 *
 * Stored in canonical orientation: side1 is the block that does not contain
 * x_1^+. Construction from either block yields the same value.
 */
class Partition
{
public:
  /// Throws std::invalid_argument if `side` is empty, is everything, or
  /// mentions directions beyond `rank`.
  Partition(int rank, DirectionSet side);

  int rank() const { return rank_; }
  DirectionSet side1() const { return side1_; }
  DirectionSet side2() const { return side1_.complement(rank_); }
  DirectionSet side(int i) const { return i == 1 ? side1() : side2(); }

  bool is_thick() const;
  bool is_ideal() const { return side1_.separates_some_pair(rank_); }

  /// The petal index when one side is a single direction.
  std::optional<int> petal_index() const;

  friend bool operator==(Partition const &, Partition const &) = default;
  friend std::strong_ordering operator<=>(Partition const &a, Partition const &b);

private:
  int rank_;
  DirectionSet side1_;
};

std::string to_string(Partition const &p);

/// Side list as accepted on the command line: either block may be given.
Partition parse_partition(std::string_view text, int rank);

/// Partition with a singleton block {d}.
Partition petal_partition(int rank, Direction d);

/**
 * A vertex of the nonseparating splitting graph restricted to splittings
 * disjoint from the base rose.
 *
 * The two singleton partitions {x_i^+} and {x_i^-} are identified into
 * petal(i); every other partition is its own class. The representative is
 * the lexicographically least partition in the class.
 */
class SplittingClass
{
public:
  explicit SplittingClass(Partition const &p);

  static SplittingClass petal(int rank, int index);

  Partition const &representative() const { return rep_; }
  int rank() const { return rep_.rank(); }
  bool is_petal() const { return petal_.has_value(); }
  std::optional<int> petal_index() const { return petal_; }
  bool is_ideal() const { return rep_.is_ideal(); }

  friend bool operator==(SplittingClass const &a, SplittingClass const &b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(SplittingClass const &a, SplittingClass const &b)
  {
    return a.rep_ <=> b.rep_;
  }

private:
  Partition rep_;
  std::optional<int> petal_;
};

/// "x3" for petals, the side1 list otherwise.
std::string to_string(SplittingClass const &c);

/// k[i][j] = P_{i+1} ∩ Q_{j+1} under canonical orientations.
struct CornerSets
{
  std::array<std::array<DirectionSet, 2>, 2> k{};

  DirectionSet at(int i, int j) const { return k[i - 1][j - 1]; }
  std::array<DirectionSet, 4> flat() const { return {k[0][0], k[0][1], k[1][0], k[1][1]}; }
};

/// A choice of sides (p_a, q_b) with p_a ∩ q_b = ∅.
struct Alignment
{
  DirectionSet p_side;
  DirectionSet q_side;
};

/// Thrown when a predicate defined only for ideal edges receives another
/// partition.
class NotIdealError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

bool is_thick(Partition const &p);
bool is_ideal(Partition const &p);

CornerSets corner_sets(Partition const &p, Partition const &q);
bool crosses(Partition const &p, Partition const &q);
inline bool compatible(Partition const &p, Partition const &q) { return !crosses(p, q); }

/// Every valid disjoint alignment, in lexicographic order of (p_side, q_side).
std::vector<Alignment> all_alignments(Partition const &p, Partition const &q);

/// The lexicographically least disjoint alignment; empty when p and q cross.
std::optional<Alignment> aligned_sides(Partition const &p, Partition const &q);

/// Compatible, and the aligned disjoint sides together separate some pair.
/// Throws NotIdealError unless both arguments are ideal.
bool rose_compatible(Partition const &p, Partition const &q);

/// Compatible but not rose compatible (common refinement is a two-edge loop).
bool circle_compatible(Partition const &p, Partition const &q);

/// Crossing pair whose corner sets are all ideal and pairwise rose compatible.
/// Throws NotIdealError unless both arguments are ideal.
bool is_cagey(Partition const &p, Partition const &q);

bool crosses(SplittingClass const &a, SplittingClass const &b);
bool rose_compatible(SplittingClass const &a, SplittingClass const &b);
bool is_cagey(SplittingClass const &a, SplittingClass const &b);

void check_rank_guard(int rank, int ceiling = kDefaultRankCeiling);

/// All ideal partitions of the given rank, sorted by canonical encoding.
std::vector<Partition> enumerate_ideal_edges(int rank, bool thick_only = false,
                                             int ceiling = kDefaultRankCeiling);

/// Splitting classes of the ideal partitions, sorted by representative.
std::vector<SplittingClass> enumerate_splitting_classes(int rank, int ceiling = kDefaultRankCeiling);

std::size_t count_splitting_classes(int rank, int ceiling = kDefaultRankCeiling);

/**
 * A symmetry of the rose: petal i goes to petal perm[i-1], with its two
 * directions exchanged when flip[i-1] is set.
 */
struct SignedPermutation
{
  std::vector<int> perm;
  std::vector<bool> flip;

  Direction apply(Direction d) const;
  DirectionSet apply(DirectionSet s) const;
  Partition apply(Partition const &p) const;

  /// All 2^N * N! signed permutations of rank N.
  static std::vector<SignedPermutation> all(int rank);
};

} // namespace fsplit
