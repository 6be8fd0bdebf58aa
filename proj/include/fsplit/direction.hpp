#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fsplit
{

/// Largest rank a direction set can hold (two bits per petal in 32 bits).
inline constexpr int kMaxStorableRank = 15;

enum class Sign : std::uint8_t { plus, minus };

/**
 * A half-edge germ x_i^+ or x_i^- at the vertex of the N-petal rose.
 *
 * Directions are totally ordered by (index, sign) with + before -, which is
 * also the order of their integer codes: code(x_i^+) = 2(i-1),
 * code(x_i^-) = 2(i-1)+1.
 */
struct Direction
{
  int index = 1;
  Sign sign = Sign::plus;

  constexpr int code() const { return 2 * (index - 1) + (sign == Sign::minus ? 1 : 0); }

  static constexpr Direction from_code(int c)
  {
    return Direction{c / 2 + 1, (c % 2) ? Sign::minus : Sign::plus};
  }

  constexpr Direction opposite() const
  {
    return Direction{index, sign == Sign::plus ? Sign::minus : Sign::plus};
  }

  friend constexpr bool operator==(Direction, Direction) = default;
  friend constexpr auto operator<=>(Direction a, Direction b) { return a.code() <=> b.code(); }
};

/// Parses "x3+" / "x3-"; throws std::invalid_argument on malformed input.
Direction parse_direction(std::string_view text);
std::string to_string(Direction d);

/// A subset of the 2N directions, stored as a bitmask over direction codes.
class DirectionSet
{
public:
  constexpr DirectionSet() = default;
  constexpr explicit DirectionSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr DirectionSet all(int rank)
  {
    return DirectionSet(rank >= 16 ? ~0u : ((1u << (2 * rank)) - 1u));
  }
  static DirectionSet of(std::initializer_list<Direction> dirs);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;

  constexpr bool contains(Direction d) const { return (bits_ >> d.code()) & 1u; }
  constexpr DirectionSet with(Direction d) const { return DirectionSet(bits_ | (1u << d.code())); }

  constexpr DirectionSet complement(int rank) const { return DirectionSet(all(rank).bits_ & ~bits_); }
  constexpr bool intersects(DirectionSet o) const { return (bits_ & o.bits_) != 0; }

  /// True iff the set holds exactly one of x_i^+, x_i^- for some i <= rank.
  bool separates_some_pair(int rank) const;

  std::vector<Direction> directions() const;

  friend constexpr DirectionSet operator&(DirectionSet a, DirectionSet b) { return DirectionSet(a.bits_ & b.bits_); }
  friend constexpr DirectionSet operator|(DirectionSet a, DirectionSet b) { return DirectionSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(DirectionSet, DirectionSet) = default;

private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the sorted direction-code sequences of two sets.
bool lex_less(DirectionSet a, DirectionSet b);

/// "x1-,x2+" (sorted, comma separated).
std::string to_string(DirectionSet s);

/// Inverse of to_string; tolerates whitespace around tokens.
DirectionSet parse_direction_set(std::string_view text, int rank);

} // namespace fsplit
