#include "fsplit/direction.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace fsplit
{

Direction parse_direction(std::string_view text)
{
  auto bad = [&] { return std::invalid_argument("malformed direction '" + std::string(text) + "'"); };

  if (text.size() < 3 || text.front() != 'x')
    throw bad();

  char const s = text.back();
  if (s != '+' && s != '-')
    throw bad();

  std::string_view digits = text.substr(1, text.size() - 2);
  int index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || index < 1 || index > kMaxStorableRank)
    throw bad();

  return Direction{index, s == '+' ? Sign::plus : Sign::minus};
}

std::string to_string(Direction d)
{
  return "x" + std::to_string(d.index) + (d.sign == Sign::plus ? "+" : "-");
}

DirectionSet DirectionSet::of(std::initializer_list<Direction> dirs)
{
  DirectionSet s;
  for (Direction d : dirs)
    s = s.with(d);
  return s;
}

int DirectionSet::size() const { return std::popcount(bits_); }

bool DirectionSet::separates_some_pair(int rank) const
{
  // even bits are x_i^+, odd bits x_i^-; a pair is split when exactly one is set
  constexpr std::uint32_t plus_mask = 0x55555555u;
  std::uint32_t const plus = bits_ & plus_mask;
  std::uint32_t const minus = (bits_ >> 1) & plus_mask;
  return ((plus ^ minus) & all(rank).bits()) != 0;
}

std::vector<Direction> DirectionSet::directions() const
{
  std::vector<Direction> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1)
    out.push_back(Direction::from_code(std::countr_zero(b)));
  return out;
}

bool lex_less(DirectionSet a, DirectionSet b)
{
  std::uint32_t x = a.bits();
  std::uint32_t y = b.bits();
  while (x != 0 && y != 0) {
    int const lx = std::countr_zero(x);
    int const ly = std::countr_zero(y);
    if (lx != ly)
      return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

std::string to_string(DirectionSet s)
{
  std::string out;
  for (Direction d : s.directions()) {
    if (!out.empty())
      out += ',';
    out += to_string(d);
  }
  return out;
}

DirectionSet parse_direction_set(std::string_view text, int rank)
{
  DirectionSet s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);

    Direction const d = parse_direction(token);
    if (d.index > rank)
      throw std::invalid_argument("direction " + std::string(token) + " exceeds rank " + std::to_string(rank));
    if (s.contains(d))
      throw std::invalid_argument("direction " + std::string(token) + " listed twice");
    s = s.with(d);
    pos = comma + 1;
  }
  return s;
}

} // namespace fsplit
