#include "fsplit/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace fsplit
{

std::vector<int> free_reduce(std::vector<int> const &letters)
{
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word::Word(int rank, std::vector<int> letters) : rank_(rank)
{
  if (rank < 1)
    throw std::invalid_argument("word rank must be positive");
  for (int l : letters)
    if (l == 0 || l > rank || l < -rank)
      throw std::invalid_argument("letter " + std::to_string(l) + " outside rank " + std::to_string(rank));
  letters_ = free_reduce(letters);
}

Word Word::parse(std::string_view text, int rank)
{
  std::vector<int> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char const c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'X')
      throw std::invalid_argument("malformed word '" + std::string(text) + "'");
    std::size_t j = i + 1;
    int index = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      index = 10 * index + (text[j] - '0');
      if (index > 1000)
        throw std::invalid_argument("generator index too large in '" + std::string(text) + "'");
      ++j;
    }
    if (j == i + 1 || index < 1 || index > rank)
      throw std::invalid_argument("malformed word '" + std::string(text) + "' for rank " + std::to_string(rank));
    letters.push_back(c == 'x' ? index : -index);
    i = j;
  }
  return Word(rank, std::move(letters));
}

Word Word::inverse() const
{
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int &l : out)
    l = -l;
  return Word(rank_, std::move(out));
}

Word Word::power(int k) const
{
  Word base = k < 0 ? inverse() : *this;
  Word out(rank_);
  for (int i = 0; i < std::abs(k); ++i)
    out = out * base;
  return out;
}

bool Word::uses_generator(int i) const
{
  return std::any_of(letters_.begin(), letters_.end(), [i](int l) { return l == i || l == -i; });
}

Word operator*(Word const &a, Word const &b)
{
  if (a.rank_ != b.rank_)
    throw std::invalid_argument("product of words of different rank");
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(a.rank_, std::move(letters));
}

std::strong_ordering operator<=>(Word const &a, Word const &b)
{
  if (a.rank_ != b.rank_)
    return a.rank_ <=> b.rank_;
  if (a.length() != b.length())
    return a.length() <=> b.length();
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    int const x = letter_code(a.letters_[i]);
    int const y = letter_code(b.letters_[i]);
    if (x != y)
      return x <=> y;
  }
  return std::strong_ordering::equal;
}

std::string to_string(Word const &w)
{
  if (w.empty())
    return "1";
  std::string out;
  for (int l : w.letters())
    out += (l > 0 ? "x" : "X") + std::to_string(std::abs(l));
  return out;
}

Word cyclic_reduce(Word const &w)
{
  auto const &l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.rank(), std::vector<int>(l.begin() + lo, l.begin() + hi));
}

Word commutator(Word const &a, Word const &b) { return a * b * a.inverse() * b.inverse(); }

CyclicWord::CyclicWord(Word const &w) : word_(cyclic_reduce(w))
{
  auto letters = word_.letters();
  if (letters.size() < 2)
    return;
  auto best = letters;
  for (std::size_t r = 1; r < letters.size(); ++r) {
    std::rotate(letters.begin(), letters.begin() + 1, letters.end());
    if (std::lexicographical_compare(letters.begin(), letters.end(), best.begin(), best.end(),
                                     [](int x, int y) { return letter_code(x) < letter_code(y); }))
      best = letters;
  }
  word_ = Word(word_.rank(), std::move(best));
}

bool is_conjugate(Word const &u, Word const &v)
{
  if (u.rank() != v.rank())
    throw std::invalid_argument("conjugacy test across ranks");
  return CyclicWord(u) == CyclicWord(v);
}

} // namespace fsplit
