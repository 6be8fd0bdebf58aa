#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fsplit
{

/// Letter order used for canonical forms: x1 < X1 < x2 < X2 < ...
constexpr int letter_code(int letter) { return 2 * ((letter < 0 ? -letter : letter) - 1) + (letter < 0 ? 1 : 0); }
constexpr int letter_from_code(int code) { return (code % 2) ? -(code / 2 + 1) : (code / 2 + 1); }

/// Free reduction of a raw letter sequence.
std::vector<int> free_reduce(std::vector<int> const &letters);

/**
 * A freely reduced word in the basis x_1..x_N of F_N. Letters are signed
 * generator indices; -i stands for x_i^{-1}.
 */
class Word
{
public:
  explicit Word(int rank, std::vector<int> letters = {});

  /// Accepts tokens "x<i>" and "X<i>" (inverse), concatenated.
  static Word parse(std::string_view text, int rank);
  static Word generator(int rank, int i) { return Word(rank, {i}); }

  int rank() const { return rank_; }
  std::vector<int> const &letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(int k) const;
  bool uses_generator(int i) const;

  friend Word operator*(Word const &a, Word const &b);
  friend bool operator==(Word const &, Word const &) = default;
  friend std::strong_ordering operator<=>(Word const &a, Word const &b);

private:
  int rank_;
  std::vector<int> letters_;
};

std::string to_string(Word const &w);

Word cyclic_reduce(Word const &w);

/// Commutator a b a^{-1} b^{-1}.
Word commutator(Word const &a, Word const &b);

/// Conjugacy class of a word: its cyclic reduction rotated to the least
/// rotation in letter order.
class CyclicWord
{
public:
  explicit CyclicWord(Word const &w);

  Word const &word() const { return word_; }
  int length() const { return word_.length(); }

  friend bool operator==(CyclicWord const &, CyclicWord const &) = default;
  friend auto operator<=>(CyclicWord const &a, CyclicWord const &b) { return a.word_ <=> b.word_; }

private:
  Word word_;
};

bool is_conjugate(Word const &u, Word const &v);

} // namespace fsplit
