#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsplit/word.hpp"

namespace fsplit
{

enum class Side { left, right };

/**
 * An automorphism of F_N given by the images of the basis, together with
 * the images of its inverse. Construction checks that both composites fix
 * every generator.
 */
class FreeAutomorphism
{
public:
  FreeAutomorphism(std::vector<Word> images, std::vector<Word> inverse_images);

  static FreeAutomorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  std::vector<Word> const &images() const { return images_; }

  Word apply(Word const &w) const;
  FreeAutomorphism inverse() const { return FreeAutomorphism(inverse_images_, images_); }

  /// (a.then(b))(w) = b(a(w)).
  FreeAutomorphism then(FreeAutomorphism const &b) const;

  friend bool operator==(FreeAutomorphism const &, FreeAutomorphism const &) = default;

private:
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

/// x_i -> x_i x_j (right) or x_j x_i (left); other generators fixed.
FreeAutomorphism nielsen(int rank, int i, int j, Side side = Side::right);

/**
 * Twist about the one-edge splitting with stable letter x_stable: identity
 * on the complementary corank-one factor, x_stable -> z x_stable (left) or
 * x_stable z (right). Throws if z involves the stable letter.
 */
FreeAutomorphism twist(int stable, Word const &z, Side side);

/// x_i -> x_{perm[i-1]}^{±1}, inverted when invert[i-1] is set.
FreeAutomorphism permutation_automorphism(std::vector<int> const &perm, std::vector<bool> const &invert);

/**
 * Whitehead automorphism (A, a): a is a letter, A a set of letters
 * containing a but not a^{-1}, encoded as a bitmask over letter codes.
 * Each generator x (x ≠ a^{±1}) maps to a^{-[x^{-1} in A]} x a^{[x in A]}.
 */
struct WhiteheadMove
{
  int rank = 0;
  int multiplier = 1;       ///< the letter a
  std::uint32_t subset = 0; ///< letters of A, by letter_code

  bool contains(int letter) const { return (subset >> letter_code(letter)) & 1u; }
  FreeAutomorphism automorphism() const;
  WhiteheadMove inverse() const;
  std::string to_string() const;

  friend auto operator<=>(WhiteheadMove const &, WhiteheadMove const &) = default;
};

/**
 * Every Whitehead move of the given rank that is neither the identity
 * (A = {a}) nor an inner automorphism (A = all letters but a^{-1}), in
 * lexicographic order of (letter code of a, subset).
 */
std::vector<WhiteheadMove> const &whitehead_moves(int rank);

} // namespace fsplit
