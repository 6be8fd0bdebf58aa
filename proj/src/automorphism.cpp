#include "fsplit/automorphism.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace fsplit
{

namespace
{

Word substitute(std::vector<Word> const &images, Word const &w)
{
  std::vector<int> out;
  for (int l : w.letters()) {
    Word const &img = images.at(std::abs(l) - 1);
    if (l > 0) {
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
        out.push_back(-*it);
    }
  }
  return Word(w.rank(), std::move(out));
}

std::vector<Word> generators(int rank)
{
  std::vector<Word> out;
  for (int i = 1; i <= rank; ++i)
    out.push_back(Word::generator(rank, i));
  return out;
}

} // namespace

FreeAutomorphism::FreeAutomorphism(std::vector<Word> images, std::vector<Word> inverse_images)
  : images_(std::move(images)), inverse_images_(std::move(inverse_images))
{
  int const n = rank();
  if (n < 1 || static_cast<int>(inverse_images_.size()) != n)
    throw std::invalid_argument("automorphism image lists have inconsistent sizes");
  for (int i = 1; i <= n; ++i) {
    Word const x = Word::generator(n, i);
    if (images_[i - 1].rank() != n || inverse_images_[i - 1].rank() != n)
      throw std::invalid_argument("automorphism images of the wrong rank");
    if (substitute(images_, inverse_images_[i - 1]) != x || substitute(inverse_images_, images_[i - 1]) != x)
      throw std::invalid_argument("stored inverse does not invert the automorphism at x" + std::to_string(i));
  }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) { return FreeAutomorphism(generators(rank), generators(rank)); }

Word FreeAutomorphism::apply(Word const &w) const
{
  if (w.rank() != rank())
    throw std::invalid_argument("automorphism applied to a word of another rank");
  return substitute(images_, w);
}

FreeAutomorphism FreeAutomorphism::then(FreeAutomorphism const &b) const
{
  if (b.rank() != rank())
    throw std::invalid_argument("composition across ranks");
  std::vector<Word> img;
  std::vector<Word> inv;
  for (int i = 0; i < rank(); ++i) {
    img.push_back(b.apply(images_[i]));
    inv.push_back(substitute(inverse_images_, b.inverse_images_[i]));
  }
  return FreeAutomorphism(std::move(img), std::move(inv));
}

FreeAutomorphism nielsen(int rank, int i, int j, Side side)
{
  if (i == j)
    throw std::invalid_argument("nielsen: i and j must differ");
  if (i < 1 || j < 1 || i > rank || j > rank)
    throw std::invalid_argument("nielsen: generator index out of range");

  auto img = generators(rank);
  auto inv = generators(rank);
  Word const xi = Word::generator(rank, i);
  Word const xj = Word::generator(rank, j);
  if (side == Side::right) {
    img[i - 1] = xi * xj;
    inv[i - 1] = xi * xj.inverse();
  } else {
    img[i - 1] = xj * xi;
    inv[i - 1] = xj.inverse() * xi;
  }
  return FreeAutomorphism(std::move(img), std::move(inv));
}

FreeAutomorphism twist(int stable, Word const &z, Side side)
{
  int const rank = z.rank();
  if (stable < 1 || stable > rank)
    throw std::invalid_argument("twist: stable letter out of range");
  if (z.uses_generator(stable))
    throw std::invalid_argument("twist: z must lie in the complementary factor");

  auto img = generators(rank);
  auto inv = generators(rank);
  Word const t = Word::generator(rank, stable);
  if (side == Side::left) {
    img[stable - 1] = z * t;
    inv[stable - 1] = z.inverse() * t;
  } else {
    img[stable - 1] = t * z;
    inv[stable - 1] = t * z.inverse();
  }
  return FreeAutomorphism(std::move(img), std::move(inv));
}

FreeAutomorphism permutation_automorphism(std::vector<int> const &perm, std::vector<bool> const &invert)
{
  int const rank = static_cast<int>(perm.size());
  if (static_cast<int>(invert.size()) != rank)
    throw std::invalid_argument("permutation and inversion lists differ in size");
  std::vector<Word> img(rank, Word(rank));
  std::vector<Word> inv(rank, Word(rank));
  for (int i = 1; i <= rank; ++i) {
    int const j = perm[i - 1];
    if (j < 1 || j > rank)
      throw std::invalid_argument("permutation entry out of range");
    int const sign = invert[i - 1] ? -1 : 1;
    img[i - 1] = Word(rank, {sign * j});
    inv[j - 1] = Word(rank, {sign * i});
  }
  return FreeAutomorphism(std::move(img), std::move(inv));
}

FreeAutomorphism WhiteheadMove::automorphism() const
{
  std::vector<Word> img;
  Word const a(rank, {multiplier});
  for (int i = 1; i <= rank; ++i) {
    Word x = Word::generator(rank, i);
    if (i != std::abs(multiplier)) {
      if (contains(-i))
        x = a.inverse() * x;
      if (contains(i))
        x = x * a;
    }
    img.push_back(std::move(x));
  }

  WhiteheadMove const inv = inverse();
  std::vector<Word> inv_img;
  Word const b(rank, {inv.multiplier});
  for (int i = 1; i <= rank; ++i) {
    Word x = Word::generator(rank, i);
    if (i != std::abs(multiplier)) {
      if (inv.contains(-i))
        x = b.inverse() * x;
      if (inv.contains(i))
        x = x * b;
    }
    inv_img.push_back(std::move(x));
  }
  return FreeAutomorphism(std::move(img), std::move(inv_img));
}

WhiteheadMove WhiteheadMove::inverse() const
{
  std::uint32_t s = subset;
  s &= ~(1u << letter_code(multiplier));
  s |= 1u << letter_code(-multiplier);
  return WhiteheadMove{rank, -multiplier, s};
}

std::string WhiteheadMove::to_string() const
{
  std::string out = "(";
  bool first = true;
  for (int c = 0; c < 2 * rank; ++c) {
    if (!((subset >> c) & 1u))
      continue;
    if (!first)
      out += ",";
    first = false;
    int const l = letter_from_code(c);
    out += (l > 0 ? "x" : "X") + std::to_string(std::abs(l));
  }
  int const a = multiplier;
  out += std::string(";") + (a > 0 ? "x" : "X") + std::to_string(std::abs(a)) + ")";
  return out;
}

std::vector<WhiteheadMove> const &whitehead_moves(int rank)
{
  constexpr int max_rank = 15;
  if (rank < 1 || rank > max_rank)
    throw std::invalid_argument("whitehead_moves: rank out of range");

  static std::array<std::vector<WhiteheadMove>, max_rank + 1> cache;
  static std::array<std::once_flag, max_rank + 1> flags;
  std::call_once(flags[rank], [rank] {
    auto &moves = cache[rank];
    for (int ac = 0; ac < 2 * rank; ++ac) {
      int const a = letter_from_code(ac);
      std::uint32_t const a_bit = 1u << ac;
      std::uint32_t const pair_bits = a_bit | (1u << letter_code(-a));
      std::uint32_t const others = ((1u << (2 * rank)) - 1u) & ~pair_bits;
      // iterate subsets of `others`
      for (std::uint32_t s = 0;; s = (s - others) & others) {
        if (s != 0 && s != others)
          moves.push_back(WhiteheadMove{rank, a, s | a_bit});
        if (s == others)
          break;
      }
    }
    std::sort(moves.begin(), moves.end(), [](WhiteheadMove const &x, WhiteheadMove const &y) {
      int const cx = letter_code(x.multiplier);
      int const cy = letter_code(y.multiplier);
      if (cx != cy)
        return cx < cy;
      return x.subset < y.subset;
    });
  });
  return cache[rank];
}

} // namespace fsplit
