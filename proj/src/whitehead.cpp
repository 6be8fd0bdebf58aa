#include "fsplit/whitehead.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <set>
#include <stdexcept>

namespace fsplit
{

namespace
{

std::vector<FreeAutomorphism> const &move_automorphisms(int rank)
{
  constexpr int max_rank = 15;
  static std::array<std::vector<FreeAutomorphism>, max_rank + 1> cache;
  static std::array<std::once_flag, max_rank + 1> flags;
  auto const &moves = whitehead_moves(rank);
  std::call_once(flags[rank], [&] {
    for (auto const &m : moves)
      cache[rank].push_back(m.automorphism());
  });
  return cache[rank];
}

} // namespace

WhiteheadGraph::WhiteheadGraph(int rank) : rank_(rank), mult_(4 * rank * rank, 0)
{
  if (rank < 1)
    throw std::invalid_argument("whitehead graph rank must be positive");
}

void WhiteheadGraph::add_edge(int letter_u, int letter_v)
{
  int const n = vertex_count();
  int const a = letter_code(letter_u);
  int const b = letter_code(letter_v);
  mult_[a * n + b] += 1;
  if (a != b)
    mult_[b * n + a] += 1;
}

int WhiteheadGraph::multiplicity(int letter_u, int letter_v) const
{
  return mult_[letter_code(letter_u) * vertex_count() + letter_code(letter_v)];
}

int WhiteheadGraph::total_multiplicity() const
{
  int const n = vertex_count();
  int total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      total += mult_[a * n + b];
  return total;
}

int WhiteheadGraph::degree(int letter) const
{
  int const n = vertex_count();
  int const a = letter_code(letter);
  int d = 0;
  for (int b = 0; b < n; ++b)
    d += mult_[a * n + b];
  return d;
}

bool WhiteheadGraph::connected_avoiding(int skipped) const
{
  int const n = vertex_count();
  int start = skipped == 0 ? 1 : 0;
  if (start >= n)
    return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int const a = stack.back();
    stack.pop_back();
    for (int b = 0; b < n; ++b) {
      if (b == skipped || seen[b] || mult_[a * n + b] == 0)
        continue;
      seen[b] = true;
      ++reached;
      stack.push_back(b);
    }
  }
  return reached == n - (skipped >= 0 ? 1 : 0);
}

bool WhiteheadGraph::connected_without_cut_vertex() const
{
  if (!connected_avoiding(-1))
    return false;
  for (int c = 0; c < vertex_count(); ++c)
    if (!connected_avoiding(c))
      return false;
  return true;
}

WhiteheadGraph whitehead_graph(Word const &w)
{
  Word const c = cyclic_reduce(w);
  if (c.empty())
    throw std::invalid_argument("whitehead graph of the trivial word");
  WhiteheadGraph g(c.rank());
  auto const &l = c.letters();
  for (std::size_t i = 0; i < l.size(); ++i)
    g.add_edge(l[i], -l[(i + 1) % l.size()]);
  return g;
}

bool connected_no_cutvertex(WhiteheadGraph const &g) { return g.connected_without_cut_vertex(); }

Minimization whitehead_minimize(Word const &w)
{
  Minimization out{cyclic_reduce(w), {}};
  if (out.word.empty())
    return out;

  auto const &moves = whitehead_moves(w.rank());
  auto const &autos = move_automorphisms(w.rank());
  for (bool improved = true; improved;) {
    improved = false;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      Word img = cyclic_reduce(autos[i].apply(out.word));
      if (img.length() < out.word.length()) {
        out.word = std::move(img);
        out.path.push_back(moves[i]);
        improved = true;
        break;
      }
    }
  }
  return out;
}

bool is_simple(Word const &w)
{
  if (cyclic_reduce(w).empty())
    throw std::invalid_argument("is_simple: trivial word");
  Minimization const m = whitehead_minimize(w);
  return !whitehead_graph(m.word).connected_without_cut_vertex();
}

std::vector<Word> enumerate_factor_product(int a_rank, Word const &w, int max_len)
{
  if (a_rank < 1)
    throw std::invalid_argument("factor rank must be positive");
  int const ambient = a_rank + 1;
  if (w.rank() != a_rank && w.rank() != ambient)
    throw std::invalid_argument("w must be a word of rank " + std::to_string(a_rank) + " or " +
                                std::to_string(ambient));
  if (w.uses_generator(ambient))
    throw std::invalid_argument("w must not involve the stable letter");

  Word const t = Word::generator(ambient, ambient);
  Word const c = t * Word(ambient, w.letters()) * t.inverse();

  std::vector<Word> gens;
  for (int i = 1; i <= a_rank; ++i) {
    gens.push_back(Word::generator(ambient, i));
    gens.push_back(Word::generator(ambient, i).inverse());
  }
  if (!c.empty()) {
    gens.push_back(c);
    gens.push_back(c.inverse());
  }

  std::set<Word> seen{Word(ambient)};
  std::vector<Word> frontier{Word(ambient)};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (Word const &g : frontier)
      for (Word const &s : gens) {
        Word h = g * s;
        if (h.length() <= max_len && seen.insert(h).second)
          next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }

  seen.erase(Word(ambient));
  return {seen.begin(), seen.end()};
}

bool conjugate_into_factor(Word const &g, int a_rank)
{
  Word const c = cyclic_reduce(g);
  return std::all_of(c.letters().begin(), c.letters().end(), [a_rank](int l) { return std::abs(l) <= a_rank; });
}

} // namespace fsplit
