#pragma once

#include <vector>

#include "fsplit/automorphism.hpp"
#include "fsplit/word.hpp"

namespace fsplit
{

/**
 * Whitehead graph of a cyclic word: vertices are the 2N signed letters,
 * and every cyclic adjacency u·v contributes one edge {u, v^{-1}}.
 * Vertices are indexed by letter_code.
 */
class WhiteheadGraph
{
public:
  explicit WhiteheadGraph(int rank);

  int rank() const { return rank_; }
  int vertex_count() const { return 2 * rank_; }

  void add_edge(int letter_u, int letter_v);
  int multiplicity(int letter_u, int letter_v) const;
  int total_multiplicity() const;
  int degree(int letter) const;

  /// Connected on all 2N vertices with no vertex whose removal disconnects.
  bool connected_without_cut_vertex() const;

private:
  int rank_;
  std::vector<int> mult_; // (2N)^2, symmetric

  bool connected_avoiding(int skipped_code) const;
};

/// Throws std::invalid_argument for the trivial word.
WhiteheadGraph whitehead_graph(Word const &w);

bool connected_no_cutvertex(WhiteheadGraph const &g);

struct Minimization
{
  Word word;                       ///< cyclically reduced, Whitehead-minimal
  std::vector<WhiteheadMove> path; ///< moves applied, in order
};

/**
 * Cyclically reduce, then repeatedly apply the first Whitehead move (in
 * whitehead_moves order) that strictly shortens the cyclic word.
 */
Minimization whitehead_minimize(Word const &w);

/**
 * Whether w lies in a proper free factor of F_N. After minimization, w is
 * simple iff its Whitehead graph is disconnected or has a cut vertex.
 * Throws std::invalid_argument for the trivial word.
 */
bool is_simple(Word const &w);

/**
 * All nontrivial reduced words of length <= max_len in A * <t w t^{-1}>,
 * where A = <x_1..x_a> and t = x_{a+1}, sorted shortlex. The ambient rank is
 * a_rank + 1 and w must be a word in A.
 */
std::vector<Word> enumerate_factor_product(int a_rank, Word const &w, int max_len);

/// The cyclic reduction of g avoids every generator past x_{a_rank}.
bool conjugate_into_factor(Word const &g, int a_rank);

} // namespace fsplit
