#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "fsplit/blowup.hpp"
#include "fsplit/splitting_graph.hpp"
#include "fsplit/word.hpp"

namespace fsplit
{

struct VerificationReport
{
  std::string lemma;
  int rank = 0;
  long long cases = 0;
  std::vector<std::string> failures;
  std::map<std::string, std::string> parameters;
  std::map<std::string, long long> census;
  std::vector<std::string> notes;
  double elapsed_seconds = 0; ///< not part of the JSON encoding

  bool passed() const { return failures.empty(); }
  void check(bool ok, std::string const &witness)
  {
    ++cases;
    if (!ok)
      failures.push_back(witness);
  }
};

struct VerifyOptions
{
  int workers = 1;
};

/**
 * fn(i) for i in [0, n), sharded over `workers` threads; results are
 * returned in index order regardless of scheduling.
 */
template <class Fn>
auto parallel_map(std::size_t n, int workers, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
  std::vector<decltype(fn(std::size_t{}))> out(n);
  int const k = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  if (k <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < k; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += k)
        out[i] = fn(i);
    });
  for (auto &t : pool)
    t.join();
  return out;
}

// Rigid blow-up -------------------------------------------------------------

struct RigidFamily
{
  int rank = 0;
  std::vector<SplittingClass> petals;  ///< S
  std::vector<SplittingClass> sigma;   ///< P^1..P^N, Q^2..Q^{N-2}
  std::vector<std::string> sigma_names;
  Partition tau;
};

/// P^k_1 = {x_k^-, x_{k+1}^+} with indices mod N.
Partition rigid_p(int rank, int k);
/// Q^k_1 = {x_1^-, x_2^±, ..., x_k^±, x_{k+1}^+}, 2 <= k <= N-2.
Partition rigid_q(int rank, int k);
/// {all x_i^-} | {all x_i^+}.
Partition rigid_tau(int rank);
RigidFamily rigid_blowup_family(int rank);

VerificationReport verify_rigid_blowup(RigidFamily const &family);
VerificationReport verify_rigid_blowup(int rank);

// Three-rose ----------------------------------------------------------------

struct ThreeRose
{
  int rank = 0;
  std::array<SplittingClass, 3> sigma;
  std::array<Partition, 2> tau;
};

ThreeRose three_rose_configuration(int rank);
VerificationReport verify_three_rose(ThreeRose const &config);
VerificationReport verify_three_rose(int rank);

// Exhaustive scans ----------------------------------------------------------

/// Every 4-clique of g blows up to a 4-edge cage or a theta with a loop,
/// all vertex groups trivial.
VerificationReport verify_clique_rank3(SplittingGraph const &g);
VerificationReport verify_clique_rank3();

using BoundaryFn = std::function<BoundaryType(Partition const &, Partition const &)>;

VerificationReport verify_boundary_types(int rank, VerifyOptions const &opts = {},
                                         BoundaryFn const &boundary = boundary_splitting);

using PairPredicate = std::function<bool(SplittingClass const &, SplittingClass const &)>;

/// is_cagey (or the supplied predicate) against cagey_by_cliques on every
/// pair of distinct classes.
VerificationReport verify_cagey_equivalence(int rank = 3, VerifyOptions const &opts = {},
                                            PairPredicate const &direct = nullptr);

using SimplePredicate = std::function<bool(Word const &)>;

/**
 * Every g in A * <t w t^{-1}> of length <= max_len that is simple in
 * F_{a_rank+1} is conjugate into A or conjugate to (t w t^{-1})^{±1}.
 * Throws std::invalid_argument when w is simple in A.
 */
VerificationReport verify_whitehead_factor(int a_rank, Word const &w, int max_len, VerifyOptions const &opts = {},
                                           SimplePredicate const &simple = nullptr);

/// Lemma ids accepted by run_verifier.
std::vector<std::string> const &verifier_ids();

/// Runs a verifier by id. rank <= 0 selects the default ranks; one report
/// per rank.
std::vector<VerificationReport> run_verifier(std::string const &id, int rank, VerifyOptions const &opts = {});

/// Every verifier at its default ranks, in verifier_ids() order.
std::vector<VerificationReport> run_all_verifiers(VerifyOptions const &opts = {});

} // namespace fsplit
