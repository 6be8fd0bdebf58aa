#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fsplit/partition.hpp"

namespace fsplit
{

enum class GraphMode { ens, ns };
enum class EdgeKind : std::uint8_t { none, rose, circle };

std::string_view to_string(GraphMode m);
GraphMode parse_graph_mode(std::string_view text);

/**
 * Induced subgraph of the nonseparating splitting graph on the splitting
 * classes of the base rose. In ens mode only rose edges are present; in ns
 * mode circle edges are added.
 */
class SplittingGraph
{
public:
  SplittingGraph(int rank, GraphMode mode, std::vector<SplittingClass> vertices);

  int rank() const { return rank_; }
  GraphMode mode() const { return mode_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  std::vector<SplittingClass> const &vertices() const { return vertices_; }
  SplittingClass const &vertex(int i) const { return vertices_[i]; }

  /// Position of c in vertices(), if present.
  std::optional<int> index_of(SplittingClass const &c) const;

  EdgeKind kind(int i, int j) const { return kind_[i * size() + j]; }
  bool adjacent(int i, int j) const;
  std::vector<int> const &neighbours(int i) const { return adj_[i]; }
  int edge_count() const;

  bool is_clique(std::vector<int> const &members) const;

private:
  int rank_;
  GraphMode mode_;
  std::vector<SplittingClass> vertices_;
  std::vector<EdgeKind> kind_;
  std::vector<std::vector<int>> adj_;
};

/// All splitting classes of the given rank, joined by rose (and in ns mode
/// circle) compatibility.
SplittingGraph build_star_graph(int rank, GraphMode mode, int ceiling = kDefaultRankCeiling);

/// Every clique of exactly `size` vertices, each sorted ascending, listed in
/// lexicographic order.
std::vector<std::vector<int>> enumerate_cliques(SplittingGraph const &g, int size);

/// Same, restricted to vertices with allowed[v] set.
std::vector<std::vector<int>> enumerate_cliques(SplittingGraph const &g, int size, std::vector<bool> const &allowed,
                                                std::size_t limit = 0);

/// Maximal cliques (Bron–Kerbosch with pivoting), sorted as above.
std::vector<std::vector<int>> maximal_cliques(SplittingGraph const &g);

int clique_number(SplittingGraph const &g);

/**
 * A clique Σ of 3N-4 vertices, avoiding s and t, such that Σ+s and Σ+t are
 * both cliques of the ens graph; the lexicographically least one, or empty
 * if none exists in g. Throws std::invalid_argument if s == t.
 */
std::optional<std::vector<int>> cagey_witness(SplittingGraph const &g, int s, int t);
bool cagey_by_cliques(SplittingGraph const &g, int s, int t);

/// N classes whose blow-up is an N-petal rose with trivial vertex group.
using RoseVertex = std::vector<SplittingClass>;

/// Every rose vertex among the universe classes, sorted.
std::vector<RoseVertex> rose_vertices(int rank);

struct KGraph
{
  int rank = 0;
  std::vector<RoseVertex> roses;
  std::vector<std::pair<int, int>> edges; ///< i < j, sorted
  std::vector<int> degrees() const;
};

/**
 * Roses joined when they share N-1 classes and the N+1 classes of their
 * union are pairwise rose compatible. Supported for ranks 3 and 4.
 */
KGraph k_graph_local(int rank);

} // namespace fsplit
