#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fsplit
{

struct GogVertex
{
  int id = 0;
  int free_rank = 0;

  friend bool operator==(GogVertex const &, GogVertex const &) = default;
};

struct GogEdge
{
  int id = 0;
  int u = 0;
  int v = 0;
  std::string label;

  bool is_loop() const { return u == v; }

  friend bool operator==(GogEdge const &, GogEdge const &) = default;
};

/**
 * Quotient graph of a free splitting, with the free rank of each vertex
 * group. Edge groups are trivial, so the splitting has rank
 * b_1(graph) + sum of vertex ranks.
 */
class GraphOfGroups
{
public:
  int add_vertex(int free_rank = 0);
  int add_edge(int u, int v, std::string label = {});

  std::vector<GogVertex> const &vertices() const { return vertices_; }
  std::vector<GogEdge> const &edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Number of half-edges at v; a loop counts twice.
  int valence(int v) const;
  int loop_count(int v) const;

  bool connected() const;
  /// Connectivity after deleting the listed edges (by position in edges()).
  bool connected_without(std::vector<int> const &removed) const;

  int first_betti_number() const;
  /// b_1 + sum of vertex ranks; equals N for a splitting of F_N.
  int splitting_rank() const;

  friend bool operator==(GraphOfGroups const &, GraphOfGroups const &) = default;

private:
  std::vector<GogVertex> vertices_;
  std::vector<GogEdge> edges_;
};

/**
 * Collapse every edge for which keep(edge) is false. Collapsing a loop adds
 * one to its vertex rank; collapsing any other edge merges its endpoints and
 * adds their ranks. Edges are collapsed in order of position. Surviving
 * vertices are renumbered by their least original id.
 */
GraphOfGroups collapse_edges(GraphOfGroups const &g, std::function<bool(GogEdge const &)> const &keep);

/// Whether the one-edge collapses to edges a and b are rose compatible:
/// collapsing all other edges leaves one vertex with two loops.
bool edges_rose_compatible(GraphOfGroups const &g, int a, int b);

struct ShapeReport
{
  std::vector<int> valence_profile;   ///< descending
  bool has_separating_edge = false;
  bool has_separating_edge_pair = false; ///< two edges, neither separating alone, whose union separates
  std::optional<int> rose_petals;     ///< set when there is a single vertex
  std::optional<int> cage_edges;      ///< set when two vertices and no loops
  bool theta_with_loop = false;
  std::vector<int> vertex_ranks;

  bool is_rose(int k) const { return rose_petals == k; }
  bool is_cage(int k) const { return cage_edges == k; }
  bool all_ranks_zero() const;
};

ShapeReport classify_shape(GraphOfGroups const &g);

/**
 * Isomorphism invariant of the underlying multigraph (optionally with
 * vertex ranks). Equal strings iff isomorphic. Throws std::length_error
 * when the graph is too symmetric for the brute-force search.
 */
std::string canonical_form(GraphOfGroups const &g, bool with_ranks = false);

std::string to_dot(GraphOfGroups const &g, std::string const &name = "G");

} // namespace fsplit
