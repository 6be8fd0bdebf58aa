#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsplit/graph_of_groups.hpp"
#include "fsplit/partition.hpp"

namespace fsplit
{

class IncompatibleFamilyError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Graph of groups of the splitting given by a pairwise compatible family of
 * splitting classes of the base rose.
 *
 * The thick members are blown up into a tree on the 2N directions, every
 * petal x_i is attached between the vertices holding x_i^+ and x_i^-, and
 * petals whose class is not in the family are then collapsed. The result
 * does not depend on the order of `family`; duplicates are ignored.
 *
 * Throws IncompatibleFamilyError when two members cross and
 * std::invalid_argument on an empty family or mixed ranks.
 */
GraphOfGroups blow_up(std::vector<SplittingClass> family, int rank);

/**
 * The six quotient graphs a boundary splitting of two crossing
 * nonseparating spheres can have. In every case a vertex of valence four
 * with trivial group (the neighbourhood of the two spheres) carries the
 * four corner half-edges; the names describe what hangs off it.
 */
enum class BoundaryShape
{
  cage,              ///< two vertices joined by four edges
  two_bigons,        ///< two double edges to distinct vertices
  triple_bridge,     ///< a triple edge and a separating edge
  bigon_two_bridges, ///< a double edge and two separating edges
  loop_bigon,        ///< a loop and a double edge (three distinct spheres)
  loop_two_bridges,  ///< a loop and two separating edges (three distinct spheres)
  unclassified,
};

std::string_view to_string(BoundaryShape s);
BoundaryShape parse_boundary_shape(std::string_view name);

/// The six shapes, in declaration order.
std::vector<BoundaryShape> const &boundary_shapes();

/// Rank-free template graph of a shape (the central vertex is vertex 0).
GraphOfGroups boundary_template(BoundaryShape s);

/// Matches the underlying multigraph of g against the six templates.
BoundaryShape match_boundary_shape(GraphOfGroups const &g);

struct BoundaryType
{
  BoundaryShape tag = BoundaryShape::unclassified;
  GraphOfGroups graph;
  std::vector<SplittingClass> spheres; ///< distinct corner classes
  CornerSets corners;

  int distinct_edges() const { return static_cast<int>(spheres.size()); }
};

/// Boundary splitting of two crossing ideal edges, built from their corner
/// sets. Throws std::invalid_argument if p and q do not cross and
/// NotIdealError if either is not ideal.
BoundaryType boundary_splitting(Partition const &p, Partition const &q);

} // namespace fsplit
