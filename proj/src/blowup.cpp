#include "fsplit/blowup.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace fsplit
{

namespace
{

/// Tree of thick blow-up edges with directions hanging off its vertices.
class DirectionTree
{
public:
  explicit DirectionTree(int rank) { dirs_.push_back(DirectionSet::all(rank)); }

  void insert(Partition const &p)
  {
    DirectionSet const a = p.side1();
    DirectionSet const b = p.side2();

    int v = 0;
    int came_from = -1;
    for (bool moved = true; moved;) {
      moved = false;
      for (int e : incident(v)) {
        int const other = opposite(e, v);
        if (other == came_from)
          continue;
        DirectionSet const far = far_set(e, v);
        if (far.intersects(a) && far.intersects(b)) {
          came_from = v;
          v = other;
          moved = true;
          break;
        }
      }
    }

    int const w = static_cast<int>(dirs_.size());
    dirs_.push_back(dirs_[v] & a);
    dirs_[v] = dirs_[v] & b;
    for (int e : incident(v)) {
      if ((far_set(e, v).bits() & ~a.bits()) == 0) {
        if (edges_[e].first == v)
          edges_[e].first = w;
        else
          edges_[e].second = w;
      }
    }
    edges_.emplace_back(v, w);
    labels_.push_back(to_string(p));
  }

  int vertex_count() const { return static_cast<int>(dirs_.size()); }
  std::vector<std::pair<int, int>> const &edges() const { return edges_; }
  std::vector<std::string> const &labels() const { return labels_; }

  int vertex_of(Direction d) const
  {
    for (int v = 0; v < vertex_count(); ++v)
      if (dirs_[v].contains(d))
        return v;
    throw std::logic_error("direction missing from blow-up tree");
  }

private:
  std::vector<DirectionSet> dirs_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> labels_;

  std::vector<int> incident(int v) const
  {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
      if (edges_[e].first == v || edges_[e].second == v)
        out.push_back(e);
    return out;
  }

  int opposite(int e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }

  /// Directions in the component of tree - e not containing v.
  DirectionSet far_set(int e, int v) const
  {
    DirectionSet out;
    std::vector<int> stack{opposite(e, v)};
    std::vector<bool> seen(dirs_.size(), false);
    seen[v] = true;
    while (!stack.empty()) {
      int const x = stack.back();
      stack.pop_back();
      if (seen[x])
        continue;
      seen[x] = true;
      out = out | dirs_[x];
      for (int f : incident(x))
        if (f != e)
          stack.push_back(opposite(f, x));
    }
    return out;
  }
};

} // namespace

GraphOfGroups blow_up(std::vector<SplittingClass> family, int rank)
{
  if (family.empty())
    throw std::invalid_argument("blow_up: empty family");
  for (auto const &c : family)
    if (c.rank() != rank)
      throw std::invalid_argument("blow_up: family member of rank " + std::to_string(c.rank()) +
                                  " in a rank " + std::to_string(rank) + " blow-up");

  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (crosses(family[i], family[j]))
        throw IncompatibleFamilyError("blow_up: " + to_string(family[i]) + " crosses " + to_string(family[j]));

  DirectionTree tree(rank);
  std::vector<bool> petal_present(rank + 1, false);
  for (auto const &c : family) {
    if (c.is_petal())
      petal_present[*c.petal_index()] = true;
    else
      tree.insert(c.representative());
  }

  GraphOfGroups full;
  for (int v = 0; v < tree.vertex_count(); ++v)
    full.add_vertex(0);
  for (std::size_t e = 0; e < tree.edges().size(); ++e)
    full.add_edge(tree.edges()[e].first, tree.edges()[e].second, tree.labels()[e]);

  int const first_petal = full.edge_count();
  for (int i = 1; i <= rank; ++i)
    full.add_edge(tree.vertex_of(Direction{i, Sign::plus}), tree.vertex_of(Direction{i, Sign::minus}),
                  "x" + std::to_string(i));

  return collapse_edges(full, [&](GogEdge const &e) {
    if (e.id < first_petal)
      return true;
    return static_cast<bool>(petal_present[e.id - first_petal + 1]);
  });
}

std::string_view to_string(BoundaryShape s)
{
  switch (s) {
  case BoundaryShape::cage: return "cage";
  case BoundaryShape::two_bigons: return "two-bigons";
  case BoundaryShape::triple_bridge: return "triple-bridge";
  case BoundaryShape::bigon_two_bridges: return "bigon-two-bridges";
  case BoundaryShape::loop_bigon: return "loop-bigon";
  case BoundaryShape::loop_two_bridges: return "loop-two-bridges";
  case BoundaryShape::unclassified: return "unclassified";
  }
  return "unclassified";
}

BoundaryShape parse_boundary_shape(std::string_view name)
{
  for (BoundaryShape s : boundary_shapes())
    if (to_string(s) == name)
      return s;
  if (name == "unclassified")
    return BoundaryShape::unclassified;
  throw std::invalid_argument("unknown boundary shape '" + std::string(name) + "'");
}

std::vector<BoundaryShape> const &boundary_shapes()
{
  static std::vector<BoundaryShape> const shapes{
    BoundaryShape::cage,       BoundaryShape::two_bigons, BoundaryShape::triple_bridge,
    BoundaryShape::bigon_two_bridges, BoundaryShape::loop_bigon, BoundaryShape::loop_two_bridges,
  };
  return shapes;
}

GraphOfGroups boundary_template(BoundaryShape s)
{
  struct Layout
  {
    int vertices;
    std::vector<std::pair<int, int>> edges;
  };
  static std::map<BoundaryShape, Layout> const layouts{
    {BoundaryShape::cage, {2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}}}},
    {BoundaryShape::two_bigons, {3, {{0, 1}, {0, 1}, {0, 2}, {0, 2}}}},
    {BoundaryShape::triple_bridge, {3, {{0, 1}, {0, 1}, {0, 1}, {0, 2}}}},
    {BoundaryShape::bigon_two_bridges, {4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}}}},
    {BoundaryShape::loop_bigon, {2, {{0, 0}, {0, 1}, {0, 1}}}},
    {BoundaryShape::loop_two_bridges, {3, {{0, 0}, {0, 1}, {0, 2}}}},
  };
  auto it = layouts.find(s);
  if (it == layouts.end())
    throw std::invalid_argument("no template for unclassified shape");

  GraphOfGroups g;
  for (int v = 0; v < it->second.vertices; ++v)
    g.add_vertex(0);
  for (auto [u, v] : it->second.edges)
    g.add_edge(u, v);
  return g;
}

BoundaryShape match_boundary_shape(GraphOfGroups const &g)
{
  static auto const forms = [] {
    std::vector<std::pair<std::string, BoundaryShape>> out;
    for (BoundaryShape s : boundary_shapes())
      out.emplace_back(canonical_form(boundary_template(s)), s);
    return out;
  }();

  if (g.vertex_count() > 4 || g.edge_count() > 4)
    return BoundaryShape::unclassified;
  std::string const form = canonical_form(g);
  for (auto const &[f, s] : forms)
    if (f == form)
      return s;
  return BoundaryShape::unclassified;
}

BoundaryType boundary_splitting(Partition const &p, Partition const &q)
{
  if (!p.is_ideal() || !q.is_ideal())
    throw NotIdealError("boundary_splitting requires ideal edges");
  if (!crosses(p, q))
    throw std::invalid_argument("boundary_splitting requires crossing partitions: " + to_string(p) + " and " +
                                to_string(q) + " are compatible");

  BoundaryType out;
  out.corners = corner_sets(p, q);
  for (DirectionSet k : out.corners.flat())
    out.spheres.emplace_back(Partition(p.rank(), k));
  std::sort(out.spheres.begin(), out.spheres.end());
  out.spheres.erase(std::unique(out.spheres.begin(), out.spheres.end()), out.spheres.end());

  out.graph = blow_up(out.spheres, p.rank());
  out.tag = match_boundary_shape(out.graph);
  return out;
}

} // namespace fsplit
