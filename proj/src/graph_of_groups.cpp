#include "fsplit/graph_of_groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fsplit
{

namespace
{

struct UnionFind
{
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // keeps the smaller root so that roots are least members
  int unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return a;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return a;
  }
};

} // namespace

int GraphOfGroups::add_vertex(int free_rank)
{
  if (free_rank < 0)
    throw std::invalid_argument("negative vertex rank");
  int const id = vertex_count();
  vertices_.push_back(GogVertex{id, free_rank});
  return id;
}

int GraphOfGroups::add_edge(int u, int v, std::string label)
{
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("edge endpoint out of range");
  int const id = edge_count();
  edges_.push_back(GogEdge{id, u, v, std::move(label)});
  return id;
}

int GraphOfGroups::valence(int v) const
{
  int n = 0;
  for (auto const &e : edges_)
    n += (e.u == v) + (e.v == v);
  return n;
}

int GraphOfGroups::loop_count(int v) const
{
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](GogEdge const &e) { return e.u == v && e.v == v; }));
}

bool GraphOfGroups::connected() const { return connected_without({}); }

bool GraphOfGroups::connected_without(std::vector<int> const &removed) const
{
  if (vertices_.empty())
    return true;
  UnionFind uf(vertex_count());
  int components = vertex_count();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (std::find(removed.begin(), removed.end(), static_cast<int>(i)) != removed.end())
      continue;
    if (uf.find(edges_[i].u) != uf.find(edges_[i].v)) {
      uf.unite(edges_[i].u, edges_[i].v);
      --components;
    }
  }
  return components == 1;
}

int GraphOfGroups::first_betti_number() const
{
  UnionFind uf(vertex_count());
  int components = vertex_count();
  for (auto const &e : edges_)
    if (uf.find(e.u) != uf.find(e.v)) {
      uf.unite(e.u, e.v);
      --components;
    }
  return edge_count() - vertex_count() + components;
}

int GraphOfGroups::splitting_rank() const
{
  int r = first_betti_number();
  for (auto const &v : vertices_)
    r += v.free_rank;
  return r;
}

GraphOfGroups collapse_edges(GraphOfGroups const &g, std::function<bool(GogEdge const &)> const &keep)
{
  int const n = g.vertex_count();
  UnionFind uf(n);
  std::vector<int> rank(n);
  for (auto const &v : g.vertices())
    rank[v.id] = v.free_rank;

  std::vector<GogEdge const *> kept;
  for (auto const &e : g.edges()) {
    if (keep(e)) {
      kept.push_back(&e);
      continue;
    }
    int const a = uf.find(e.u);
    int const b = uf.find(e.v);
    if (a == b) {
      rank[a] += 1;
    } else {
      int const r = uf.unite(a, b);
      rank[r] = rank[a] + rank[b];
    }
  }

  GraphOfGroups out;
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v)
    if (uf.find(v) == v)
      new_id[v] = out.add_vertex(rank[v]);
  for (GogEdge const *e : kept)
    out.add_edge(new_id[uf.find(e->u)], new_id[uf.find(e->v)], e->label);
  return out;
}

bool edges_rose_compatible(GraphOfGroups const &g, int a, int b)
{
  if (a == b)
    return false;
  GraphOfGroups const c = collapse_edges(g, [&](GogEdge const &e) { return e.id == a || e.id == b; });
  return c.vertex_count() == 1 && c.edge_count() == 2;
}

bool ShapeReport::all_ranks_zero() const
{
  return std::all_of(vertex_ranks.begin(), vertex_ranks.end(), [](int r) { return r == 0; });
}

ShapeReport classify_shape(GraphOfGroups const &g)
{
  ShapeReport r;
  for (auto const &v : g.vertices()) {
    r.valence_profile.push_back(g.valence(v.id));
    r.vertex_ranks.push_back(v.free_rank);
  }
  std::sort(r.valence_profile.rbegin(), r.valence_profile.rend());

  int const m = g.edge_count();
  std::vector<bool> separating(m, false);
  for (int i = 0; i < m; ++i)
    separating[i] = !g.edges()[i].is_loop() && !g.connected_without({i});
  r.has_separating_edge = std::find(separating.begin(), separating.end(), true) != separating.end();

  for (int i = 0; i < m && !r.has_separating_edge_pair; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!separating[i] && !separating[j] && !g.connected_without({i, j})) {
        r.has_separating_edge_pair = true;
        break;
      }

  int loops = 0;
  for (auto const &e : g.edges())
    loops += e.is_loop();

  if (g.vertex_count() == 1)
    r.rose_petals = m;
  if (g.vertex_count() == 2 && loops == 0)
    r.cage_edges = m;
  r.theta_with_loop = g.vertex_count() == 2 && loops == 1 && m == 4;
  return r;
}

std::string canonical_form(GraphOfGroups const &g, bool with_ranks)
{
  int const n = g.vertex_count();

  // colour refinement on (valence, loops, rank) then neighbour multisets
  std::vector<int> colour(n);
  {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      keys[v] = {g.valence(v), g.loop_count(v), with_ranks ? g.vertices()[v].free_rank : 0};
      ids.emplace(keys[v], 0);
    }
    int next = 0;
    for (auto &[k, id] : ids)
      id = next++;
    for (int v = 0; v < n; ++v)
      colour[v] = ids[keys[v]];
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v)
      keys[v] = {colour[v]};
    for (auto const &e : g.edges()) {
      if (e.is_loop())
        continue;
      keys[e.u].push_back(colour[e.v] + n);
      keys[e.v].push_back(colour[e.u] + n);
    }
    std::map<std::vector<int>, int> ids;
    for (auto &k : keys) {
      std::sort(k.begin() + 1, k.end());
      ids.emplace(k, 0);
    }
    int next = 0;
    for (auto &[k, id] : ids)
      id = next++;
    std::vector<int> refined(n);
    for (int v = 0; v < n; ++v)
      refined[v] = ids[keys[v]];
    bool const stable = std::set<int>(refined.begin(), refined.end()).size() ==
                        std::set<int>(colour.begin(), colour.end()).size();
    colour = std::move(refined);
    if (stable)
      break;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });

  // class boundaries in `order`
  std::vector<std::pair<int, int>> blocks;
  double search_size = 1.0;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]])
      ++j;
    blocks.emplace_back(i, j);
    for (int f = 2; f <= j - i; ++f)
      search_size *= f;
    i = j;
  }
  if (search_size > 2e6)
    throw std::length_error("canonical_form: graph too symmetric for brute-force labelling");

  using Signature = std::pair<std::vector<std::pair<int, int>>, std::vector<int>>;
  std::optional<Signature> best;

  std::vector<int> label(n);
  auto evaluate = [&] {
    for (int pos = 0; pos < n; ++pos)
      label[order[pos]] = pos;
    Signature s;
    for (auto const &e : g.edges()) {
      int a = label[e.u];
      int b = label[e.v];
      s.first.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(s.first.begin(), s.first.end());
    s.second.resize(n);
    for (int v = 0; v < n; ++v)
      s.second[label[v]] = with_ranks ? g.vertices()[v].free_rank : colour[v];
    if (!best || s < *best)
      best = std::move(s);
  };

  std::function<void(std::size_t)> recurse = [&](std::size_t block) {
    if (block == blocks.size()) {
      evaluate();
      return;
    }
    auto [lo, hi] = blocks[block];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      recurse(block + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  recurse(0);

  std::ostringstream out;
  out << "v" << n;
  if (best) {
    out << ";e";
    for (auto [a, b] : best->first)
      out << "(" << a << "," << b << ")";
    if (with_ranks) {
      out << ";r";
      for (int r : best->second)
        out << r << ".";
    }
  }
  return out.str();
}

std::string to_dot(GraphOfGroups const &g, std::string const &name)
{
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (auto const &v : g.vertices())
    out << "  v" << v.id << " [label=\"" << v.free_rank << "\"];\n";
  for (auto const &e : g.edges())
    out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.label << "\"];\n";
  out << "}\n";
  return out.str();
}

} // namespace fsplit
