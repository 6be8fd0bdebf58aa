#include "fsplit/splitting_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "fsplit/blowup.hpp"

namespace fsplit
{

std::string_view to_string(GraphMode m) { return m == GraphMode::ens ? "ens" : "ns"; }

GraphMode parse_graph_mode(std::string_view text)
{
  if (text == "ens")
    return GraphMode::ens;
  if (text == "ns")
    return GraphMode::ns;
  throw std::invalid_argument("unknown graph mode '" + std::string(text) + "'");
}

SplittingGraph::SplittingGraph(int rank, GraphMode mode, std::vector<SplittingClass> vertices)
  : rank_(rank), mode_(mode), vertices_(std::move(vertices))
{
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  int const n = size();
  kind_.assign(static_cast<std::size_t>(n) * n, EdgeKind::none);
  adj_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    if (vertices_[i].rank() != rank)
      throw std::invalid_argument("splitting graph vertex of the wrong rank");
    if (!vertices_[i].is_ideal())
      throw NotIdealError("splitting graph vertices must be ideal");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (crosses(vertices_[i], vertices_[j]))
        continue;
      EdgeKind const k = rose_compatible(vertices_[i], vertices_[j]) ? EdgeKind::rose : EdgeKind::circle;
      kind_[i * n + j] = kind_[j * n + i] = k;
      if (adjacent(i, j)) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
      }
    }
  for (auto &a : adj_)
    std::sort(a.begin(), a.end());
}

std::optional<int> SplittingGraph::index_of(SplittingClass const &c) const
{
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c);
  if (it == vertices_.end() || !(*it == c))
    return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

bool SplittingGraph::adjacent(int i, int j) const
{
  EdgeKind const k = kind(i, j);
  return k == EdgeKind::rose || (k == EdgeKind::circle && mode_ == GraphMode::ns);
}

int SplittingGraph::edge_count() const
{
  std::size_t total = 0;
  for (auto const &a : adj_)
    total += a.size();
  return static_cast<int>(total / 2);
}

bool SplittingGraph::is_clique(std::vector<int> const &members) const
{
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (members[a] == members[b] || !adjacent(members[a], members[b]))
        return false;
  return true;
}

SplittingGraph build_star_graph(int rank, GraphMode mode, int ceiling)
{
  check_rank_guard(rank, ceiling);
  return SplittingGraph(rank, mode, enumerate_splitting_classes(rank, ceiling));
}

namespace
{

struct CliqueSearch
{
  SplittingGraph const &g;
  std::size_t target;
  std::size_t limit;
  std::vector<std::vector<int>> out;
  std::vector<int> current;

  bool done() const { return limit != 0 && out.size() >= limit; }

  void extend(std::vector<int> const &candidates)
  {
    if (current.size() == target) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < candidates.size() && !done(); ++i) {
      if (current.size() + (candidates.size() - i) < target)
        return;
      int const v = candidates[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g.adjacent(v, candidates[j]))
          next.push_back(candidates[j]);
      current.push_back(v);
      extend(next);
      current.pop_back();
    }
  }
};

void bron_kerbosch(SplittingGraph const &g, std::vector<int> &r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>> &out)
{
  if (p.empty()) {
    if (x.empty()) {
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }

  int pivot = -1;
  int best = -1;
  for (auto const *set : {&p, &x})
    for (int u : *set) {
      int d = 0;
      for (int v : p)
        d += g.adjacent(u, v) ? 1 : 0;
      if (d > best || (d == best && u < pivot)) {
        best = d;
        pivot = u;
      }
    }

  std::vector<int> branch;
  for (int v : p)
    if (!g.adjacent(pivot, v))
      branch.push_back(v);

  for (int v : branch) {
    std::vector<int> np;
    std::vector<int> nx;
    for (int u : p)
      if (g.adjacent(v, u))
        np.push_back(u);
    for (int u : x)
      if (g.adjacent(v, u))
        nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.insert(std::upper_bound(x.begin(), x.end(), v), v);
  }
}

} // namespace

std::vector<std::vector<int>> enumerate_cliques(SplittingGraph const &g, int size, std::vector<bool> const &allowed,
                                                std::size_t limit)
{
  if (size < 0)
    throw std::invalid_argument("clique size must be nonnegative");
  if (static_cast<int>(allowed.size()) != g.size())
    throw std::invalid_argument("allowed mask has the wrong length");
  CliqueSearch search{g, static_cast<std::size_t>(size), limit, {}, {}};
  std::vector<int> candidates;
  for (int v = 0; v < g.size(); ++v)
    if (allowed[v])
      candidates.push_back(v);
  search.extend(candidates);
  return std::move(search.out);
}

std::vector<std::vector<int>> enumerate_cliques(SplittingGraph const &g, int size)
{
  return enumerate_cliques(g, size, std::vector<bool>(g.size(), true));
}

std::vector<std::vector<int>> maximal_cliques(SplittingGraph const &g)
{
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  std::vector<int> p(g.size());
  for (int v = 0; v < g.size(); ++v)
    p[v] = v;
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number(SplittingGraph const &g)
{
  int best = 0;
  for (auto const &c : maximal_cliques(g))
    best = std::max(best, static_cast<int>(c.size()));
  return best;
}

std::optional<std::vector<int>> cagey_witness(SplittingGraph const &g, int s, int t)
{
  if (s == t)
    throw std::invalid_argument("cagey_by_cliques needs two distinct classes");
  if (s < 0 || t < 0 || s >= g.size() || t >= g.size())
    throw std::out_of_range("vertex index out of range");
  std::vector<bool> allowed(g.size(), false);
  for (int v = 0; v < g.size(); ++v)
    allowed[v] = v != s && v != t && g.adjacent(s, v) && g.adjacent(t, v);
  auto found = enumerate_cliques(g, 3 * g.rank() - 4, allowed, 1);
  if (found.empty())
    return std::nullopt;
  return found.front();
}

bool cagey_by_cliques(SplittingGraph const &g, int s, int t) { return cagey_witness(g, s, t).has_value(); }

std::vector<RoseVertex> rose_vertices(int rank)
{
  check_rank_guard(rank);
  SplittingGraph const g = build_star_graph(rank, GraphMode::ens);
  std::vector<RoseVertex> out;
  for (auto const &clique : enumerate_cliques(g, rank)) {
    RoseVertex rose;
    for (int v : clique)
      rose.push_back(g.vertex(v));
    ShapeReport const shape = classify_shape(blow_up(rose, rank));
    if (shape.is_rose(rank) && shape.all_ranks_zero())
      out.push_back(std::move(rose));
  }
  return out;
}

std::vector<int> KGraph::degrees() const
{
  std::vector<int> d(roses.size(), 0);
  for (auto const &[a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

KGraph k_graph_local(int rank)
{
  if (rank != 3 && rank != 4)
    throw std::out_of_range("k_graph_local supports ranks 3 and 4");
  SplittingGraph const g = build_star_graph(rank, GraphMode::ens);
  KGraph k;
  k.rank = rank;
  k.roses = rose_vertices(rank);

  // roses sharing an (N-1)-subset, keyed by that subset
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> buckets;
  for (int r = 0; r < static_cast<int>(k.roses.size()); ++r) {
    std::vector<int> idx;
    for (auto const &c : k.roses[r])
      idx.push_back(*g.index_of(c));
    for (std::size_t drop = 0; drop < idx.size(); ++drop) {
      std::vector<int> key;
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (i != drop)
          key.push_back(idx[i]);
      buckets[key].emplace_back(r, idx[drop]);
    }
  }
  for (auto const &[key, members] : buckets)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (g.adjacent(members[a].second, members[b].second))
          k.edges.emplace_back(std::min(members[a].first, members[b].first),
                               std::max(members[a].first, members[b].first));
  std::sort(k.edges.begin(), k.edges.end());
  k.edges.erase(std::unique(k.edges.begin(), k.edges.end()), k.edges.end());
  return k;
}

} // namespace fsplit
