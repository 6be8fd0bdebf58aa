#include "fsplit/verify.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

#include "fsplit/whitehead.hpp"

namespace fsplit
{

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Direction plus(int i) { return Direction{i, Sign::plus}; }
Direction minus(int i) { return Direction{i, Sign::minus}; }

std::string pair_text(SplittingClass const &a, SplittingClass const &b)
{
  return "[" + to_string(a) + "] [" + to_string(b) + "]";
}

std::string pair_text(Partition const &a, Partition const &b) { return "[" + to_string(a) + "] [" + to_string(b) + "]"; }

} // namespace

Partition rigid_p(int rank, int k)
{
  if (k < 1 || k > rank)
    throw std::out_of_range("P^k needs 1 <= k <= N");
  int const next = k % rank + 1;
  return Partition(rank, DirectionSet::of({minus(k), plus(next)}));
}

Partition rigid_q(int rank, int k)
{
  if (k < 2 || k > rank - 2)
    throw std::out_of_range("Q^k needs 2 <= k <= N-2");
  DirectionSet side = DirectionSet::of({minus(1), plus(k + 1)});
  for (int i = 2; i <= k; ++i)
    side = side.with(plus(i)).with(minus(i));
  return Partition(rank, side);
}

Partition rigid_tau(int rank)
{
  DirectionSet side;
  for (int i = 1; i <= rank; ++i)
    side = side.with(minus(i));
  return Partition(rank, side);
}

RigidFamily rigid_blowup_family(int rank)
{
  if (rank < 4 || rank > 6)
    throw std::out_of_range("rigid blow-up is verified for ranks 4..6");
  RigidFamily f{rank, {}, {}, {}, rigid_tau(rank)};
  for (int i = 1; i <= rank; ++i)
    f.petals.push_back(SplittingClass::petal(rank, i));
  for (int k = 1; k <= rank; ++k) {
    f.sigma.emplace_back(rigid_p(rank, k));
    f.sigma_names.push_back("P" + std::to_string(k));
  }
  for (int k = 2; k <= rank - 2; ++k) {
    f.sigma.emplace_back(rigid_q(rank, k));
    f.sigma_names.push_back("Q" + std::to_string(k));
  }
  return f;
}

VerificationReport verify_rigid_blowup(RigidFamily const &family)
{
  auto const start = Clock::now();
  int const n = family.rank;
  if (n < 4 || n > 6)
    throw std::out_of_range("rigid blow-up is verified for ranks 4..6");
  VerificationReport r;
  r.lemma = "rigid-blowup";
  r.rank = n;

  std::vector<SplittingClass> clique = family.petals;
  clique.insert(clique.end(), family.sigma.begin(), family.sigma.end());

  for (std::size_t i = 0; i < family.sigma.size(); ++i) {
    auto const &p = family.sigma[i].representative();
    r.check(p.is_ideal() && p.is_thick(), "not a thick ideal edge: " + to_string(p));
  }

  std::set<SplittingClass> distinct(clique.begin(), clique.end());
  r.check(static_cast<int>(distinct.size()) == 3 * n - 3,
          "expected " + std::to_string(3 * n - 3) + " distinct classes, found " + std::to_string(distinct.size()));

  bool all_ideal = std::all_of(clique.begin(), clique.end(), [](auto const &c) { return c.is_ideal(); });
  if (all_ideal)
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        r.check(clique[i] == clique[j] || rose_compatible(clique[i], clique[j]),
                "not rose compatible: " + pair_text(clique[i], clique[j]));

  // maximality inside the universe
  long long extendable = 0;
  if (all_ideal)
    for (auto const &c : enumerate_splitting_classes(n)) {
      if (distinct.count(c))
        continue;
      bool const extends =
        std::all_of(clique.begin(), clique.end(), [&](auto const &m) { return rose_compatible(c, m); });
      extendable += extends ? 1 : 0;
      r.check(!extends, "clique extends by " + to_string(c));
    }
  r.census["universe_extensions"] = extendable;

  try {
    GraphOfGroups const g = blow_up(clique, n);
    ShapeReport const shape = classify_shape(g);
    r.census["blowup_vertices"] = g.vertex_count();
    r.census["blowup_edges"] = g.edge_count();
    r.check(shape.all_ranks_zero(), "blow-up has a nontrivial vertex group");
    bool trivalent = true;
    for (int v = 0; v < g.vertex_count(); ++v)
      trivalent = trivalent && g.valence(v) == 3;
    r.check(trivalent, "blow-up is not trivalent");
  } catch (IncompatibleFamilyError const &e) {
    r.check(false, std::string("blow-up failed: ") + e.what());
  }

  Partition const &tau = family.tau;
  r.check(tau.is_ideal(), "tau is not ideal: " + to_string(tau));
  if (tau.is_ideal() && all_ideal) {
    SplittingClass const t(tau);
    for (auto const &s : family.petals)
      r.check(rose_compatible(t, s), "tau not rose compatible with petal " + to_string(s));
    for (std::size_t i = 0; i < family.sigma.size(); ++i)
      r.check(is_cagey(t, family.sigma[i]),
              "tau not cagey with " + family.sigma_names[i] + " = " + to_string(family.sigma[i]));
  }

  r.parameters["tau"] = to_string(tau);
  r.parameters["clique_size"] = std::to_string(distinct.size());
  r.elapsed_seconds = seconds_since(start);
  return r;
}

VerificationReport verify_rigid_blowup(int rank) { return verify_rigid_blowup(rigid_blowup_family(rank)); }

ThreeRose three_rose_configuration(int rank)
{
  if (rank == 3)
    return ThreeRose{rank,
                     {SplittingClass(rigid_p(3, 1)), SplittingClass(rigid_p(3, 2)), SplittingClass::petal(3, 3)},
                     {Partition(3, DirectionSet::of({plus(2), minus(3)})),
                      Partition(3, DirectionSet::of({plus(1), minus(2)}))}};
  if (rank == 4)
    return ThreeRose{rank,
                     {SplittingClass(rigid_p(4, 1)), SplittingClass(rigid_p(4, 2)), SplittingClass::petal(4, 3)},
                     {Partition(4, DirectionSet::of({plus(2), minus(4)})),
                      Partition(4, DirectionSet::of({plus(3), plus(4)}))}};
  throw std::out_of_range("three-rose is verified for ranks 3 and 4");
}

VerificationReport verify_three_rose(ThreeRose const &config)
{
  auto const start = Clock::now();
  int const n = config.rank;
  if (n != 3 && n != 4)
    throw std::out_of_range("three-rose is verified for ranks 3 and 4");
  VerificationReport r;
  r.lemma = "three-rose";
  r.rank = n;

  auto const &sigma = config.sigma;
  std::vector<SplittingClass> family(sigma.begin(), sigma.end());
  try {
    ShapeReport const shape = classify_shape(blow_up(family, n));
    r.check(shape.is_rose(3), "sigma does not refine to a 3-petal rose");
  } catch (IncompatibleFamilyError const &e) {
    r.check(false, std::string("sigma is not compatible: ") + e.what());
  }

  for (int i = 0; i < 2; ++i)
    r.check(config.tau[i].is_ideal(), "tau" + std::to_string(i + 1) + " is not ideal");
  if (!r.passed()) {
    r.elapsed_seconds = seconds_since(start);
    return r;
  }
  std::array<SplittingClass, 2> const tau{SplittingClass(config.tau[0]), SplittingClass(config.tau[1])};

  r.check(rose_compatible(tau[0], tau[1]), "P1: tau1 and tau2 are not rose compatible");
  for (int i = 0; i < 2; ++i)
    r.check(is_cagey(sigma[i], tau[i]), "P2: sigma" + std::to_string(i + 1) + " and tau" + std::to_string(i + 1) +
                                          " are not cagey: " + pair_text(sigma[i], tau[i]));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j)
        continue;
      std::string const names = "tau" + std::to_string(i + 1) + "/sigma" + std::to_string(j + 1);
      Partition const &a = config.tau[i];
      Partition const &b = sigma[j].representative();
      r.check(compatible(a, b), "P3: " + names + " cross");
      bool const rose = rose_compatible(a, b);
      if (n >= 4)
        r.check(rose, "rank >= 4: " + names + " not rose compatible");
      if (compatible(a, b) && !rose)
        r.notes.push_back(names + " circle compatible");
      r.census[rose ? "rose_compatible" : "circle_compatible"] += 1;
    }
  if (n == 3) {
    r.check(circle_compatible(config.tau[0], sigma[1].representative()), "tau1/sigma2 expected circle compatible");
    r.check(circle_compatible(config.tau[1], sigma[0].representative()), "tau2/sigma1 expected circle compatible");
  }

  r.parameters["tau1"] = to_string(config.tau[0]);
  r.parameters["tau2"] = to_string(config.tau[1]);
  r.elapsed_seconds = seconds_since(start);
  return r;
}

VerificationReport verify_three_rose(int rank) { return verify_three_rose(three_rose_configuration(rank)); }

VerificationReport verify_clique_rank3(SplittingGraph const &g)
{
  auto const start = Clock::now();
  if (g.rank() != 3)
    throw std::out_of_range("clique-rank-3 runs at rank 3");
  VerificationReport r;
  r.lemma = "clique-rank-3";
  r.rank = 3;
  r.parameters["mode"] = std::string(to_string(g.mode()));
  for (char const *key : {"cage", "theta_with_loop", "other", "nontrivial_vertex_group"})
    r.census[key] = 0;

  for (auto const &clique : enumerate_cliques(g, 4)) {
    std::vector<SplittingClass> family;
    std::string text;
    for (int v : clique) {
      family.push_back(g.vertex(v));
      text += "[" + to_string(g.vertex(v)) + "]";
    }
    ShapeReport const shape = classify_shape(blow_up(family, 3));
    bool const cage = shape.is_cage(4);
    bool const theta = shape.theta_with_loop;
    r.census[cage ? "cage" : theta ? "theta_with_loop" : "other"] += 1;
    if (!shape.all_ranks_zero())
      r.census["nontrivial_vertex_group"] += 1;
    r.check((cage || theta) && shape.all_ranks_zero(), "4-clique " + text + " blows up to another shape");
  }
  r.census["cliques"] = r.cases;
  r.check(r.census["cage"] > 0 && r.census["theta_with_loop"] > 0, "not both shapes observed");
  r.elapsed_seconds = seconds_since(start);
  return r;
}

VerificationReport verify_clique_rank3() { return verify_clique_rank3(build_star_graph(3, GraphMode::ens)); }

VerificationReport verify_boundary_types(int rank, VerifyOptions const &opts, BoundaryFn const &boundary)
{
  auto const start = Clock::now();
  if (rank != 3 && rank != 4)
    throw std::out_of_range("boundary-types is verified for ranks 3 and 4");
  VerificationReport r;
  r.lemma = "boundary-types";
  r.rank = rank;
  for (BoundaryShape s : boundary_shapes())
    r.census[std::string(to_string(s))] = 0;
  for (char const *key : {"distinct_edges_3", "distinct_edges_4", "cagey"})
    r.census[key] = 0;

  std::vector<Partition> const edges = enumerate_ideal_edges(rank);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (crosses(edges[i], edges[j]))
        pairs.emplace_back(i, j);

  struct Outcome
  {
    std::string shape;
    std::string form;
    int distinct = 0;
    bool cagey = false;
    bool pairwise_rose = false;
    bool conserved = false;
    std::string error;
  };

  auto outcomes = parallel_map(pairs.size(), opts.workers, [&](std::size_t k) {
    auto const &p = edges[pairs[k].first];
    auto const &q = edges[pairs[k].second];
    Outcome o;
    try {
      BoundaryType const b = boundary(p, q);
      o.shape = std::string(to_string(b.tag));
      o.form = canonical_form(b.graph);
      o.distinct = b.distinct_edges();
      o.cagey = is_cagey(p, q);
      o.conserved = b.graph.splitting_rank() == rank;
      o.pairwise_rose = true;
      for (int a = 0; a < b.graph.edge_count(); ++a)
        for (int c = a + 1; c < b.graph.edge_count(); ++c)
          o.pairwise_rose = o.pairwise_rose && edges_rose_compatible(b.graph, a, c);
    } catch (std::exception const &e) {
      o.error = e.what();
    }
    return o;
  });

  std::set<std::string> forms;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Outcome const &o = outcomes[k];
    std::string const text = pair_text(edges[pairs[k].first], edges[pairs[k].second]);
    if (!o.error.empty()) {
      r.check(false, text + ": " + o.error);
      continue;
    }
    forms.insert(o.form);
    r.census[o.shape] += 1;
    r.census["distinct_edges_" + std::to_string(o.distinct)] += 1;
    if (o.cagey)
      r.census["cagey"] += 1;
    r.check(o.shape != "unclassified", text + ": unclassified boundary graph");
    r.check(o.distinct == 3 || o.distinct == 4, text + ": " + std::to_string(o.distinct) + " boundary edges");
    r.check(o.conserved, text + ": boundary graph has the wrong rank");
    r.check(o.cagey == (o.shape == "cage" && o.pairwise_rose),
            text + ": cagey=" + (o.cagey ? "true" : "false") + " but shape " + o.shape);
  }
  r.census["crossing_pairs"] = static_cast<long long>(pairs.size());
  r.census["isomorphism_classes"] = static_cast<long long>(forms.size());
  r.check(forms.size() <= 6, std::to_string(forms.size()) + " isomorphism classes observed");
  r.elapsed_seconds = seconds_since(start);
  return r;
}

VerificationReport verify_cagey_equivalence(int rank, VerifyOptions const &opts, PairPredicate const &direct)
{
  auto const start = Clock::now();
  if (rank != 3)
    throw std::out_of_range("cagey-equivalence is verified at rank 3");
  VerificationReport r;
  r.lemma = "cagey-equivalence";
  r.rank = rank;
  for (char const *key : {"crossing_pairs", "compatible_pairs", "cagey_direct", "cagey_by_cliques", "compatible_with_witness"})
    r.census[key] = 0;

  SplittingGraph const g = build_star_graph(rank, GraphMode::ens);
  PairPredicate const predicate =
    direct ? direct : [](SplittingClass const &a, SplittingClass const &b) { return is_cagey(a, b); };

  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < g.size(); ++s)
    for (int t = s + 1; t < g.size(); ++t)
      pairs.emplace_back(s, t);

  auto verdicts = parallel_map(pairs.size(), opts.workers, [&](std::size_t k) {
    auto [s, t] = pairs[k];
    return std::pair<bool, bool>{predicate(g.vertex(s), g.vertex(t)), cagey_by_cliques(g, s, t)};
  });

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [s, t] = pairs[k];
    auto [d, c] = verdicts[k];
    bool const crossing = crosses(g.vertex(s), g.vertex(t));
    r.census[crossing ? "crossing_pairs" : "compatible_pairs"] += 1;
    if (d)
      r.census["cagey_direct"] += 1;
    if (c)
      r.census["cagey_by_cliques"] += 1;
    if (!crossing && c)
      r.census["compatible_with_witness"] += 1;
    r.check(d == c, pair_text(g.vertex(s), g.vertex(t)) + ": direct=" + (d ? "true" : "false") +
                      " cliques=" + (c ? "true" : "false"));
  }

  // classes that lie in no maximum clique of the universe cannot take part
  // in a universe witness
  std::vector<bool> in_maximum(g.size(), false);
  for (auto const &clique : maximal_cliques(g))
    if (static_cast<int>(clique.size()) == 3 * rank - 3)
      for (int v : clique)
        in_maximum[v] = true;
  r.census["classes_outside_maximum_cliques"] = std::count(in_maximum.begin(), in_maximum.end(), false);
  r.census["pairs"] = static_cast<long long>(pairs.size());
  r.elapsed_seconds = seconds_since(start);
  return r;
}

VerificationReport verify_whitehead_factor(int a_rank, Word const &w, int max_len, VerifyOptions const &opts,
                                           SimplePredicate const &simple)
{
  auto const start = Clock::now();
  if (a_rank < 2)
    throw std::out_of_range("whitehead-factor needs a factor of rank >= 2");
  if (w.rank() != a_rank)
    throw std::invalid_argument("w must be a word in the factor of rank " + std::to_string(a_rank));
  if (cyclic_reduce(w).empty() || is_simple(w))
    throw std::invalid_argument("w = " + to_string(w) + " is simple in the factor");

  int const ambient = a_rank + 1;
  VerificationReport r;
  r.lemma = "whitehead-factor";
  r.rank = ambient;
  r.parameters["a_rank"] = std::to_string(a_rank);
  r.parameters["w"] = to_string(w);
  r.parameters["max_len"] = std::to_string(max_len);
  for (char const *key : {"nonsimple", "simple_conjugate_into_A", "simple_conjugate_to_twt", "counterexample"})
    r.census[key] = 0;

  Word const t = Word::generator(ambient, ambient);
  Word const c = t * Word(ambient, w.letters()) * t.inverse();
  SimplePredicate const is_simple_fn = simple ? simple : [](Word const &g) { return is_simple(g); };

  std::vector<Word> const words = enumerate_factor_product(a_rank, w, max_len);
  auto verdicts = parallel_map(words.size(), opts.workers, [&](std::size_t k) {
    Word const &g = words[k];
    int code = 0;
    if (is_simple_fn(g))
      code = conjugate_into_factor(g, a_rank) ? 1 : is_conjugate(g, c) ? 2 : 3;
    return code;
  });

  for (std::size_t k = 0; k < words.size(); ++k) {
    int const code = verdicts[k];
    static char const *const names[] = {"nonsimple", "simple_conjugate_into_A", "simple_conjugate_to_twt", "counterexample"};
    r.census[names[code]] += 1;
    r.check(code != 3, to_string(words[k]) + " is simple but not conjugate into A");
  }
  r.census["words"] = static_cast<long long>(words.size());
  r.elapsed_seconds = seconds_since(start);
  return r;
}

std::vector<std::string> const &verifier_ids()
{
  static std::vector<std::string> const ids{"rigid-blowup",   "three-rose",        "clique-rank-3",
                                            "boundary-types", "cagey-equivalence", "whitehead-factor"};
  return ids;
}

std::vector<VerificationReport> run_verifier(std::string const &id, int rank, VerifyOptions const &opts)
{
  auto ranks = [rank](std::vector<int> defaults) { return rank > 0 ? std::vector<int>{rank} : defaults; };
  std::vector<VerificationReport> out;
  if (id == "rigid-blowup") {
    for (int n : ranks({4, 5, 6}))
      out.push_back(verify_rigid_blowup(n));
  } else if (id == "three-rose") {
    for (int n : ranks({3, 4}))
      out.push_back(verify_three_rose(n));
  } else if (id == "clique-rank-3") {
    if (rank > 0 && rank != 3)
      throw std::out_of_range("clique-rank-3 runs at rank 3");
    out.push_back(verify_clique_rank3());
  } else if (id == "boundary-types") {
    for (int n : ranks({3, 4}))
      out.push_back(verify_boundary_types(n, opts));
  } else if (id == "cagey-equivalence") {
    for (int n : ranks({3}))
      out.push_back(verify_cagey_equivalence(n, opts));
  } else if (id == "whitehead-factor") {
    for (int n : ranks({3})) {
      if (n < 3)
        throw std::out_of_range("whitehead-factor needs ambient rank >= 3");
      int const a = n - 1;
      out.push_back(verify_whitehead_factor(a, commutator(Word::generator(a, 1), Word::generator(a, 2)), 8, opts));
    }
  } else {
    throw std::invalid_argument("unknown verifier '" + id + "'");
  }
  return out;
}

std::vector<VerificationReport> run_all_verifiers(VerifyOptions const &opts)
{
  std::vector<VerificationReport> out;
  for (auto const &id : verifier_ids())
    for (auto &r : run_verifier(id, 0, opts))
      out.push_back(std::move(r));
  return out;
}

} // namespace fsplit
