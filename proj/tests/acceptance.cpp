// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fsplit/json_io.hpp"
#include "fsplit/verify.hpp"
#include "fsplit/whitehead.hpp"
#include "whitehead_oracle.hpp"

using namespace fsplit;

namespace
{

struct Outcome
{
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const &what)
  {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds(std::function<void()> const &fn)
{
  auto const start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string summary(VerificationReport const &r)
{
  std::ostringstream out;
  out << r.lemma << "@" << r.rank << " cases=" << r.cases << " failures=" << r.failures.size();
  return out.str();
}

void report(int id, std::string const &name, Outcome const &o, double elapsed)
{
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), elapsed,
              o.detail.empty() ? "" : " - ", o.detail.c_str());
  std::fflush(stdout);
}

Outcome rigid_blowup()
{
  Outcome o;
  for (int n : {4, 5, 6}) {
    VerificationReport r;
    double const t = seconds([&] { r = verify_rigid_blowup(n); });
    o.require(r.passed(), summary(r));
    o.require(t < 60, "rank " + std::to_string(n) + " over 60 s");
    o.require(r.parameters.at("clique_size") == std::to_string(3 * n - 3), "clique size at rank " + std::to_string(n));
  }
  return o;
}

Outcome three_rose()
{
  Outcome o;
  VerificationReport const r3 = verify_three_rose(3);
  VerificationReport const r4 = verify_three_rose(4);
  o.require(r3.passed(), summary(r3));
  o.require(r4.passed(), summary(r4));
  o.require(std::find(r3.notes.begin(), r3.notes.end(), "tau1/sigma2 circle compatible") != r3.notes.end(),
            "rank-3 circle record missing");
  o.require(r4.census.count("circle_compatible") == 0, "rank-4 pair not rose compatible");
  return o;
}

Outcome clique_rank3()
{
  Outcome o;
  VerificationReport const r = verify_clique_rank3();
  o.require(r.passed(), summary(r));
  return o;
}

Outcome boundary_types()
{
  Outcome o;
  for (auto [n, limit] : {std::pair{3, 30.0}, std::pair{4, 600.0}}) {
    VerificationReport r;
    double const t = seconds([&] { r = verify_boundary_types(n); });
    o.require(r.passed(), summary(r));
    o.require(t < limit, "rank " + std::to_string(n) + " over time limit");
    o.require(r.census.at("isomorphism_classes") <= 6, "more than six classes");
    long long const three = r.census.count("distinct_edges_3") ? r.census.at("distinct_edges_3") : 0;
    long long const four = r.census.count("distinct_edges_4") ? r.census.at("distinct_edges_4") : 0;
    o.require(three + four == r.census.at("crossing_pairs"), "edge counts outside {3,4}");
  }
  return o;
}

Outcome cagey_equivalence()
{
  Outcome o;
  VerificationReport const r = verify_cagey_equivalence(3);
  std::ostringstream d;
  d << summary(r) << " cagey_direct=" << r.census.at("cagey_direct")
    << " cagey_by_cliques=" << r.census.at("cagey_by_cliques")
    << " classes_outside_maximum_cliques=" << r.census.at("classes_outside_maximum_cliques");
  o.require(r.passed(), d.str());
  return o;
}

Outcome whitehead_oracle()
{
  Outcome o;
  long long words = 0;
  long long mismatches = 0;
  for (auto [rank, len] : {std::pair{2, 5}, std::pair{3, 4}})
    for (auto const &letters : oracle::cyclically_reduced_words(rank, len)) {
      ++words;
      if (is_simple(Word(rank, letters)) != oracle::is_simple(rank, letters))
        ++mismatches;
    }
  o.require(mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(words) + " words disagree");
  for (int i = 1; i <= 3; ++i)
    o.require(is_simple(Word::generator(3, i)), "basis element reported nonsimple");
  o.require(!is_simple(commutator(Word::generator(2, 1), Word::generator(2, 2))), "[x1,x2] reported simple");
  o.require(!oracle::is_simple(2, {1, 2, -1, -2}), "oracle finds [x1,x2] simple");
  if (o.ok)
    o.detail = std::to_string(words) + " words";
  return o;
}

Outcome whitehead_factor()
{
  Outcome o;
  VerificationReport const r =
    verify_whitehead_factor(2, commutator(Word::generator(2, 1), Word::generator(2, 2)), 8);
  o.require(r.passed(), summary(r));
  if (o.ok)
    o.detail = std::to_string(r.census.at("words")) + " words";
  return o;
}

Outcome properties()
{
  Outcome o;
  auto const edges = enumerate_ideal_edges(3);
  o.require(edges.size() == 28, "ideal partition count");
  o.require(enumerate_ideal_edges(3, true).size() == 22, "thick count");
  o.require(count_splitting_classes(3) == 25, "class count");

  long long violations = 0;
  auto const perms = SignedPermutation::all(3);
  o.require(perms.size() == 48, "signed permutation count");
  for (auto const &p : edges)
    for (auto const &q : edges) {
      violations += crosses(p, q) != crosses(q, p);
      violations += rose_compatible(p, q) != rose_compatible(q, p);
      violations += is_cagey(p, q) != is_cagey(q, p);
      for (auto const &g : perms) {
        Partition const gp = g.apply(p);
        Partition const gq = g.apply(q);
        violations += crosses(gp, gq) != crosses(p, q);
        violations += rose_compatible(gp, gq) != rose_compatible(p, q);
        violations += is_cagey(gp, gq) != is_cagey(p, q);
      }
    }
  o.require(violations == 0, std::to_string(violations) + " symmetry/equivariance violations");

  std::mt19937 rng(20240601);
  long long bad_rank = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int const n = 3 + static_cast<int>(rng() % 4);
    auto pool = enumerate_splitting_classes(n);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t const target = 1 + rng() % (3 * n - 3);
    std::vector<SplittingClass> family;
    for (auto const &c : pool) {
      if (family.size() >= target)
        break;
      if (std::none_of(family.begin(), family.end(), [&](auto const &m) { return crosses(c, m); }))
        family.push_back(c);
    }
    bad_rank += blow_up(family, n).splitting_rank() != n;
  }
  o.require(bad_rank == 0, std::to_string(bad_rank) + " families break rank conservation");

  o.require(clique_number(build_star_graph(3, GraphMode::ens)) <= 6, "ens clique above 3N-3");
  return o;
}

std::string battery_json()
{
  Json all = Json::array();
  for (auto const &r : run_all_verifiers({2}))
    all.push_back(report_json(r));
  return all.dump();
}

Outcome determinism()
{
  Outcome o;
  std::string const first = battery_json();
  std::string const second = battery_json();
  o.require(first == second, "battery output differs between runs");
  if (o.ok)
    o.detail = std::to_string(first.size()) + " bytes identical";
  return o;
}

} // namespace

int main()
{
  struct Criterion
  {
    char const *name;
    Outcome (*run)();
  };
  Criterion const criteria[] = {
    {"rigid blow-up at ranks 4, 5, 6", rigid_blowup},
    {"three-rose at ranks 3 and 4", three_rose},
    {"4-cliques at rank 3", clique_rank3},
    {"boundary types at ranks 3 and 4", boundary_types},
    {"cagey pairs vs clique characterization at rank 3", cagey_equivalence},
    {"is_simple vs brute-force oracle", whitehead_oracle},
    {"whitehead factor lemma for [a,b], length 8", whitehead_factor},
    {"property suites", properties},
    {"determinism of the verification battery", determinism},
  };

  int failed = 0;
  int id = 1;
  for (auto const &c : criteria) {
    Outcome o;
    double const t = seconds([&] {
      try {
        o = c.run();
      } catch (std::exception const &e) {
        o.require(false, std::string("exception: ") + e.what());
      }
    });
    report(id++, c.name, o, t);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
