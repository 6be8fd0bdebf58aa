#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fsplit/blowup.hpp"
#include "fsplit/json_io.hpp"
#include "fsplit/splitting_graph.hpp"
#include "fsplit/verify.hpp"
#include "fsplit/whitehead.hpp"

using namespace fsplit;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Config
{
  int rank_ceiling = kDefaultRankCeiling;
  int workers = 1;
  std::string format = "json";
  unsigned seed = 0;
  bool timing = false;
};

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::optional<int> env_int(char const *name)
{
  char const *value = std::getenv(name);
  if (!value || !*value)
    return std::nullopt;
  try {
    std::size_t used = 0;
    int const v = std::stoi(value, &used);
    if (used != std::string(value).size())
      throw std::invalid_argument(value);
    return v;
  } catch (std::exception const &) {
    throw UsageError(std::string("malformed ") + name + "='" + value + "'");
  }
}

void emit(Json const &doc) { std::cout << doc.dump(2) << "\n"; }

void require_format(Config const &cfg, std::initializer_list<char const *> allowed)
{
  for (char const *f : allowed)
    if (cfg.format == f)
      return;
  throw UsageError("format '" + cfg.format + "' is not available for this command");
}

int run_enum(Config const &cfg, int rank, bool thick_only)
{
  require_format(cfg, {"json", "text"});
  check_rank_guard(rank, cfg.rank_ceiling);
  auto const edges = enumerate_ideal_edges(rank, thick_only, cfg.rank_ceiling);
  if (cfg.format == "text") {
    for (auto const &p : edges)
      std::cout << to_string(p) << "\n";
    return kExitOk;
  }
  Json list = Json::array();
  for (auto const &p : edges)
    list.push_back(partition_json(p));
  emit(Json{{"rank", rank},
            {"thick_only", thick_only},
            {"count", edges.size()},
            {"class_count", count_splitting_classes(rank, cfg.rank_ceiling)},
            {"partitions", list}});
  return kExitOk;
}

int run_pair(Config const &cfg, int rank, std::string const &p_text, std::string const &q_text)
{
  require_format(cfg, {"json", "text"});
  check_rank_guard(rank, cfg.rank_ceiling);
  Partition const p = parse_partition(p_text, rank);
  Partition const q = parse_partition(q_text, rank);
  bool const ideal = p.is_ideal() && q.is_ideal();
  bool const crossing = crosses(p, q);

  Json out{{"rank", rank},
           {"p", partition_json(p)},
           {"q", partition_json(q)},
           {"p_ideal", p.is_ideal()},
           {"q_ideal", q.is_ideal()},
           {"crosses", crossing},
           {"compatible", !crossing}};
  out["rose_compatible"] = ideal ? Json(rose_compatible(p, q)) : Json(nullptr);
  out["circle_compatible"] = ideal ? Json(circle_compatible(p, q)) : Json(nullptr);
  out["cagey"] = ideal ? Json(is_cagey(p, q)) : Json(nullptr);

  Json corners = Json::array();
  for (DirectionSet k : corner_sets(p, q).flat())
    corners.push_back(to_string(k));
  out["corners"] = corners;

  if (ideal && crossing) {
    BoundaryType const b = boundary_splitting(p, q);
    out["boundary_type"] = std::string(to_string(b.tag));
    out["boundary_edges"] = b.distinct_edges();
  } else {
    out["boundary_type"] = nullptr;
    out["boundary_edges"] = nullptr;
  }

  if (cfg.format == "text") {
    for (auto const &[k, v] : out.items())
      if (!v.is_object())
        std::cout << k << ": " << v.dump() << "\n";
    return kExitOk;
  }
  emit(out);
  return kExitOk;
}

int run_blowup(Config const &cfg, int rank, std::string const &path)
{
  check_rank_guard(rank, cfg.rank_ceiling);
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read family file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (Json::parse_error const &e) {
    throw UsageError(std::string("family file is not valid JSON: ") + e.what());
  }
  auto const family = parse_family(doc, rank);
  GraphOfGroups const g = blow_up(family, rank);

  if (cfg.format == "dot") {
    std::cout << to_dot(g, "blowup");
    return kExitOk;
  }
  ShapeReport const shape = classify_shape(g);
  if (cfg.format == "text") {
    std::cout << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", rank "
              << g.splitting_rank() << "\n";
    for (auto const &e : g.edges())
      std::cout << e.u << " -- " << e.v << "  " << e.label << "\n";
    return kExitOk;
  }
  Json names = Json::array();
  for (auto const &c : family)
    names.push_back(to_string(c));
  emit(Json{{"rank", rank}, {"family", names}, {"graph", graph_json(g)}, {"shape", shape_json(shape)}});
  return kExitOk;
}

int run_verify(Config const &cfg, std::string const &id, int rank)
{
  require_format(cfg, {"json", "text"});
  if (rank > 0)
    check_rank_guard(rank, cfg.rank_ceiling);
  VerifyOptions const opts{cfg.workers};
  std::vector<VerificationReport> reports;
  if (id == "all") {
    if (rank > 0)
      throw UsageError("verify all runs every verifier at its default ranks; drop --rank");
    reports = run_all_verifiers(opts);
  } else {
    auto const &ids = verifier_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
      throw UsageError("unknown verifier '" + id + "'");
    reports = run_verifier(id, rank, opts);
  }

  bool passed = true;
  Json list = Json::array();
  for (auto const &r : reports) {
    passed = passed && r.passed();
    list.push_back(report_json(r));
    if (cfg.timing)
      std::cerr << r.lemma << " rank " << r.rank << ": " << r.elapsed_seconds << " s\n";
  }
  if (cfg.format == "text") {
    for (auto const &r : reports)
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.lemma << " rank " << r.rank << " cases " << r.cases
                << " failures " << r.failures.size() << "\n";
  } else {
    emit(Json{{"passed", passed}, {"reports", list}});
  }
  return passed ? kExitOk : kExitFailed;
}

int run_whitehead_simple(Config const &cfg, int rank, std::string const &text)
{
  require_format(cfg, {"json", "text"});
  if (rank < 1 || rank > kMaxStorableRank)
    throw UsageError("whitehead rank must lie in 1.." + std::to_string(kMaxStorableRank));
  Word const w = Word::parse(text, rank);
  if (cyclic_reduce(w).empty())
    throw UsageError("the trivial word has no Whitehead graph");
  Minimization const m = whitehead_minimize(w);
  bool const simple = is_simple(w);
  bool const certificate = whitehead_graph(m.word).connected_without_cut_vertex();
  if (cfg.format == "text") {
    std::cout << to_string(w) << (simple ? " simple" : " nonsimple") << " (minimal " << to_string(m.word) << ")\n";
    return kExitOk;
  }
  Json path = Json::array();
  for (auto const &mv : m.path)
    path.push_back(mv.to_string());
  emit(Json{{"rank", rank},
            {"word", word_json(w)},
            {"cyclic_reduction", word_json(cyclic_reduce(w))},
            {"minimized", word_json(m.word)},
            {"path", path},
            {"connected_without_cut_vertex", certificate},
            {"simple", simple}});
  return kExitOk;
}

int run_kgraph(Config const &cfg, int rank)
{
  require_format(cfg, {"json", "dot", "text"});
  check_rank_guard(rank, cfg.rank_ceiling);
  KGraph const k = k_graph_local(rank);
  if (cfg.format == "dot") {
    std::ostringstream out;
    out << "graph K {\n";
    for (std::size_t i = 0; i < k.roses.size(); ++i) {
      std::string label;
      for (auto const &c : k.roses[i])
        label += (label.empty() ? "" : " | ") + to_string(c);
      out << "  " << i << " [label=\"" << label << "\"];\n";
    }
    for (auto const &[a, b] : k.edges)
      out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    std::cout << out.str();
    return kExitOk;
  }
  if (cfg.format == "text") {
    std::cout << "roses " << k.roses.size() << ", edges " << k.edges.size() << "\n";
    return kExitOk;
  }
  emit(k_graph_json(k));
  return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
  Config cfg;
  try {
    if (auto v = env_int("FSPLIT_WORKERS"))
      cfg.workers = *v;
    if (auto v = env_int("FSPLIT_RANK_CEILING"))
      cfg.rank_ceiling = *v;
  } catch (UsageError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Partition calculus for free splittings, Whitehead tools and lemma verifiers"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--workers", cfg.workers, "Worker threads for exhaustive scans (env FSPLIT_WORKERS)");
  app.add_option("--rank-ceiling", cfg.rank_ceiling, "Largest rank accepted (env FSPLIT_RANK_CEILING)");
  app.add_option("--seed", cfg.seed, "Seed for sampled scans");
  app.add_flag("--timing", cfg.timing, "Print verifier run times to stderr");

  int rank = 0;
  bool thick_only = false;
  auto *enum_cmd = app.add_subcommand("enum", "List ideal partitions");
  enum_cmd->add_option("--rank", rank, "Rank N")->required();
  enum_cmd->add_flag("--thick-only", thick_only, "Only thick partitions");

  std::string p_text;
  std::string q_text;
  auto *pair_cmd = app.add_subcommand("pair", "Evaluate pairwise predicates");
  pair_cmd->add_option("--rank", rank, "Rank N")->required();
  pair_cmd->add_option("--p", p_text, "First partition (side list)")->required();
  pair_cmd->add_option("--q", q_text, "Second partition (side list)")->required();

  std::string family_path;
  auto *blowup_cmd = app.add_subcommand("blowup", "Blow up a compatible family");
  blowup_cmd->add_option("--rank", rank, "Rank N")->required();
  blowup_cmd->add_option("--family", family_path, "JSON family file")->required();

  std::string lemma;
  auto *verify_cmd = app.add_subcommand("verify", "Run a lemma verifier");
  verify_cmd->add_option("lemma", lemma, "Verifier id or 'all'")->required();
  verify_cmd->add_option("--rank", rank, "Rank N (default: the verifier's ranks)");

  std::string word_text;
  auto *wh_cmd = app.add_subcommand("whitehead", "Whitehead algorithm tools");
  wh_cmd->require_subcommand(1);
  auto *simple_cmd = wh_cmd->add_subcommand("simple", "Decide whether a word lies in a proper free factor");
  simple_cmd->add_option("--rank", rank, "Rank N")->required();
  simple_cmd->add_option("--word", word_text, "Word such as x1x2X1X2")->required();

  auto *k_cmd = app.add_subcommand("kgraph", "Local graph of roses");
  k_cmd->add_option("--rank", rank, "Rank N")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.workers < 1)
      throw UsageError("worker count must be at least 1");
    if (cfg.rank_ceiling < kMinRank || cfg.rank_ceiling > kDefaultRankCeiling)
      throw UsageError("rank ceiling must lie in 3..7");

    if (*enum_cmd)
      return run_enum(cfg, rank, thick_only);
    if (*pair_cmd)
      return run_pair(cfg, rank, p_text, q_text);
    if (*blowup_cmd)
      return run_blowup(cfg, rank, family_path);
    if (*verify_cmd)
      return run_verify(cfg, lemma, rank);
    if (*simple_cmd)
      return run_whitehead_simple(cfg, rank, word_text);
    if (*k_cmd)
      return run_kgraph(cfg, rank);
  } catch (UsageError const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::out_of_range const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
