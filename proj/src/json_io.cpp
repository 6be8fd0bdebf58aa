#include "fsplit/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fsplit
{

SplittingClass parse_splitting_class(std::string_view text, int rank)
{
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  bool const petal = text.size() >= 2 && text[0] == 'x' &&
                     std::all_of(text.begin() + 1, text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (petal) {
    int const i = std::stoi(std::string(text.substr(1)));
    if (i < 1 || i > rank)
      throw std::invalid_argument("petal index out of range in '" + std::string(text) + "'");
    return SplittingClass::petal(rank, i);
  }
  return SplittingClass(parse_partition(text, rank));
}

Json partition_json(Partition const &p)
{
  Json side = Json::array();
  for (Direction d : p.side1().directions())
    side.push_back(to_string(d));
  return Json{{"rank", p.rank()}, {"side1", side}};
}

Json class_json(SplittingClass const &c)
{
  Json out{{"name", to_string(c)}, {"kind", c.is_petal() ? "petal" : "thick"}};
  out["representative"] = partition_json(c.representative());
  return out;
}

Json graph_json(GraphOfGroups const &g)
{
  Json vertices = Json::array();
  for (auto const &v : g.vertices())
    vertices.push_back({{"id", v.id}, {"free_rank", v.free_rank}});
  Json edges = Json::array();
  for (auto const &e : g.edges())
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"label", e.label}});
  return Json{{"vertices", vertices}, {"edges", edges}, {"splitting_rank", g.splitting_rank()}};
}

Json shape_json(ShapeReport const &s)
{
  Json out{{"valence_profile", s.valence_profile},
           {"has_separating_edge", s.has_separating_edge},
           {"has_separating_edge_pair", s.has_separating_edge_pair},
           {"rose_petals", s.rose_petals ? Json(*s.rose_petals) : Json(nullptr)},
           {"cage_edges", s.cage_edges ? Json(*s.cage_edges) : Json(nullptr)},
           {"theta_with_loop", s.theta_with_loop},
           {"vertex_ranks", s.vertex_ranks}};
  return out;
}

Json word_json(Word const &w) { return Json{{"rank", w.rank()}, {"letters", w.letters()}, {"text", to_string(w)}}; }

Json report_json(VerificationReport const &r)
{
  Json census = Json::object();
  for (auto const &[k, v] : r.census)
    census[k] = v;
  Json parameters = Json::object();
  for (auto const &[k, v] : r.parameters)
    parameters[k] = v;
  return Json{{"lemma", r.lemma},       {"rank", r.rank},           {"passed", r.passed()},
              {"cases", r.cases},       {"failures", r.failures},   {"parameters", parameters},
              {"census", census},       {"notes", r.notes}};
}

Json k_graph_json(KGraph const &k)
{
  Json roses = Json::array();
  for (auto const &rose : k.roses) {
    Json names = Json::array();
    for (auto const &c : rose)
      names.push_back(to_string(c));
    roses.push_back(names);
  }
  Json edges = Json::array();
  for (auto const &[a, b] : k.edges)
    edges.push_back({a, b});
  auto const degrees = k.degrees();
  int max_degree = 0;
  for (int d : degrees)
    max_degree = std::max(max_degree, d);
  return Json{{"rank", k.rank},   {"roses", roses},         {"edges", edges},
              {"degrees", degrees}, {"max_degree", max_degree}};
}

std::vector<SplittingClass> parse_family(Json const &doc, int rank)
{
  Json const *list = &doc;
  if (doc.is_object()) {
    if (doc.contains("rank") && doc.at("rank").get<int>() != rank)
      throw std::invalid_argument("family file rank does not match --rank");
    if (!doc.contains("family"))
      throw std::invalid_argument("family file has no \"family\" array");
    list = &doc.at("family");
  }
  if (!list->is_array())
    throw std::invalid_argument("family must be an array");
  std::vector<SplittingClass> out;
  for (auto const &entry : *list) {
    if (entry.is_string()) {
      out.push_back(parse_splitting_class(entry.get<std::string>(), rank));
    } else if (entry.is_object()) {
      if (entry.contains("rank") && entry.at("rank").get<int>() != rank)
        throw std::invalid_argument("partition rank does not match --rank");
      std::string side;
      for (auto const &d : entry.at("side1")) {
        if (!side.empty())
          side += ",";
        side += d.get<std::string>();
      }
      out.emplace_back(parse_partition(side, rank));
    } else {
      throw std::invalid_argument("family entries must be strings or partition objects");
    }
  }
  return out;
}

} // namespace fsplit
