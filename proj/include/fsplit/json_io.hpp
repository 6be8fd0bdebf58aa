#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fsplit/blowup.hpp"
#include "fsplit/splitting_graph.hpp"
#include "fsplit/verify.hpp"
#include "fsplit/word.hpp"

namespace fsplit
{

using Json = nlohmann::ordered_json;

/// "x3" names petal 3; anything else is parsed as a side list.
SplittingClass parse_splitting_class(std::string_view text, int rank);

Json partition_json(Partition const &p);
Json class_json(SplittingClass const &c);
Json graph_json(GraphOfGroups const &g);
Json shape_json(ShapeReport const &s);
Json word_json(Word const &w);
Json report_json(VerificationReport const &r);
Json k_graph_json(KGraph const &k);

/**
 * Reads a family file: either {"rank": N, "family": [...]} or a bare array.
 * Entries are class strings ("x2", "x1-,x2+") or partition objects
 * {"rank": N, "side1": [...]}.
 */
std::vector<SplittingClass> parse_family(Json const &doc, int rank);

} // namespace fsplit
