#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "icx/complex.hpp"
#include "icx/decompose.hpp"
#include "icx/graph.hpp"
#include "icx/homology.hpp"
#include "icx/ops.hpp"

namespace icx {

/// Object keys keep their file order so that documents round-trip.
using Json = nlohmann::ordered_json;

// Conversions throw InvalidInput with the offending field path on schema errors.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j, const std::string& where = "graph");

Json family_to_json(const GraphFamily& f);
GraphFamily family_from_json(const Json& j, const std::string& where = "family");

Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const Json& j, const std::string& where = "complex");

Json order_to_json(const ShellingOrder& ord);
ShellingOrder order_from_json(const Json& j, const std::string& where = "order");

Json witness_to_json(const VDWitness& w);
Json cm_to_json(const CMVerdict& v);

/// Parses text, reporting syntax errors with line and column.
Json parse_json(std::string_view text, const std::string& source = "input");

/// Two-space indentation with a trailing newline.
std::string dump_json(const Json& j);

std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);
std::string serialize_family(const GraphFamily& f);
GraphFamily parse_family(std::string_view text);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view content);

}  // namespace icx
