#pragma once

#include <graphharm/graph.hpp>
#include <graphharm/scores.hpp>
#include <graphharm/validate.hpp>

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace graphharm::cli {

using Json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes);
std::string file_sha256(const std::filesystem::path& path);

/// Digest of the canonical edge-list serialisation, independent of file
/// formatting and comments.
std::string graph_digest(const Graph& g);

/// Canonical JSON text: two-space indent, trailing newline.
std::string dump(const Json& j);

/// Reads a scores dump written by `centrality` (JSON or CSV).
EdgeScores load_scores(const std::filesystem::path& path);

Json to_json(const std::vector<CheckReport>& reports);

/// Shortest round-trip text for a double, as used in CSV output.
std::string number(double x);

void write_file(const std::filesystem::path& path, const std::string& bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace graphharm::cli
