#pragma once

#include "crithg/bounds.hpp"
#include "crithg/constructor.hpp"
#include "crithg/cover.hpp"
#include "crithg/generators.hpp"
#include "crithg/greedy_cover.hpp"
#include "crithg/hypergraph.hpp"
#include "crithg/oracle.hpp"

#include <filesystem>
#include <string>

namespace crithg {

// Canonical JSON, the stable on-disk contract:
//   {"n":3,"r":2,"edges":[[0,1],[0,2],[1,2]]}
// with "r":null when the uniformity tag is absent and edges sorted
// lexicographically. to_json_text emits exactly this byte sequence.
std::string to_json_text(const Hypergraph& h);
Hypergraph from_json_text(const std::string& text);

// Plain-text alternative: first line "n r m" (r = 0 when untagged), then m
// lines of space-separated vertex ids.
std::string to_plain_text(const Hypergraph& h);
Hypergraph from_plain_text(const std::string& text);

// File helpers; format chosen by extension (".json" vs anything else).
// Writers append a trailing newline to the JSON form.
Hypergraph load_hypergraph(const std::filesystem::path& path);
void save_hypergraph(const Hypergraph& h, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

// JSON renderings of the report types (deterministic key order, one line).
std::string to_json_text(const HypergraphStats& s);
std::string to_json_text(const CoverCertificate& c);
std::string to_json_text(const CriticalityReport& r);
std::string to_json_text(const BaseChoice& b);
std::string to_json_text(const ConstructionPlan& p);
std::string to_json_text(const BoundsReport& b);
std::string to_json_text(const OracleResult& o);
std::string greedy_log_json(const GreedyCoverResult& g);

} // namespace crithg
