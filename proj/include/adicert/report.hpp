#pragma once

#include <json.hpp>

#include "adicert/theorems.hpp"

namespace adicert {

/// Order-preserving JSON so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a (64-bit) of the scenario source, as lowercase hex.
std::string scenario_hash(const std::string& text);

Json verdict_json(const Verdict& v);
Json module_json(const FpModule& M);
Json theorem_report_json(const TheoremReport& r);
Json profile_json(const CompletionProfile& p);

/// Human-readable rendering of a RunReport document: one aligned block
/// per task with verdict glyphs ([ok] / [NO] / [??]).
std::string render_text(const Json& run_report);

/// Write via a temporary file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace adicert
