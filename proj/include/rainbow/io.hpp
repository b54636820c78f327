#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rainbow/audit.hpp"
#include "rainbow/instance.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/solvers.hpp"

namespace rainbow {

/// Reports keep their fields in declaration order.
using Json = nlohmann::ordered_json;

struct StressReport;
struct StressFailure;

/// Canonical text: {"n", "vertex_count", "classes"} with one class per line.
/// Equal instances serialize to identical bytes.
std::string serialize_instance(const Instance& instance);

/// Parses and validates an instance. Throws ParseError naming the offending
/// element (e.g. "classes[2].cliques[1][0]") or the first violation.
Instance parse_instance(std::string_view text);

Json to_json(const Instance& instance);
Json to_json(const RainbowMatching& m);
/// {size, optimal, nodes, reason, pairs, colours}
Json to_json(const SolveResult& result);
Json to_json(const SamplingReport& report);
Json to_json(const LemmaAuditReport& report);
/// Replay bundle {spec, seed, trial, instance, certificate}.
Json to_json(const StressFailure& failure);
Json to_json(const StressReport& report);

/// Reads {"pairs": [[a, b], ...], "colours": [...]}; solve results qualify.
RainbowMatching parse_matching(std::string_view text);

std::string read_file(const std::filesystem::path& path);
/// Writes atomically enough for replay files: temp file, then rename.
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace rainbow
