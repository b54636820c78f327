#include "rainbow/io.hpp"

#include <fstream>
#include <sstream>

#include "rainbow/errors.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/stress.hpp"

namespace rainbow {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

Json to_json(const Instance& instance) {
  ojson classes = ojson::array();
  for (const ColourClass& cls : instance.classes())
    classes.push_back({{"colour", cls.colour()}, {"cliques", cls.cliques()}});
  return {{"n", instance.colour_count()}, {"vertex_count", instance.vertex_count()}, {"classes", classes}};
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "{\n  \"n\": " << instance.colour_count() << ",\n  \"vertex_count\": " << instance.vertex_count()
      << ",\n  \"classes\": [";
  const auto& classes = instance.classes();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const ojson line = {{"colour", classes[i].colour()}, {"cliques", classes[i].cliques()}};
    out << (i ? ",\n    " : "\n    ") << line.dump();
  }
  out << (classes.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

namespace {

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(where + (where.empty() ? "" : ".") + name + ": missing");
  return *it;
}

std::uint64_t natural(const json& value, const std::string& where) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0))
    throw ParseError(where + ": expected a non-negative integer");
  const auto x = value.get<std::uint64_t>();
  if (x > 0xffffffffULL) throw ParseError(where + ": value too large");
  return x;
}

const json& array(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array");
  return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text, "instance");
  const std::size_t n = natural(field(doc, "n", ""), "n");
  const std::size_t vcount = natural(field(doc, "vertex_count", ""), "vertex_count");
  const json& classes = array(field(doc, "classes", ""), "classes");
  std::vector<ColourClass> parsed;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string at = "classes[" + std::to_string(i) + "]";
    const Colour colour = static_cast<Colour>(natural(field(classes[i], "colour", at), at + ".colour"));
    const json& cliques = array(field(classes[i], "cliques", at), at + ".cliques");
    ColourClass cls(colour);
    for (std::size_t j = 0; j < cliques.size(); ++j) {
      const std::string cat = at + ".cliques[" + std::to_string(j) + "]";
      const json& clique = array(cliques[j], cat);
      std::vector<Vertex> vs;
      for (std::size_t k = 0; k < clique.size(); ++k)
        vs.push_back(static_cast<Vertex>(natural(clique[k], cat + "[" + std::to_string(k) + "]")));
      cls.add_clique(vs);
    }
    parsed.push_back(std::move(cls));
  }
  Instance instance(n, vcount, std::move(parsed));
  if (!instance.valid()) throw ParseError("invalid instance: " + instance.violations().front().message());
  return instance;
}

Json to_json(const RainbowMatching& m) {
  ojson pairs = ojson::array();
  for (const auto& p : m.pairs) pairs.push_back({p.a, p.b});
  return {{"pairs", pairs}, {"colours", m.colours}};
}

Json to_json(const SolveResult& result) {
  ojson out = {{"size", result.best.size()},
              {"optimal", result.optimal},
              {"nodes", result.nodes_explored},
              {"reason", std::string(to_string(result.reason))}};
  const ojson m = to_json(result.best);
  out["pairs"] = m["pairs"];
  out["colours"] = m["colours"];
  return out;
}

RainbowMatching parse_matching(std::string_view text) {
  const json doc = parse_json(text, "matching");
  const json& pairs = array(field(doc, "pairs", ""), "pairs");
  const json& colours = array(field(doc, "colours", ""), "colours");
  if (pairs.size() != colours.size()) throw ParseError("pairs and colours differ in length");
  RainbowMatching m;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string at = "pairs[" + std::to_string(i) + "]";
    const json& p = array(pairs[i], at);
    if (p.size() != 2) throw ParseError(at + ": expected two vertices");
    const auto a = static_cast<Vertex>(natural(p[0], at + "[0]"));
    const auto b = static_cast<Vertex>(natural(p[1], at + "[1]"));
    if (a == b) throw ParseError(at + ": degenerate pair");
    m.add(EdgePair(a, b), static_cast<Colour>(natural(colours[i], "colours[" + std::to_string(i) + "]")));
  }
  return m;
}

Json to_json(const SamplingReport& report) {
  ojson colours = ojson::array();
  for (std::size_t c = 0; c < report.colours.size(); ++c) {
    const ColourSample& s = report.colours[c];
    colours.push_back({{"colour", c},
                       {"e_c", s.e_c},
                       {"v_c", s.v_c},
                       {"expected_e_c", s.expected_e_c},
                       {"chernoff", s.chernoff},
                       {"survivor_cover", s.survivor_cover},
                       {"conservative_cover", s.conservative_cover},
                       {"sparse", s.sparse},
                       {"cover_dropped", s.cover_dropped}});
  }
  ojson out = {{"rng", std::string(kRngAlgorithm)},
              {"seed", report.seed},
              {"n", report.n},
              {"vertex_count", report.vertex_count},
              {"p", report.p},
              {"sample_size", report.sample.size()},
              {"sample", report.sample},
              {"sqrt_n", report.sqrt_n},
              {"cover_floor", report.cover_floor},
              {"sparse_count", report.sparse_count},
              {"cover_drop_count", report.cover_drop_count},
              {"chernoff_sum", report.chernoff_sum},
              {"colours", colours}};
  if (report.combined) {
    const CombinedSolve& c = *report.combined;
    out["combined"] = {{"outer_size", c.outer_size},
                       {"outer_reason", std::string(to_string(c.outer_reason))},
                       {"inner_size", c.inner_size},
                       {"size", c.matching.size()},
                       {"valid", c.valid},
                       {"matching", to_json(c.matching)}};
  }
  return out;
}

Json to_json(const LemmaAuditReport& report) {
  auto tally = [](const VerdictTally& t) {
    return ojson{{"vacuous", t.vacuous}, {"holds", t.holds}, {"violations", t.violations}};
  };
  return {{"rng", std::string(kRngAlgorithm)},
          {"seed", report.seed},
          {"maximum_size", report.maximum_size},
          {"maximum_certified", report.maximum_certified},
          {"matchings", report.matchings},
          {"horn_certificates", report.horn_certificates},
          {"horn_counting", tally(report.counting)},
          {"observation", tally(report.observation)},
          {"aux_validated", report.aux_validated},
          {"aux_audited", report.aux_audited},
          {"findings", report.findings}};
}

Json to_json(const StressReport& report) {
  ojson failures = ojson::array();
  for (const StressFailure& f : report.failures) failures.push_back(to_json(f));
  return {{"rng", std::string(kRngAlgorithm)},
          {"n", report.n},
          {"v", report.v},
          {"max_multiplicity", report.max_multiplicity},
          {"seed", report.seed},
          {"trials", report.trials},
          {"successes", report.successes},
          {"failures", report.failures.size()},
          {"failure_list", failures}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace rainbow
