#pragma once

// JSON documents for instances, decompositions and sweeps. Every number is a
// string ("3", "0.25", "1/3") so values stay exact; output always uses "p/q".
//
// Instance:
//   { "vertices": ["A", "B"],
//     "edges":    [{"u": "A", "w": "B", "length": "1"}],
//     "density":  {"A": "1", "B": "1/2"} }
//
// Decomposition:
//   { "tree":        {"vertices": [...], "edges": [...], "density": {...}},
//     "components":  [{"mode": "A", "values": {...}}, ...],
//     "ucat":        1,
//     "provenance":  {"tool": "ucat", "version": "...", "input_digest": "fnv1a64:..."} }

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucat/density.hpp"
#include "ucat/greedy.hpp"
#include "ucat/sweep.hpp"

namespace ucat::io {

inline constexpr std::string_view kToolName = "ucat";
inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string message_;
};

struct InstanceDocument {
  TreePtr tree;
  EdgeLinearDensity density;
};

struct DecompositionDocument {
  Decomposition decomposition;
  std::string tool;
  std::string version;
  std::string input_digest;
};

namespace detail {

// Locates the line of the first occurrence of `needle` at or after `key`'s
// first appearance; falls back to the key's line, then to line 1.
class LineLocator {
 public:
  explicit LineLocator(const std::string& text) : text_(text) {}

  std::size_t line_at(std::size_t offset) const {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') ++line;
    }
    return line;
  }

  std::size_t find(const std::string& key, const std::string& needle = {},
                   std::size_t nth = 0) const {
    std::size_t start = text_.find("\"" + key + "\"");
    if (start == std::string::npos) return 1;
    if (needle.empty()) return line_at(start);
    std::size_t pos = start;
    for (std::size_t i = 0; i <= nth; ++i) {
      std::size_t next = text_.find(needle, i == 0 ? pos : pos + 1);
      if (next == std::string::npos) return line_at(start);
      pos = next;
    }
    return line_at(pos);
  }

 private:
  const std::string& text_;
};

inline bool valid_user_id(const std::string& id) {
  static const std::regex pattern("[A-Za-z0-9][A-Za-z0-9_-]*");
  return std::regex_match(id, pattern);
}

inline bool valid_synthetic_id(const std::string& id) {
  static const std::regex pattern("_s[0-9]+");
  return std::regex_match(id, pattern);
}

struct Context {
  std::string source;
  const std::string& text;
  LineLocator locate;

  [[noreturn]] void fail(std::size_t line, const std::string& message) const {
    throw ParseError(source, line, message);
  }
};

inline Rational number(const Context& ctx, const Json& value, const std::string& key,
                       const std::string& anchor, const std::string& what) {
  std::optional<Rational> parsed;
  if (value.is_string()) {
    parsed = parse_rational(value.get<std::string>());
  } else if (value.is_number_integer() || value.is_number_unsigned()) {
    parsed = parse_rational(value.dump());
  } else if (value.is_number_float()) {
    ctx.fail(ctx.locate.find(key, anchor),
             what + ": write non-integer numbers as strings (\"0.25\", \"1/3\")");
  }
  if (!parsed) {
    ctx.fail(ctx.locate.find(key, anchor), what + ": not an exact number: " + value.dump());
  }
  return *parsed;
}

inline std::string text_field(const Context& ctx, const Json& obj, const std::string& field,
                              const std::string& key, std::size_t nth) {
  if (!obj.is_object() || !obj.contains(field) || !obj[field].is_string()) {
    ctx.fail(ctx.locate.find(key, "{", nth),
             key + "[" + std::to_string(nth) + "]: missing string field '" + field + "'");
  }
  return obj[field].get<std::string>();
}

inline Json parse_json(const Context& ctx) {
  try {
    return Json::parse(ctx.text);
  } catch (const Json::parse_error& e) {
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::string what = e.what();
    if (auto cut = what.find("syntax error"); cut != std::string::npos) what = what.substr(cut);
    ctx.fail(ctx.locate.line_at(offset), what);
  }
}

// vertices/edges/density sections shared by instance and decomposition docs.
inline InstanceDocument parse_tree_sections(const Context& ctx, const Json& root,
                                            bool allow_synthetic) {
  if (!root.is_object()) ctx.fail(1, "expected a JSON object");
  for (const char* section : {"vertices", "edges", "density"}) {
    if (!root.contains(section)) ctx.fail(1, std::string("missing section '") + section + "'");
  }
  const Json& jv = root["vertices"];
  const Json& je = root["edges"];
  const Json& jd = root["density"];
  if (!jv.is_array()) ctx.fail(ctx.locate.find("vertices"), "'vertices' must be an array");
  if (!je.is_array()) ctx.fail(ctx.locate.find("edges"), "'edges' must be an array");
  if (!jd.is_object()) ctx.fail(ctx.locate.find("density"), "'density' must be an object");

  std::vector<VertexId> vertices;
  for (const auto& item : jv) {
    if (!item.is_string()) {
      ctx.fail(ctx.locate.find("vertices"), "vertex ids must be strings: " + item.dump());
    }
    auto id = item.get<std::string>();
    bool ok = valid_user_id(id) || (allow_synthetic && valid_synthetic_id(id));
    if (!ok) {
      ctx.fail(ctx.locate.find("vertices", "\"" + id + "\""),
               "invalid vertex id '" + id + "' (ids match [A-Za-z0-9][A-Za-z0-9_-]*)");
    }
    vertices.emplace_back(id);
  }
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());

  std::vector<Edge> edges;
  std::size_t index = 0;
  for (const auto& item : je) {
    auto u = text_field(ctx, item, "u", "edges", index);
    auto w = text_field(ctx, item, "w", "edges", index);
    for (const auto& end : {u, w}) {
      if (!std::binary_search(sorted.begin(), sorted.end(), VertexId(end))) {
        ctx.fail(ctx.locate.find("edges", "\"" + end + "\""),
                 "edge " + u + "-" + w + " references unknown vertex '" + end + "'");
      }
    }
    if (!item.contains("length")) {
      ctx.fail(ctx.locate.find("edges", "{", index), "edge " + u + "-" + w + " has no length");
    }
    Rational length = number(ctx, item["length"], "edges", "\"" + w + "\"",
                             "length of edge " + u + "-" + w);
    edges.push_back({VertexId(u), VertexId(w), length});
    ++index;
  }

  MetricTree tree(std::move(vertices), std::move(edges));
  if (auto violation = validate(tree)) {
    ctx.fail(ctx.locate.find(violation->kind == ErrorKind::DuplicateVertexId ? "vertices"
                                                                              : "edges"),
             std::string(to_string(violation->kind)) + ": " + violation->detail);
  }
  auto shared = share(std::move(tree));

  ValueMap values;
  for (const auto& [id, value] : jd.items()) {
    if (!shared->contains(VertexId(id))) {
      ctx.fail(ctx.locate.find("density", "\"" + id + "\""),
               "density given for unknown vertex '" + id + "'");
    }
    Rational x = number(ctx, value, "density", "\"" + id + "\"", "density at " + id);
    if (x < 0) {
      ctx.fail(ctx.locate.find("density", "\"" + id + "\""),
               "density at " + id + " is negative");
    }
    values.emplace(VertexId(id), x);
  }
  for (const auto& v : shared->vertices()) {
    if (!values.count(v)) {
      ctx.fail(ctx.locate.find("density"), "no density value for vertex '" + v.str() + "'");
    }
  }
  return {shared, EdgeLinearDensity(shared, std::move(values))};
}

inline Json values_json(const EdgeLinearDensity& f) {
  Json out = Json::object();
  for (const auto& [v, x] : f.values()) out[v.str()] = to_fraction_string(x);
  return out;
}

inline Json tree_json(const EdgeLinearDensity& f) {
  Json out = Json::object();
  Json vertices = Json::array();
  for (const auto& v : f.tree().vertices()) vertices.push_back(v.str());
  Json edges = Json::array();
  for (const auto& e : f.tree().edges()) {
    edges.push_back({{"u", e.u.str()}, {"w", e.w.str()}, {"length", to_fraction_string(e.length)}});
  }
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["density"] = values_json(f);
  return out;
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace detail

inline std::string serialize_instance(const EdgeLinearDensity& f) {
  return detail::tree_json(f).dump(2) + "\n";
}

inline InstanceDocument parse_instance(const std::string& text,
                                       const std::string& source = "<input>") {
  detail::Context ctx{source, text, detail::LineLocator(text)};
  Json root = detail::parse_json(ctx);
  return detail::parse_tree_sections(ctx, root, false);
}

inline std::string input_digest(const EdgeLinearDensity& f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(detail::fnv1a64(serialize_instance(f))));
  return buf;
}

inline std::string serialize_decomposition(const Decomposition& d, const std::string& digest) {
  Json out = Json::object();
  out["tree"] = detail::tree_json(d.input_on_refined);
  Json components = Json::array();
  for (const auto& c : d.components) {
    components.push_back({{"mode", c.mode.str()}, {"values", detail::values_json(c.values)}});
  }
  out["components"] = std::move(components);
  out["ucat"] = d.components.size();
  out["provenance"] = {{"tool", std::string(kToolName)},
                       {"version", std::string(kToolVersion)},
                       {"input_digest", digest}};
  return out.dump(2) + "\n";
}

inline DecompositionDocument parse_decomposition(const std::string& text,
                                                 const std::string& source = "<input>") {
  detail::Context ctx{source, text, detail::LineLocator(text)};
  Json root = detail::parse_json(ctx);
  if (!root.is_object() || !root.contains("tree")) ctx.fail(1, "missing section 'tree'");
  InstanceDocument tree = detail::parse_tree_sections(ctx, root["tree"], true);

  if (!root.contains("components") || !root["components"].is_array()) {
    ctx.fail(1, "missing array section 'components'");
  }
  std::vector<Component> components;
  std::size_t index = 0;
  for (const auto& item : root["components"]) {
    auto mode = detail::text_field(ctx, item, "mode", "components", index);
    if (!tree.tree->contains(VertexId(mode))) {
      ctx.fail(ctx.locate.find("components", "\"" + mode + "\""),
               "component " + std::to_string(index) + " has unknown mode '" + mode + "'");
    }
    if (!item.contains("values") || !item["values"].is_object()) {
      ctx.fail(ctx.locate.find("components", "{", index),
               "component " + std::to_string(index) + " has no 'values' object");
    }
    ValueMap values;
    for (const auto& [id, value] : item["values"].items()) {
      if (!tree.tree->contains(VertexId(id))) {
        ctx.fail(ctx.locate.find("components", "\"" + id + "\""),
                 "component " + std::to_string(index) + " has a value for unknown vertex '" +
                     id + "'");
      }
      Rational x = detail::number(ctx, value, "components", "\"" + id + "\"",
                                  "component " + std::to_string(index) + " at " + id);
      if (x < 0) {
        ctx.fail(ctx.locate.find("components", "\"" + id + "\""),
                 "component " + std::to_string(index) + " is negative at " + id);
      }
      values.emplace(VertexId(id), x);
    }
    if (values.size() != tree.tree->vertex_count()) {
      ctx.fail(ctx.locate.find("components", "{", index),
               "component " + std::to_string(index) + " does not cover every vertex");
    }
    components.push_back({VertexId(mode), EdgeLinearDensity(tree.tree, std::move(values))});
    ++index;
  }

  if (!root.contains("ucat") || !root["ucat"].is_number_unsigned()) {
    ctx.fail(ctx.locate.find("ucat"), "missing nonnegative integer 'ucat'");
  }
  if (root["ucat"].get<std::size_t>() != components.size()) {
    ctx.fail(ctx.locate.find("ucat"), "ucat does not match the number of components");
  }

  DecompositionDocument doc{{tree.tree, std::move(components), tree.density}, "", "", ""};
  if (root.contains("provenance") && root["provenance"].is_object()) {
    const Json& p = root["provenance"];
    doc.tool = p.value("tool", "");
    doc.version = p.value("version", "");
    doc.input_digest = p.value("input_digest", "");
  }
  return doc;
}

inline std::string serialize_sweep(const SweepResult& s, const std::string& digest) {
  Json out = Json::object();
  out["tree"] = detail::tree_json(s.f_refined);
  out["origin"] = s.origin.str();
  Json subdivisions = Json::array();
  for (const auto& sub : s.subdivisions) {
    subdivisions.push_back({{"u", sub.at.u.str()},
                            {"w", sub.at.w.str()},
                            {"t", to_fraction_string(sub.at.t)},
                            {"vertex", sub.created.str()}});
  }
  out["subdivisions"] = std::move(subdivisions);
  out["h"] = detail::values_json(s.h);
  out["remainder"] = detail::values_json(s.remainder);
  out["provenance"] = {{"tool", std::string(kToolName)},
                       {"version", std::string(kToolVersion)},
                       {"input_digest", digest}};
  return out.dump(2) + "\n";
}

// Reads a whole file; a missing file is reported like a parse error.
inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ucat::io
