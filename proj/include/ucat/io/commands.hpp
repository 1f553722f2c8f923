#pragma once

// Command implementations behind the `ucat` executable. Each returns the
// process exit code and writes only to the streams it is given.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "ucat/greedy.hpp"
#include "ucat/io/document.hpp"
#include "ucat/io/dot.hpp"
#include "ucat/sweep.hpp"
#include "ucat/verify/check.hpp"
#include "ucat/verify/generator.hpp"
#include "ucat/verify/oracle.hpp"

namespace ucat::io {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kOracleBoundExceeded = 3,
};

struct DecomposeOptions {
  std::string input;
  std::optional<std::string> output;
  std::optional<std::string> render;
  bool trace = false;
};

namespace detail {

inline bool write_text(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (out) out << text;
  if (!out) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

inline void print_report(const verify::CheckReport& report, std::ostream& out) {
  out << "components: " << report.count << "\n";
  out << "sum: " << (report.sum_ok ? "ok" : "FAILED") << "\n";
  for (const auto& v : report.sum_failures) {
    out << "  sum mismatch at vertex " << v << "\n";
  }
  for (const auto& c : report.components) {
    out << "component " << c.index << ": ";
    if (c.ok) {
      out << "unimodal\n";
    } else if (c.zero_component) {
      out << "FAILED (identically zero)\n";
    } else if (c.violating_edge) {
      out << "FAILED (rises along " << c.violating_edge->first << " -> "
          << c.violating_edge->second << ")\n";
    } else {
      out << "FAILED (recorded mode does not attain the maximum)\n";
    }
  }
  out << "overall: " << (report.overall ? "ok" : "FAILED") << "\n";
}

}  // namespace detail

inline int cmd_decompose(const DecomposeOptions& opts, std::ostream& out, std::ostream& err) {
  InstanceDocument doc = parse_instance(read_file(opts.input), opts.input);
  DecomposeOutput result = decompose(doc.density);

  if (opts.trace) {
    for (const auto& e : result.trace) {
      err << "iteration " << e.iteration << ": forced " << e.forced << ", subdivided [";
      for (std::size_t i = 0; i < e.subdivided.size(); ++i) {
        err << (i ? ", " : "") << e.subdivided[i];
      }
      err << "], remaining mass " << to_display_string(e.remaining_mass) << "\n";
    }
  }

  auto report = verify::check_decomposition(doc.density, result.decomposition);
  if (!report.overall) {
    err << "internal error: decomposition failed its own check\n";
    detail::print_report(report, err);
    return kCheckFailed;
  }

  std::string text = serialize_decomposition(result.decomposition, input_digest(doc.density));
  if (opts.output) {
    if (!detail::write_text(*opts.output, text, err)) return kInvalidInput;
  } else {
    out << text;
  }
  if (opts.render) {
    if (!detail::write_text(*opts.render, render_dot(result.decomposition), err)) {
      return kInvalidInput;
    }
  }
  return kSuccess;
}

inline int cmd_ucat(const std::string& input, std::ostream& out, std::ostream&) {
  InstanceDocument doc = parse_instance(read_file(input), input);
  out << ucat::ucat(doc.density) << "\n";
  return kSuccess;
}

inline int cmd_check(const std::string& input, const std::string& decomposition,
                     std::ostream& out, std::ostream& err) {
  InstanceDocument doc = parse_instance(read_file(input), input);
  DecompositionDocument dec = parse_decomposition(read_file(decomposition), decomposition);
  verify::CheckReport report;
  try {
    report = verify::check_decomposition(doc.density, dec.decomposition);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TreeMismatch) throw;
    err << "error: " << decomposition << " does not decompose " << input << ": "
        << e.detail() << "\n";
    return kInvalidInput;
  }
  // The stored copy of the input must agree with the real input.
  auto projected = verify::project_onto_refinement(doc.density, dec.decomposition.refined_tree);
  if (projected.values() != dec.decomposition.input_on_refined.values()) {
    err << "error: " << decomposition << " was produced from a different density\n";
    return kInvalidInput;
  }
  detail::print_report(report, out);
  return report.overall ? kSuccess : kCheckFailed;
}

inline int cmd_oracle(const std::string& input, std::size_t max_k, std::ostream& out,
                      std::ostream& err) {
  InstanceDocument doc = parse_instance(read_file(input), input);
  if (doc.tree->vertex_count() > 8) {
    err << "warning: " << doc.tree->vertex_count()
        << " vertices; the oracle enumerates vertex multisets and may be slow\n";
  }
  auto k = verify::ucat_oracle(doc.density, max_k);
  if (!k) {
    err << "no decomposition with at most " << max_k << " components\n";
    return kOracleBoundExceeded;
  }
  out << *k << "\n";
  return kSuccess;
}

inline int cmd_sweep(const std::string& input, const std::string& vertex, std::ostream& out,
                     std::ostream& err) {
  InstanceDocument doc = parse_instance(read_file(input), input);
  if (!doc.tree->contains(VertexId(vertex))) {
    err << "error: unknown vertex '" << vertex << "'\n";
    return kInvalidInput;
  }
  SweepResult s = sweep(doc.density, VertexId(vertex));
  out << serialize_sweep(s, input_digest(doc.density));
  return kSuccess;
}

inline int cmd_gen(std::uint64_t seed, std::size_t vertices, std::uint64_t max_value,
                   std::ostream& out, std::ostream& err) {
  if (vertices < 1) {
    err << "error: --vertices must be at least 1\n";
    return kInvalidInput;
  }
  auto inst = verify::gen_instance(seed, vertices, max_value);
  out << serialize_instance(inst.density);
  return kSuccess;
}

// Maps library exceptions onto the exit-code contract.
template <typename Fn>
int guarded(Fn&& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    bool input_problem = e.kind() != ErrorKind::NonTermination;
    return input_problem ? kInvalidInput : kCheckFailed;
  }
}

}  // namespace ucat::io
