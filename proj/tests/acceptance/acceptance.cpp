// Acceptance suite: one PASS/FAIL line per criterion. `--only N` runs a single
// criterion; the exit status is nonzero when any gating criterion fails.
//
// Tolerances are all exact (rational equality) except the informative timing
// criterion, whose ratio threshold is 2.5 and never gates.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ucat/forced.hpp"
#include "ucat/greedy.hpp"
#include "ucat/io/commands.hpp"
#include "ucat/io/document.hpp"
#include "ucat/sweep.hpp"
#include "ucat/verify/check.hpp"
#include "ucat/verify/generator.hpp"
#include "ucat/verify/interval.hpp"
#include "ucat/verify/oracle.hpp"

#ifndef UCAT_FIXTURE_DIR
#define UCAT_FIXTURE_DIR "tests/fixtures"
#endif

using namespace ucat;
using verify::gen_instance;

namespace {

constexpr std::size_t kOracleMaxK = 7;
constexpr double kTimingRatioLimit = 2.5;

struct Outcome {
  bool pass;
  std::string detail;
  bool gating = true;
};

std::string seed_list(const std::vector<std::uint64_t>& seeds) {
  std::ostringstream s;
  for (std::size_t i = 0; i < seeds.size() && i < 10; ++i) s << (i ? "," : "") << seeds[i];
  if (seeds.size() > 10) s << ",...";
  return s.str();
}

Outcome failures_outcome(std::size_t total, const std::vector<std::uint64_t>& bad,
                         const std::string& what) {
  std::ostringstream s;
  s << total - bad.size() << "/" << total << " " << what;
  if (!bad.empty()) s << "; failing seeds " << seed_list(bad);
  return {bad.empty(), s.str()};
}

// 1. Greedy ucat equals the brute-force oracle.
Outcome minimality_vs_oracle() {
  std::vector<std::uint64_t> bad;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto inst = gen_instance(seed, 7, 4);
    auto oracle = verify::ucat_oracle(inst.density, kOracleMaxK);
    if (!oracle || *oracle != ucat::ucat(inst.density)) bad.push_back(seed);
  }
  return failures_outcome(200, bad, "instances agree with the oracle");
}

// 2. On paths greedy, the interval peel, and (short paths) the oracle agree.
Outcome path_equivalence() {
  std::vector<std::uint64_t> bad;
  std::size_t oracle_checked = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    auto [inst, values] = verify::gen_path(seed, 30, 9);
    std::size_t greedy = ucat::ucat(inst.density);
    bool ok = greedy == verify::interval_ucat(values);
    if (ok && values.size() <= 7) {
      ++oracle_checked;
      auto oracle = verify::ucat_oracle(inst.density, kOracleMaxK);
      ok = oracle && *oracle == greedy;
    }
    if (!ok) bad.push_back(seed);
  }
  auto out = failures_outcome(500, bad, "paths agree");
  out.detail += " (" + std::to_string(oracle_checked) + " also against the oracle)";
  return out;
}

// 3. Every decomposition passes the independent checker.
Outcome decomposition_validity() {
  std::vector<std::uint64_t> bad;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    auto inst = gen_instance(seed, 40, 9);
    auto d = decompose(inst.density).decomposition;
    if (!verify::check_decomposition(inst.density, d).overall) bad.push_back(seed);
  }
  return failures_outcome(1000, bad, "decompositions valid");
}

// h never rises walking away from v.
bool monotone_away_from(const EdgeLinearDensity& h, const VertexId& v) {
  Orientation o = root_at(h.tree(), v);
  for (const auto& x : o.order) {
    if (x == v) continue;
    if (h.at(x) > h.at(*o.parent_of(x))) return false;
  }
  return true;
}

// 4. Sweep contracts.
Outcome sweep_contracts() {
  std::vector<std::uint64_t> bad;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    auto inst = gen_instance(seed, 20, 9);
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    const auto& vs = inst.tree->vertices();
    VertexId v = vs[rng() % vs.size()];
    SweepResult s = sweep(inst.density, v);

    bool ok = s.h.same_tree(s.f_refined) && s.remainder.same_tree(s.f_refined);
    // The refinement must not change the function itself.
    ok = ok && verify::project_onto_refinement(inst.density, s.refined_tree) == s.f_refined;
    for (const auto& x : s.refined_tree->vertices()) {
      if (!ok) break;
      const Rational& f = s.f_refined.at(x);
      const Rational& h = s.h.at(x);
      const Rational& r = s.remainder.at(x);
      ok = h >= 0 && h <= f && r >= 0 && r == f - h;
    }
    ok = ok && s.remainder.at(v) == 0;
    if (ok && inst.density.at(v) > 0) {
      ok = s.h.at(v) == s.h.max_value() && monotone_away_from(s.h, v) && unimodal(s.h);
    }
    if (!ok) bad.push_back(seed);
  }
  return failures_outcome(1000, bad, "sweeps satisfy every contract");
}

// 5. ucat is invariant under subdivision and under contracting constant edges.
Outcome homeomorphism_invariance() {
  std::vector<std::uint64_t> bad;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto inst = gen_instance(seed, 12, 4);
    std::size_t base = ucat::ucat(inst.density);
    std::mt19937_64 rng(seed * 7919);

    EdgeLinearDensity f = inst.density;
    bool subdivided = true;
    for (int i = 0; i < 3 && f.tree().edge_count() > 0; ++i) {
      const auto& edges = f.tree().edges();
      const Edge& e = edges[rng() % edges.size()];
      long den = 2 + static_cast<long>(rng() % 8);
      long num = 1 + static_cast<long>(rng() % (den - 1));
      EdgePoint p{e.u, e.w, ratio(num, den)};
      auto [refined, created] = subdivide(f.tree(), p);
      f = extend_by_subdivision(f, share(std::move(refined)), p, created);
    }
    if (f.tree().vertex_count() < inst.tree->vertex_count()) subdivided = false;

    bool ok = subdivided && ucat::ucat(f) == base &&
              ucat::ucat(normalize(inst.density).density) == base &&
              ucat::ucat(normalize(f).density) == base;
    if (!ok) bad.push_back(seed);
  }
  return failures_outcome(200, bad, "instances keep their ucat");
}

// 6. The forced vertex is a mode of every minimal decomposition: no k-multiset
// of modes avoiding it is feasible. Also reports the weaker statement that some
// minimal decomposition has a mode there.
Outcome forced_vertex_soundness() {
  std::vector<std::uint64_t> bad, weak_bad;
  std::size_t considered = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto inst = gen_instance(seed, 7, 4);
    std::size_t k = ucat::ucat(inst.density);
    if (k == 0) continue;
    ++considered;
    VertexId forced = find_forced_vertex(inst.density);

    std::vector<VertexId> others;
    for (const auto& v : inst.tree->vertices()) {
      if (v != forced) others.push_back(v);
    }
    bool avoidable = verify::for_each_multiset(others, k, [&](const std::vector<VertexId>& m) {
      return verify::feasible_with_modes(inst.density, m).has_value();
    });
    if (avoidable) bad.push_back(seed);

    bool hosted = false;
    if (k == 1) {
      hosted = verify::feasible_with_modes(inst.density, {forced}).has_value();
    } else {
      hosted = verify::for_each_multiset(
          inst.tree->vertices(), k - 1, [&](const std::vector<VertexId>& rest) {
            std::vector<VertexId> modes{forced};
            modes.insert(modes.end(), rest.begin(), rest.end());
            return verify::feasible_with_modes(inst.density, modes).has_value();
          });
    }
    if (!hosted) weak_bad.push_back(seed);
  }
  auto out = failures_outcome(considered, bad,
                              "instances have no minimal mode set avoiding the forced vertex");
  out.detail += "; informative: forced vertex hosts a mode of some minimal decomposition in " +
                std::to_string(considered - weak_bad.size()) + "/" + std::to_string(considered);
  return out;
}

// 7. Hand-derived fixtures.
Outcome hand_fixtures() {
  std::vector<std::string> problems;

  {
    auto tree = share(MetricTree::make({"c", "a", "b", "d"}, {{"c", "a", Rational(1)},
                                                              {"c", "b", Rational(1)},
                                                              {"c", "d", Rational(1)}}));
    EdgeLinearDensity f(tree, {{"c", Rational(1)}, {"a", Rational(2)},
                               {"b", Rational(2)}, {"d", Rational(2)}});
    auto d = decompose(f).decomposition;
    std::vector<VertexId> modes;
    for (const auto& c : d.components) modes.push_back(c.mode);
    std::sort(modes.begin(), modes.end());
    if (d.ucat() != 3 || modes != std::vector<VertexId>{"a", "b", "d"}) problems.push_back("star");
  }
  {
    auto inst = verify::path_instance({Rational(2), Rational(3), Rational(0)});
    SweepResult s = sweep(inst.density, "v1");
    bool ok = s.subdivisions.size() == 1 && s.subdivisions[0].at.t == ratio(2, 3) &&
              s.subdivisions[0].at.u == VertexId("v2") && s.subdivisions[0].at.w == VertexId("v3") &&
              s.f_refined.at(s.subdivisions[0].created) == 1;
    if (!ok) problems.push_back("path (2,3,0) sweep");
  }
  {
    auto inst = verify::path_instance(
        {Rational(1), Rational(2), Rational(1), Rational(2), Rational(1)});
    auto d = decompose(inst.density).decomposition;
    std::vector<VertexId> modes;
    for (const auto& c : d.components) modes.push_back(c.mode);
    if (d.ucat() != 2 || modes != std::vector<VertexId>{"v2", "v4"}) {
      problems.push_back("path (1,2,1,2,1)");
    }
  }
  std::string detail = problems.empty() ? "3/3 fixtures match" : "mismatch:";
  for (const auto& p : problems) detail += " " + p;
  return {problems.empty(), detail};
}

double mean_decompose_seconds(const std::vector<EdgeLinearDensity>& inputs) {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  for (const auto& f : inputs) {
    auto d = decompose(f);
    if (d.decomposition.components.empty() && !support_is_empty(f)) std::abort();
  }
  return std::chrono::duration<double>(clock::now() - start).count() / inputs.size();
}

// Appends a strictly decreasing arm of `length` vertices at the global maximum.
EdgeLinearDensity with_arm(const EdgeLinearDensity& f, std::size_t length) {
  VertexId top = f.tree().vertices().front();
  for (const auto& v : f.tree().vertices()) {
    if (f.at(v) > f.at(top)) top = v;
  }
  std::vector<VertexId> vertices = f.tree().vertices();
  std::vector<Edge> edges = f.tree().edges();
  ValueMap values = f.values();
  VertexId prev = top;
  for (std::size_t i = 1; i <= length; ++i) {
    VertexId a("arm" + std::to_string(i));
    vertices.push_back(a);
    edges.push_back({prev, a, Rational(1)});
    values.emplace(a, f.at(top) * Rational(static_cast<long>(length + 1 - i)) /
                          Rational(static_cast<long>(length + 1)));
    prev = a;
  }
  return EdgeLinearDensity(share(MetricTree::make(std::move(vertices), std::move(edges))),
                           std::move(values));
}

// 8. Doubling |V| with monotone arms at most about doubles decompose time.
Outcome complexity_smoke() {
  std::vector<EdgeLinearDensity> small, large;
  bool same_ucat = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = gen_instance(seed + 5000, 30, 9);
    std::size_t n = inst.tree->vertex_count();
    small.push_back(with_arm(inst.density, 200 - n));
    large.push_back(with_arm(inst.density, 400 - n));
    same_ucat = same_ucat && ucat::ucat(small.back()) == ucat::ucat(large.back());
  }
  mean_decompose_seconds(small);  // warm-up
  double a = mean_decompose_seconds(small);
  double b = mean_decompose_seconds(large);
  double r = a > 0 ? b / a : 0;
  std::ostringstream s;
  s.precision(3);
  s << "|V| 200 -> 400: mean " << a * 1e3 << " ms -> " << b * 1e3 << " ms, ratio " << r
    << " (limit " << kTimingRatioLimit << ", ucat " << (same_ucat ? "fixed" : "CHANGED") << ")";
  return {r <= kTimingRatioLimit && same_ucat, s.str(), false};
}

// 9. decompose | check round trip through files, and document round trips.
Outcome cli_round_trip() {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ucat_acceptance_c9";
  fs::create_directories(dir);
  std::vector<std::uint64_t> bad;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto inst = gen_instance(seed, 15, 6);
    std::string input = (dir / "instance.json").string();
    std::string output = (dir / "decomposition.json").string();
    std::ofstream(input) << io::serialize_instance(inst.density);
    std::ostringstream out, err;
    int code = io::guarded(
        [&] {
          int c = io::cmd_decompose({input, output, std::nullopt, false}, out, err);
          return c != io::kSuccess ? c : io::cmd_check(input, output, out, err);
        },
        err);
    if (code != io::kSuccess) bad.push_back(seed);
  }
  fs::remove_all(dir);

  std::vector<std::string> fixture_problems;
  for (const auto& entry : fs::directory_iterator(UCAT_FIXTURE_DIR)) {
    std::string name = entry.path().filename().string();
    std::string text = io::read_file(entry.path().string());
    try {
      auto doc = io::parse_instance(text, name);
      auto again = io::parse_instance(io::serialize_instance(doc.density), name);
      if (!(again.density == doc.density)) fixture_problems.push_back(name);
      auto d = decompose(doc.density).decomposition;
      std::string digest = io::input_digest(doc.density);
      std::string first = io::serialize_decomposition(d, digest);
      auto parsed = io::parse_decomposition(first, name);
      if (io::serialize_decomposition(parsed.decomposition, parsed.input_digest) != first) {
        fixture_problems.push_back(name + " (decomposition)");
      }
    } catch (const io::ParseError&) {
      // Deliberately malformed fixtures must stay malformed.
      if (name != "bad_edge.json") fixture_problems.push_back(name + " (parse)");
    }
  }
  auto out = failures_outcome(100, bad, "instances round-trip decompose | check");
  out.pass = out.pass && fixture_problems.empty();
  out.detail += fixture_problems.empty() ? "; all fixtures round-trip" : "; fixture mismatch:";
  for (const auto& p : fixture_problems) out.detail += " " + p;
  return out;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--only N]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "minimality vs oracle", minimality_vs_oracle},
      {2, "path equivalence", path_equivalence},
      {3, "decomposition validity", decomposition_validity},
      {4, "sweep contracts", sweep_contracts},
      {5, "homeomorphism invariance", homeomorphism_invariance},
      {6, "forced-vertex soundness", forced_vertex_soundness},
      {7, "hand-derived fixtures", hand_fixtures},
      {8, "complexity smoke", complexity_smoke},
      {9, "cli round-trip", cli_round_trip},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.number != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* verdict = o.pass ? "PASS" : (o.gating ? "FAIL" : "INFO");
    std::printf("[%s] criterion %d %s: %s (%.1fs)\n", verdict, c.number, c.name,
                o.detail.c_str(), secs);
    if (!o.pass && o.gating) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
