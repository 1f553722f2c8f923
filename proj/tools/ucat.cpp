#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ucat/io/commands.hpp"

int main(int argc, char** argv) {
  using namespace ucat::io;

  CLI::App app{"Minimal unimodal decompositions of densities on metric trees"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  DecomposeOptions decompose_opts;
  std::string output, render;
  auto* decompose = app.add_subcommand("decompose", "Compute a minimal unimodal decomposition");
  decompose->add_option("input", decompose_opts.input, "Instance file")->required();
  decompose->add_option("--output,-o", output, "Write the decomposition here instead of stdout");
  decompose->add_option("--render", render, "Write a Graphviz DOT rendering here");
  decompose->add_flag("--trace", decompose_opts.trace, "Print one line per greedy step to stderr");

  std::string ucat_input;
  auto* ucat = app.add_subcommand("ucat", "Print the unimodal category");
  ucat->add_option("input", ucat_input, "Instance file")->required();

  std::string check_input, check_decomposition;
  auto* check = app.add_subcommand("check", "Verify a decomposition against an instance");
  check->add_option("input", check_input, "Instance file")->required();
  check->add_option("decomposition", check_decomposition, "Decomposition file")->required();

  std::string oracle_input;
  std::size_t max_k = 5;
  auto* oracle = app.add_subcommand("oracle", "Brute-force unimodal category (small inputs)");
  oracle->add_option("input", oracle_input, "Instance file")->required();
  oracle->add_option("--max-k", max_k, "Largest component count to try")->capture_default_str();

  std::string sweep_input, sweep_vertex;
  auto* sweep = app.add_subcommand("sweep", "Sweep from one vertex; print h and the remainder");
  sweep->add_option("input", sweep_input, "Instance file")->required();
  sweep->add_option("--vertex", sweep_vertex, "Vertex to sweep from")->required();

  std::uint64_t seed = 0;
  std::size_t vertices = 8;
  std::uint64_t max_value = 4;
  auto* gen = app.add_subcommand("gen", "Print a seeded random instance");
  gen->add_option("--seed", seed, "Random seed")->capture_default_str();
  gen->add_option("--vertices", vertices, "Maximum vertex count")->capture_default_str();
  gen->add_option("--max-value", max_value, "Largest vertex value")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  return guarded(
      [&] {
        if (*decompose) {
          if (!output.empty()) decompose_opts.output = output;
          if (!render.empty()) decompose_opts.render = render;
          return cmd_decompose(decompose_opts, out, err);
        }
        if (*ucat) return cmd_ucat(ucat_input, out, err);
        if (*check) return cmd_check(check_input, check_decomposition, out, err);
        if (*oracle) return cmd_oracle(oracle_input, max_k, out, err);
        if (*sweep) return cmd_sweep(sweep_input, sweep_vertex, out, err);
        return cmd_gen(seed, vertices, max_value, out, err);
      },
      err);
}
