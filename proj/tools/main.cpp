#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acyclic edge coloring of 3-sparse graphs"};
  app.require_subcommand(1);

  aec::cli::ColorArgs color_args;
  auto* color = app.add_subcommand(
      "color", "peel and reinsert to build an acyclic edge coloring");
  color->add_option("input", color_args.input, "edge-list file")->required();
  color->add_option("--mode", color_args.mode, "auto|theorem|corollary")
      ->check(CLI::IsMember({"auto", "theorem", "corollary"}));
  color->add_flag("--checked", color_args.checked,
                  "re-verify after every recoloring step");
  color->add_option("--trace", color_args.trace_path,
                    "write extension traces as JSON");
  color->add_option("--format", color_args.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  color->add_option("--output,-o", color_args.output, "output file");

  aec::cli::VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "check a coloring for properness and bichromatic cycles");
  verify->add_option("graph", verify_args.graph, "edge-list file")->required();
  verify->add_option("coloring", verify_args.coloring, "coloring file")
      ->required();

  aec::cli::OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "exact acyclic chromatic index by exhaustive search");
  oracle->add_option("graph", oracle_args.graph, "edge-list file")->required();
  oracle->add_option("--kmax", oracle_args.kmax,
                     "largest palette to try (default delta+2)");
  oracle->add_option("--budget", oracle_args.budget, "node budget");
  oracle->add_option("--max-edges", oracle_args.max_edges,
                     "edge-count guard (raise to override)");
  oracle->add_flag("--witness", oracle_args.witness,
                   "print one optimal coloring");

  aec::cli::GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate graphs and corpus manifests");
  gen->add_option("--family", gen_args.family,
                  "k4|k33|path|cycle|star|biregular|random");
  gen->add_option("--n", gen_args.n, "vertex count for path/cycle/star");
  gen->add_option("--a", gen_args.a, "left side size (biregular)");
  gen->add_option("--delta", gen_args.delta, "right degree (biregular)");
  gen->add_option("--delta-cap", gen_args.delta_cap, "degree cap (random)");
  gen->add_option("--m", gen_args.m, "edge target (random)");
  gen->add_option("--seed", gen_args.seed, "PRNG seed (random)");
  gen->add_flag("--require-qualifying,!--no-require-qualifying",
                gen_args.require_qualifying,
                "retry until a qualifying edge exists");
  gen->add_option("--output,-o", gen_args.output, "output file");
  gen->add_option("--manifest-out", gen_args.manifest_out,
                  "write a corpus manifest instead of one graph");
  gen->add_option("--count", gen_args.corpus_count,
                  "number of corpus entries for --manifest-out");

  aec::cli::BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "run the solver over a corpus manifest and summarize");
  bench->add_option("manifest", bench_args.manifest, "manifest JSON")
      ->required();
  bench->add_option("--jobs,-j", bench_args.jobs, "worker threads");
  bench->add_option("--format", bench_args.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI11_PARSE(app, argc, argv);

  if (color->parsed())
    return aec::cli::cmd_color(color_args, std::cout, std::cerr);
  if (verify->parsed())
    return aec::cli::cmd_verify(verify_args, std::cout, std::cerr);
  if (oracle->parsed())
    return aec::cli::cmd_oracle(oracle_args, std::cout, std::cerr);
  if (gen->parsed()) return aec::cli::cmd_gen(gen_args, std::cout, std::cerr);
  if (bench->parsed())
    return aec::cli::cmd_bench(bench_args, std::cout, std::cerr);
  return 1;
}
