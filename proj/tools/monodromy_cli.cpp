#include <CLI11.hpp>

#include "mono/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"monodromy groups of genus-1 and hyperelliptic families"};
  app.require_subcommand(1);

  mono::RunConfig cfg;
  auto add_common = [&cfg](CLI::App* cmd, bool needs_input) {
    if (needs_input) cmd->add_option("--input", cfg.input_path, "family file (JSON)")->required();
    cmd->add_option("--output", cfg.output_path, "report file (default: stdout)");
    cmd->add_option("--precision", cfg.precision_bits, "working precision in bits (>= 53)");
    cmd->add_option("--max-cosets", cfg.max_cosets, "coset enumeration budget");
    cmd->add_option("--seed", cfg.seed, "deterministic seed");
    cmd->add_flag("--quiet", cfg.quiet, "suppress stdout report");
  };
  add_common(app.add_subcommand("analyze", "monodromy group of y^2 = x^3 + p(t)x + q(t)"), true);
  add_common(app.add_subcommand("twist", "verify the quadratic-twist relation"), true);
  add_common(app.add_subcommand("kodaira", "fiber types, sum of e, and the index bound"), true);
  add_common(app.add_subcommand("hyperell", "mod-2 monodromy of y^2 = f(x, t)"), true);
  add_common(app.add_subcommand("quartic", "pencil of lines through a smooth plane quartic"), true);
  auto* st = app.add_subcommand("selftest", "run the bundled corpus");
  add_common(st, false);
  st->add_option("--corpus", cfg.corpus_dir, "corpus directory (default: tests/corpus)");

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();
  return mono::run(cfg, nullptr);
}
