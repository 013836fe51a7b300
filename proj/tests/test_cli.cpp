#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <fstream>

#include "mono/cli.hpp"

using namespace mono;

static std::string corpus_dir;

TEST_CASE("reports are byte-identical across runs") {
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.input_path = corpus_dir + "/full_cubic.json";
  cfg.quiet = true;
  Json a, b;
  CHECK(run(cfg, &a) == kOk);
  CHECK(run(cfg, &b) == kOk);
  CHECK(a.dump() == b.dump());
  // a different seed changes frames (hence generators) but not index data
  cfg.seed = 7;
  Json c;
  CHECK(run(cfg, &c) == kOk);
  for (const char* key : {"sl_index", "psl_index", "contains_minus_I", "mod2_image_order"})
    CHECK(c.at("subgroup").at(key) == a.at("subgroup").at(key));
}

TEST_CASE("error taxonomy maps to exit codes") {
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.quiet = true;
  // parse error
  cfg.input_path = corpus_dir + "/no_such_file.json";
  Json out;
  CHECK(run(cfg, &out) == kParseError);
  CHECK(out.at("error") == "parse");
  // isotrivial family
  std::string tmp = "/tmp/mono_iso_test.json";
  {
    std::ofstream f(tmp);
    f << R"({"label": "iso", "p": "0", "q": "1"})";
  }
  cfg.input_path = tmp;
  CHECK(run(cfg, &out) == kIsotrivial);
  CHECK(out.at("error") == "isotrivial_family");
  // config validation
  cfg.precision_bits = 32;
  CHECK(run(cfg, &out) == kParseError);
  cfg.precision_bits = 128;
  cfg.max_cosets = 0;
  CHECK(run(cfg, &out) == kParseError);
}

TEST_CASE("budget exhaustion is reported as undetermined, not infinite") {
  std::string tmp = "/tmp/mono_budget_test.json";
  {
    std::ofstream f(tmp);
    // the Legendre family needs a few dozen cosets; a budget of 2 cannot close
    f << R"({"label": "tight", "p": "t - (1+t)^2/3", "q": "(1+t)*t/3 - 2*(1+t)^3/27"})";
  }
  RunConfig cfg;
  cfg.command = "analyze";
  cfg.input_path = tmp;
  cfg.quiet = true;
  cfg.max_cosets = 2;
  Json out;
  CHECK(run(cfg, &out) == kOk);
  CHECK(out.at("subgroup").at("sl_index") == "undetermined");
  CHECK(out.at("subgroup").at("psl_index") == "undetermined");
}

TEST_CASE("report embeds version and full config") {
  RunConfig cfg;
  cfg.command = "kodaira";
  cfg.input_path = corpus_dir + "/kodaira_x3_x_t.json";
  cfg.quiet = true;
  cfg.seed = 11;
  Json out;
  CHECK(run(cfg, &out) == kOk);
  CHECK(out.at("config").at("version") == kToolVersion);
  CHECK(out.at("config").at("seed") == 11);
  CHECK(out.at("config").at("precision_bits") == 128);
  CHECK(out.at("sum_e") == 2);
}

int main(int argc, char** argv) {
  if (argc > 1) corpus_dir = argv[argc - 1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv);
  return ctx.run();
}
