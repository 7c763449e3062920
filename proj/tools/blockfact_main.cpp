#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "blockfact/cli.hpp"
#include "blockfact/errors.hpp"

using namespace blockfact;

namespace {

void add_common(CLI::App* cmd, cli::Options& opts, std::string& format) {
  cmd->add_option("--seed", opts.seed, "seed for the idempotent scans");
  cmd->add_option("--attempts", opts.attempts, "random candidates per split search");
  cmd->add_option("--cap", opts.cap, "size cap for resolution terms");
  cmd->add_option("--format", format, "report format: text|machine")
      ->check(CLI::IsMember({"text", "machine"}));
}

int finish(const cli::Outcome& outcome, const std::string& out_path) {
  if (!outcome.report.empty()) std::cout << outcome.report;
  if (!outcome.artifact.is_null() && !out_path.empty())
    write_file(out_path, dump_document(outcome.artifact));
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact block decompositions and factorization resolutions of finite-dimensional associative algebras"};
  app.require_subcommand(1);

  cli::Options opts;
  std::string format = "text";
  std::string path, out_path;
  int depth = 3;
  bool verify = false;

  auto* analyze = app.add_subcommand("analyze", "block decomposition and factorizability report");
  analyze->add_option("file", path, "algebra file")->required();
  add_common(analyze, opts, format);

  auto* factorize = app.add_subcommand("factorize", "factorizability certificate or refusal");
  factorize->add_option("file", path, "algebra file")->required();
  add_common(factorize, opts, format);

  auto* resolve = app.add_subcommand("resolve", "blockwise factorization resolution");
  resolve->add_option("file", path, "algebra file")->required();
  resolve->add_option("--depth", depth, "truncation depth")->required();
  resolve->add_flag("--verify", verify, "check exactness at every position");
  resolve->add_option("-o,--output", out_path, "write the complex document here");
  add_common(resolve, opts, format);

  auto* verify_cmd = app.add_subcommand("verify", "re-check a serialized complex");
  verify_cmd->add_option("file", path, "complex file")->required();
  add_common(verify_cmd, opts, format);

  cli::ZooRequest zoo_req;
  auto* zoo_cmd = app.add_subcommand("zoo", "emit a named algebra as a file");
  zoo_cmd->add_option("family", zoo_req.family, "dual|matrix|exterior|upper|triplet|sf")->required();
  zoo_cmd->add_option("--p", zoo_req.p, "triplet parameter");
  zoo_cmd->add_option("--d", zoo_req.d, "symplectic fermion parameter");
  zoo_cmd->add_option("--n", zoo_req.n, "matrix/upper-triangular size");
  zoo_cmd->add_option("--two-d", zoo_req.two_d, "exterior generator count");
  auto* scramble_opt =
      zoo_cmd->add_option("--scramble-seed", zoo_req.scramble_seed, "apply a seeded change of basis");
  zoo_cmd->add_option("-o,--output", out_path, "output file")->required();

  CLI11_PARSE(app, argc, argv);
  opts.machine = (format == "machine");
  zoo_req.scrambled = scramble_opt->count() > 0;

  try {
    if (*analyze) return finish(cli::cmd_analyze(path, opts), "");
    if (*factorize) return finish(cli::cmd_factorize(path, opts), "");
    if (*resolve) return finish(cli::cmd_resolve(path, depth, verify, opts), out_path);
    if (*verify_cmd) return finish(cli::cmd_verify(path, opts), "");
    if (*zoo_cmd) return finish(cli::cmd_zoo(zoo_req), out_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerifyFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
