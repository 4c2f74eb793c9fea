#include "qsym/induction.hpp"
#include "qsym/operator_model.hpp"
#include "qsym/parse.hpp"
#include "qsym/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qsym;

namespace {

int do_verify(const std::string& suite, const std::string& config,
              const std::string& out_path) {
  SessionConfig cfg = SessionConfig::load(config);
  Report rep = run_suite(suite, cfg);
  std::cout << rep.text();
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw ConfigError("cannot write report file: " + out_path);
    f << rep.json() << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int do_classify(const std::string& config, long bound) {
  SessionConfig cfg = SessionConfig::load(config);
  ContextPtr ctx = cfg.make_context();
  ClassifyResult res = classify(ctx, bound);
  std::cout << "orbit representative | stabilizer order | irrep | dim\n";
  for (const auto& c : res.coreps) {
    std::cout << "[";
    for (size_t i = 0; i < c.orbit_rep.size(); ++i)
      std::cout << (i ? "," : "") << c.orbit_rep[i];
    std::cout << "] | " << c.stabilizer_order << " | " << c.irrep_label << " | "
              << c.corep.dim << "\n";
  }
  std::cout << "total coreps: " << res.coreps.size() << "\n";
  std::cout << "classical count at the same bound: " << res.classical_count << "\n";
  std::cout << "all irreducible: " << (res.all_irreducible ? "yes" : "no") << "\n";
  std::cout << "pairwise inequivalent: " << (res.pairwise_inequivalent ? "yes" : "no") << "\n";
  std::cout << "reconstruction exact: " << (res.reconstruction_ok ? "yes" : "no") << "\n";
  std::cout << "count matches classical: " << (res.count_matches_classical ? "yes" : "no")
            << "\n";
  bool ok = res.all_irreducible && res.pairwise_inequivalent && res.reconstruction_ok &&
            res.count_matches_classical;
  return ok ? 0 : 1;
}

int do_eval(const std::string& expr, const std::string& config) {
  SessionConfig cfg = SessionConfig::load(config);
  ContextPtr ctx = cfg.make_context();
  Value v = parse_element(expr, ctx);
  std::cout << value_str(v) << "\n";
  return 0;
}

int do_model(const std::string& config, long M) {
  SessionConfig cfg = SessionConfig::load(config);
  ContextPtr ctx = cfg.make_context();
  if (M <= 0) M = cfg.model_M > 0 ? cfg.model_M : ctx->conductor();
  Report rep = suite_model(ctx, M);
  std::cout << rep.text();
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for the quantum symmetry group of the noncommutative torus"};
  app.require_subcommand(1);

  std::string config, out_path, suite, expr;
  long bound = 1, M = 0;

  auto* verify = app.add_subcommand(
      "verify", "run a verification suite (relations, hopf, haar, coaction, cocycles, "
                "induction, model, all)");
  verify->add_option("suite", suite)->required();
  verify->add_option("--config", config)->required();
  verify->add_option("--out", out_path);

  auto* classify_cmd =
      app.add_subcommand("classify", "list irreducible corepresentations up to a degree bound");
  classify_cmd->add_option("--config", config)->required();
  classify_cmd->add_option("--bound", bound)->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an algebra expression");
  eval_cmd->add_option("expr", expr)->required();
  eval_cmd->add_option("--config", config)->required();

  auto* model_cmd = app.add_subcommand("model", "verify the operator model at cyclic order M");
  model_cmd->add_option("--config", config)->required();
  model_cmd->add_option("--M", M);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return do_verify(suite, config, out_path);
    if (classify_cmd->parsed()) return do_classify(config, bound);
    if (eval_cmd->parsed()) return do_eval(expr, config);
    if (model_cmd->parsed()) return do_model(config, M);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
