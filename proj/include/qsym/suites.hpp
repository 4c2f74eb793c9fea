#pragma once

#include "qsym/report.hpp"
#include "qsym/theta.hpp"

namespace qsym {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Flat key=value session configuration; all numbers exact (floats rejected).
struct SessionConfig {
  int n = 0;
  ThetaMatrix theta;
  long degree_bound = 1;
  long conductor_override = 0;  // 0 means none
  long model_M = 0;             // 0 means conductor

  static SessionConfig load(const std::string& path);
  static SessionConfig parse(const std::string& text);
  ContextPtr make_context() const;
};

Report suite_relations(ContextPtr ctx, long bound);
Report suite_hopf(ContextPtr ctx, long bound);
Report suite_haar(ContextPtr ctx, long bound);
Report suite_coaction(ContextPtr ctx, long bound);
Report suite_cocycles(ContextPtr ctx);
Report suite_induction(ContextPtr ctx, long bound);
Report suite_model(ContextPtr ctx, long M);

/// Dispatch by name: relations, hopf, haar, coaction, cocycles, induction,
/// model, all.  Throws ConfigError for an unknown name.
Report run_suite(const std::string& name, const SessionConfig& cfg);

}  // namespace qsym
