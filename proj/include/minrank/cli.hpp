#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "minrank/folding.hpp"
#include "minrank/weyl.hpp"

namespace minrank::cli {

enum class Command { classify, verify, graph, poincare };
enum class Format { json, dot, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
  Command command = Command::classify;
  int max_rank = 3;
  int rank_cap = kDefaultRankCap;
  /// "A5_C3", "identity:A2", "diag:G2", or a JSON pair spec {"g": ..., "sigma": [...]}.
  std::string pair;
  Format format = Format::json;
  std::optional<std::string> out;
  std::size_t budget = kDefaultBudget;
  unsigned threads = 0;
};

/// MINRANK_BUDGET if set and valid, otherwise kDefaultBudget.
std::size_t default_budget();

/// Throws InvalidInput if the selector names no validated pair.
MinimalRankPair resolve_pair(const std::string& selector, std::size_t budget = kDefaultBudget);

int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_graph(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_poincare(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command; writes to cfg.out when set, else to `out`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace minrank::cli
