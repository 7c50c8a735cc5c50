#include "minrank/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "minrank/errors.hpp"
#include "minrank/orbits.hpp"
#include "minrank/serialize.hpp"

namespace minrank::cli {

std::size_t default_budget() {
  if (const char* env = std::getenv("MINRANK_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

MinimalRankPair resolve_pair(const std::string& selector, std::size_t budget) {
  if (selector.empty()) throw InvalidInput("no pair selected");
  if (selector.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(selector);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed pair spec: ") + e.what());
    }
    auto [g, sigma] = pair_spec_from_json(j);
    return make_pair(g, sigma, budget);
  }
  if (selector.rfind("identity:", 0) == 0) {
    const auto g = diagram_from_label(selector.substr(9));
    return make_pair(g, FoldingInvolution::identity(g.rank()), budget);
  }
  if (selector.rfind("diag:", 0) == 0) {
    const auto h = diagram_from_label(selector.substr(5));
    const int n = h.rank();
    std::vector<std::pair<int, int>> swap;
    for (int i = 0; i < n; ++i) swap.emplace_back(i, n + i);
    return make_pair(disjoint_union(h, h), FoldingInvolution::from_pairs(2 * n, swap), budget);
  }
  const auto sep = selector.find('_');
  if (sep != std::string::npos) {
    const auto g = diagram_from_label(selector.substr(0, sep));
    for (const auto& sigma : enumerate_involutions(g)) {
      if (!validate_candidate(g, sigma).passed()) continue;
      auto pair = make_pair(g, sigma, budget);
      if (pair.name() == selector) return pair;
    }
  }
  throw InvalidInput("unknown pair selector: " + selector);
}

namespace {

int usage(std::ostream& err, const std::string& msg) {
  err << "minrank: " << msg << "\n";
  return kExitUsage;
}

// Runs body, mapping library errors to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InvalidInput& e) {
    return usage(err, e.what());
  } catch (const BudgetExceeded& e) {
    err << "minrank: budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ModelInconsistency& e) {
    err << "minrank: model inconsistency: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

void write_text_report(const PairReport& r, std::ostream& out) {
  out << "pair " << r.pair_name << "\n";
  out << "orbits " << r.orbit_count << "\n";
  out << "P_G " << r.p_g.to_string() << "\n";
  out << "P_H " << r.p_h.to_string() << "\n";
  out << "Q " << r.q.to_string() << "\n";
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
}

}  // namespace

int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::dot) return usage(err, "classify does not support --format dot");
  return guarded(err, [&] {
    ClassifyOptions opts;
    opts.budget = cfg.budget;
    opts.rank_cap = cfg.rank_cap;
    opts.threads = cfg.threads;
    const auto result = classify(cfg.max_rank, opts);
    if (cfg.format == Format::json) {
      out << to_json(result).dump(2) << "\n";
    } else {
      for (const auto& p : result.pairs) {
        out << p.name() << "  family=" << p.family() << "  h=" << p.h().diagram.type_label() << "  black=";
        const auto black = p.h().black_vertices();
        for (std::size_t k = 0; k < black.size(); ++k) {
          out << (k ? "," : "") << p.h().diagram.vertices()[black[k]];
        }
        out << "\n";
      }
    }
    if (result.partial) {
      err << "minrank: partial classification: " << result.diagnostic << "\n";
      return kExitBudget;
    }
    return kExitOk;
  });
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::dot) return usage(err, "verify does not support --format dot");
  return guarded(err, [&] {
    const auto pair = resolve_pair(cfg.pair, cfg.budget);
    VerifyOptions opts;
    opts.budget = cfg.budget;
    const auto report = verify_pair(pair, opts);
    if (cfg.format == Format::json) out << to_json(report).dump(2) << "\n";
    else write_text_report(report, out);
    return report.passed() ? kExitOk : kExitVerificationFailed;
  });
}

int run_graph(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto pair = resolve_pair(cfg.pair, cfg.budget);
    const auto graph = build_graph(pair, cfg.budget);
    switch (cfg.format) {
      case Format::json: out << graph_to_json(graph).dump(2) << "\n"; break;
      case Format::dot: out << graph_to_dot(graph); break;
      case Format::text: {
        const auto& names = pair.g().vertices();
        for (const auto& v : graph.vertices()) {
          out << "c" << v.coset_id << " dim=" << v.dim << " word=";
          for (int s : v.rep_word) out << names[s] << ' ';
          out << "\n";
        }
        for (const auto& e : graph.edges()) out << "c" << e.lo << " -" << names[e.label] << "-> c" << e.hi << "\n";
        break;
      }
    }
    return kExitOk;
  });
}

int run_poincare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::dot) return usage(err, "poincare does not support --format dot");
  return guarded(err, [&] {
    const auto pair = resolve_pair(cfg.pair, cfg.budget);
    const auto graph = build_graph(pair, cfg.budget);
    PairReport r;
    r.pair_name = pair.name();
    r.orbit_count = static_cast<std::size_t>(graph.size());
    r.p_g = length_poincare(graph.weyl());
    r.p_h = length_poincare(WeylGroup(std::make_shared<const RootSystem>(pair.h_roots()), cfg.budget));
    r.q = orbit_poincare(graph);
    const bool holds = r.q * r.p_h == r.p_g;
    if (cfg.format == Format::json) {
      out << poincare_to_json(r).dump(2) << "\n";
    } else {
      out << "P_G " << r.p_g.to_string() << "\nP_H " << r.p_h.to_string() << "\nQ " << r.q.to_string()
          << "\nQ*P_H == P_G: " << (holds ? "yes" : "no") << "\n";
    }
    return holds ? kExitOk : kExitVerificationFailed;
  });
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  std::ostream& sink = cfg.out ? static_cast<std::ostream&>(buffer) : out;
  int code = kExitUsage;
  switch (cfg.command) {
    case Command::classify: code = run_classify(cfg, sink, err); break;
    case Command::verify: code = run_verify(cfg, sink, err); break;
    case Command::graph: code = run_graph(cfg, sink, err); break;
    case Command::poincare: code = run_poincare(cfg, sink, err); break;
  }
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) return usage(err, "cannot write " + *cfg.out);
    file << buffer.str();
  }
  return code;
}

}  // namespace minrank::cli
