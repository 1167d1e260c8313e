#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hspec/clique.hpp"
#include "hspec/hypergraph.hpp"
#include "hspec/lagrangian.hpp"
#include "hspec/spectral.hpp"

namespace hspec {

struct BoundsOptions {
  IterationOptions spectral;
  LagrangianOptions lagrangian;
  CliqueOptions clique;
  double slack_tolerance = 1e-7;    // a bound "holds" when slack >= -slack_tolerance
  double equality_tolerance = 1e-6; // |slack| below this flags equality
  bool ungated_thm34 = false;       // also evaluate the eigenvector-sum upper
                                    // bound when its hypothesis fails (informational)
};

struct BoundRecord {
  std::string name;
  bool lower = true;      // slack = measured - bound for lower bounds, reversed for upper
  double bound = 0.0;
  double measured = 0.0;
  double slack = 0.0;
  bool holds = false;
  bool equality = false;
  bool equality_expected = false;  // clique-cover hypothesis satisfied (Lagrangian record)
  bool vacuous_regime = false;     // rank/corank bound outside its proved regime
                                   // (omega < rank, or uniform edge sizes c = k)
  bool informational = false;      // emitted without its hypothesis
  bool unverified = false;         // omega not certified; values not evaluated
};

struct CompletenessCondition {
  bool is_complete = false;
  std::optional<std::pair<int, int>> witness;  // nonadjacent pair with equal R(v)
  bool holds() const { return is_complete || witness.has_value(); }
};

struct BoundReport {
  int n = 0;
  int m = 0;
  std::vector<int> r;
  std::optional<int> k;
  std::optional<int> c;
  int omega = 0;
  double rho = 0.0;
  double q = 0.0;
  double lagrangian = 0.0;
  double entry_sum_u = 0.0;
  bool rho_converged = false;
  bool q_converged = false;
  bool omega_exact = false;
  long rho_iterations = 0;
  long q_iterations = 0;
  int lagrangian_starts = 0;
  CompletenessCondition condition;
  std::vector<BoundRecord> records;

  /// true iff every evaluated, non-informational record holds
  bool all_evaluated_hold() const;
};

/// sum over s in r of C(omega-1, s-1): the clique-number lower bound on rho.
double lemma23_lower(int omega, const std::vector<int>& r);

/// 2 * lemma23_lower: the clique-number lower bound on q.
double thm31_lower(int omega, const std::vector<int>& r);

/// (omega-c+1)^{c-1} (omega-k+1)^{k-c} / (k-1)! + (omega-c+1)^{c-1} / (c-1)!,
/// the rank/corank lower bound on rho. Evaluated literally for any omega >= 1
/// and any 2 <= c <= k; the bound is only claimed for c < k with omega >= k
/// (check_all marks records outside that regime as vacuous).
double thm32_lower(int omega, int k, int c);

/// sum over s in r of k (U/omega)^k C(omega, s): the principal-eigenvector
/// upper bound on rho. Throws std::domain_error when U <= 0.
double thm34_upper(int omega, const std::vector<int>& r, int k, double u);

/// Hypothesis test for the Lagrangian closed form: either G is a complete
/// R-graph, or some nonadjacent pair (v, v') has R(v) = R(v'). The witness is
/// the lexicographically first such pair.
CompletenessCondition completeness_condition(const Hypergraph& g);

/// Evaluates every bound on g: exact omega, rho, q, U, heuristic L, the five
/// records with holds/equality flags. If the clique search hits its node cap,
/// omega-dependent records are marked unverified instead of being evaluated.
BoundReport check_all(const Hypergraph& g, const BoundsOptions& opts = {});

/// Stable-key-order JSON rendering of the report.
nlohmann::ordered_json report_to_json(const BoundReport& report);

}  // namespace hspec
