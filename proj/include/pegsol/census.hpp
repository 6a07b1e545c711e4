#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pegsol/engine.hpp"
#include "pegsol/graph.hpp"

namespace pegsol {

struct CensusQuestions {
  bool alpha = true;
  bool f = true;
  bool solvability = true;
};

struct CensusOptions {
  CensusQuestions questions;
  int jobs = 0;  // 0: hardware concurrency
  int cap = kDefaultSearchCap;
};

struct CensusRecord {
  std::string graph6;
  int n = 0;
  bool connected = false;
  std::optional<int> alpha;
  std::optional<int> f_value;
  std::optional<bool> solvable, freely_solvable, freely_nbhd_solvable;
  double elapsed_ms = 0.0;
};

struct CensusSummary {
  long long lines = 0;       // input lines seen (excluding blank/comments)
  long long graphs = 0;      // successfully parsed
  long long connected = 0;
  long long solvable = 0;
  long long freely_solvable = 0;
  long long freely_nbhd_solvable = 0;
  std::vector<std::pair<int, std::string>> errors;  // (line number, message)
};

CensusRecord census_record(const Graph& g, const std::string& graph6,
                           const CensusQuestions& q, int cap);
std::string census_record_json(const CensusRecord& r);

// Reads graph6 lines, writes "#schema=1" then one JSON record per line in
// input order. Parse failures are reported in the summary and skipped.
CensusSummary run_census(std::istream& in, std::ostream& out, const CensusOptions& opt);

// One expected-versus-computed comparison.
struct VerifyInstance {
  std::string instance;
  std::string predicted;
  std::string computed;
  bool certificate_ok = false;
  bool ok = false;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyInstance> instances;
  int failures = 0;
  int skipped = 0;
};

// F(G ∨ H) over all unlabeled pairs with at most max_side vertices per
// factor: alpha of the join, except alpha-1 when both factors are edgeless
// with two or more vertices. Every instance also replays a solve_join
// certificate.
VerifyReport verify_joins(int max_side = 4);

// F(G □ K_k) = alpha(G □ K_k) over all connected G with at most max_g
// vertices, plus F = |V(G)| whenever k >= chi(G); certificates from
// cartesian_kk_solve.
VerifyReport verify_cartesian_kk(int max_g = 5, const std::vector<int>& ks = {3, 4});

// F(G □ K_2) = alpha - 1 for the bipartite Hamiltonian-path family.
VerifyReport verify_k2_deficit();

// The named product facts: sharp and non-sharp lower-bound cases and the
// two products whose fool's number drops below F(G)F(H).
VerifyReport counterexample_suite(bool include_p2c8 = true);

// Informational ratios for externally supplied graph6 files: fraction of
// connected graphs that are freely neighborhood-solvable, plus the same
// fraction restricted to freely solvable graphs (both denominators shown).
struct NbhdRatioReport {
  long long connected = 0;
  long long freely_solvable = 0;
  long long freely_nbhd_solvable = 0;
  double ratio_of_connected = 0.0;
  double ratio_of_freely_solvable = 0.0;
};

NbhdRatioReport nbhd_ratio_report(std::istream& g6_lines, int cap = kDefaultSearchCap,
                                  int jobs = 0);

}  // namespace pegsol
