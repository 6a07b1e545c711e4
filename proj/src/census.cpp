#include "pegsol/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

#include <json.hpp>

#include "pegsol/graph6.hpp"
#include "pegsol/invariants.hpp"
#include "pegsol/strategies.hpp"

namespace pegsol {

namespace {

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

template <class F>
void parallel_for(long long count, int jobs, F&& f) {
  jobs = std::min<long long>(effective_jobs(jobs), count);
  if (jobs <= 1) {
    for (long long i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (long long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
    });
  for (auto& th : pool) th.join();
}

bool skip_line(const std::string& line) {
  return line.empty() || line[0] == '#' || line[0] == '>';
}

}  // namespace

CensusRecord census_record(const Graph& g, const std::string& graph6,
                           const CensusQuestions& q, int cap) {
  CensusRecord r;
  r.graph6 = graph6;
  r.n = g.vertex_count();
  auto t0 = std::chrono::steady_clock::now();
  r.connected = is_connected(g);
  if (q.alpha) r.alpha = max_independent_set_size(g, cap);
  if (r.connected) {
    if (q.f) r.f_value = fools_number(g, cap).f_value;
    if (q.solvability) {
      SolvabilityProfile p = solvability_profile(g, cap);
      r.solvable = p.solvable;
      r.freely_solvable = p.freely_solvable;
      r.freely_nbhd_solvable = p.freely_nbhd_solvable;
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (r.f_value && r.alpha && *r.f_value > *r.alpha)
    throw std::logic_error("assertion: F exceeds alpha");
  bool nb = r.freely_nbhd_solvable.value_or(false);
  bool fr = r.freely_solvable.value_or(false);
  bool so = r.solvable.value_or(false);
  if ((nb && !fr) || (fr && !so))
    throw std::logic_error("assertion: solvability implications violated");
  return r;
}

std::string census_record_json(const CensusRecord& r) {
  nlohmann::json doc;
  doc["graph6"] = r.graph6;
  doc["n"] = r.n;
  doc["connected"] = r.connected;
  doc["alpha"] = r.alpha ? nlohmann::json(*r.alpha) : nlohmann::json();
  doc["f_value"] = r.f_value ? nlohmann::json(*r.f_value) : nlohmann::json();
  doc["solvable"] = r.solvable ? nlohmann::json(*r.solvable) : nlohmann::json();
  doc["freely_solvable"] =
      r.freely_solvable ? nlohmann::json(*r.freely_solvable) : nlohmann::json();
  doc["freely_nbhd_solvable"] =
      r.freely_nbhd_solvable ? nlohmann::json(*r.freely_nbhd_solvable) : nlohmann::json();
  doc["elapsed_ms"] = r.elapsed_ms;
  return doc.dump();
}

CensusSummary run_census(std::istream& in, std::ostream& out, const CensusOptions& opt) {
  CensusSummary summary;
  std::vector<std::pair<int, std::string>> lines;  // (line number, text)
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_line(line)) continue;
    lines.emplace_back(line_no, line);
  }
  summary.lines = (long long)lines.size();

  using Result = std::variant<CensusRecord, std::string>;
  std::vector<Result> results(lines.size());
  parallel_for((long long)lines.size(), opt.jobs, [&](long long i) {
    try {
      Graph g = parse_graph6(lines[i].second);
      results[i] = census_record(g, lines[i].second, opt.questions, opt.cap);
    } catch (const std::exception& e) {
      results[i] = std::string(e.what());
    }
  });

  out << "#schema=1\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (auto* err = std::get_if<std::string>(&results[i])) {
      summary.errors.emplace_back(lines[i].first, *err);
      continue;
    }
    const CensusRecord& r = std::get<CensusRecord>(results[i]);
    ++summary.graphs;
    if (r.connected) ++summary.connected;
    if (r.solvable.value_or(false)) ++summary.solvable;
    if (r.freely_solvable.value_or(false)) ++summary.freely_solvable;
    if (r.freely_nbhd_solvable.value_or(false)) ++summary.freely_nbhd_solvable;
    out << census_record_json(r) << '\n';
  }
  return summary;
}

namespace {

std::string certificate_status(const StrategyCertificate& cert) {
  std::string why;
  return validate_certificate(cert, &why) ? "ok" : "invalid: " + why;
}

VertexSet first_maximum_set(const Graph& g) {
  int alpha = max_independent_set_size(g, 64);
  std::uint64_t found = 0;
  for_each_independent_set(g, alpha, [&](std::uint64_t s) {
    found = s;
    return true;
  });
  return VertexSet::from_bits(g.vertex_count(), found);
}

void push_instance(VerifyReport& rep, std::string name, std::string predicted,
                   std::string computed, bool cert_ok, bool ok) {
  rep.instances.push_back(VerifyInstance{std::move(name), std::move(predicted),
                                         std::move(computed), cert_ok, ok});
  if (!rep.instances.back().ok) ++rep.failures;
}

}  // namespace

VerifyReport verify_joins(int max_side) {
  VerifyReport rep;
  rep.suite = "joins";
  std::vector<const Graph*> factors;
  std::vector<int> sizes;
  for (int n = 1; n <= max_side; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      factors.push_back(&g);
      sizes.push_back(n);
    }
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a; b < factors.size(); ++b) {
      const Graph& ga = *factors[a];
      const Graph& gb = *factors[b];
      Graph j = join(ga, gb);
      int alpha = max_independent_set_size(j, 64);
      bool both_edgeless =
          ga.edge_count() == 0 && gb.edge_count() == 0 && sizes[a] >= 2 && sizes[b] >= 2;
      int predicted = both_edgeless ? alpha - 1 : alpha;
      int computed = fools_number(j).f_value;

      VertexSet s(j.vertex_count());
      if (both_edgeless) {
        int gn = sizes[a], hn = sizes[b];
        int base = gn >= hn ? 0 : gn;
        int take = std::max(gn, hn) - 1;
        for (int v = 0; v < take; ++v) s.set(base + v);
      } else {
        s = first_maximum_set(j);
      }
      StrategyCertificate cert = solve_join(ga, gb, s);
      std::string status = certificate_status(cert);
      bool ok = computed == predicted && status == "ok" &&
                cert.claimed_terminal_size == predicted;
      push_instance(rep, "join(" + write_graph6(ga) + "," + write_graph6(gb) + ")",
                    "F=" + std::to_string(predicted), "F=" + std::to_string(computed),
                    status == "ok", ok);
    }
  }
  return rep;
}

VerifyReport verify_cartesian_kk(int max_g, const std::vector<int>& ks) {
  VerifyReport rep;
  rep.suite = "cartesian";
  for (int n = 1; n <= max_g; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      int chi = chromatic_number(g);
      for (int k : ks) {
        Graph prod = cartesian(g, make_complete(k)).first;
        int alpha = max_independent_set_size(prod, 64);
        int computed = fools_number(prod, 64).f_value;
        VertexSet s = first_maximum_set(prod);
        StrategyCertificate cert = cartesian_kk_solve(g, k, s);
        std::string status = certificate_status(cert);
        bool ok = computed == alpha && status == "ok";
        if (k >= chi && computed != n) ok = false;
        std::ostringstream name;
        name << write_graph6(g) << " x K_" << k;
        std::ostringstream predicted;
        predicted << "F=alpha=" << alpha;
        if (k >= chi) predicted << "=|V(G)|=" << n;
        push_instance(rep, name.str(), predicted.str(), "F=" + std::to_string(computed),
                      status == "ok", ok);
      }
    }
  }
  return rep;
}

VerifyReport verify_k2_deficit() {
  VerifyReport rep;
  rep.suite = "k2";
  std::vector<std::pair<std::string, Graph>> gs;
  for (int n = 2; n <= 6; ++n) gs.emplace_back("P_" + std::to_string(n), make_path(n));
  gs.emplace_back("C_4", make_cycle(4));
  gs.emplace_back("C_6", make_cycle(6));
  gs.emplace_back("P_2xP_3", cartesian(make_path(2), make_path(3)).first);
  for (auto& [name, g] : gs) {
    Graph prod = cartesian(g, make_complete(2)).first;
    int alpha = max_independent_set_size(prod, 64);
    int computed = fools_number(prod, 64).f_value;
    StrategyCertificate cert = hampath_solve(prod);
    std::string status = certificate_status(cert);
    bool ok = computed == alpha - 1 && status == "ok" &&
              cert.claimed_terminal_size == alpha - 1;
    push_instance(rep, name + " x K_2", "F=alpha-1=" + std::to_string(alpha - 1),
                  "F=" + std::to_string(computed), status == "ok", ok);
  }
  return rep;
}

VerifyReport counterexample_suite(bool include_p2c8) {
  VerifyReport rep;
  rep.suite = "counterexamples";

  struct ProductCase {
    std::string name;
    Graph g, h;
    enum { sharp, strict } relation;
    bool compose;  // product_compose certificate expected to exist
  };
  std::vector<ProductCase> cases;
  cases.push_back({"P_2 x P_2", make_path(2), make_path(2), ProductCase::sharp, true});
  cases.push_back({"(K_4-e) x (K_4-e)", make_k4_minus_e(), make_k4_minus_e(),
                   ProductCase::sharp, true});
  cases.push_back({"P_2 x C_4", make_path(2), make_cycle(4), ProductCase::strict, true});
  cases.push_back({"P_2 x C_6", make_path(2), make_cycle(6), ProductCase::strict, true});
  cases.push_back({"(K_4-e) x C_4", make_k4_minus_e(), make_cycle(4),
                   ProductCase::strict, false});
  cases.push_back({"C_4 x C_4", make_cycle(4), make_cycle(4), ProductCase::strict, false});
  if (include_p2c8)
    cases.push_back({"P_2 x C_8", make_path(2), make_cycle(8), ProductCase::strict, false});

  for (auto& c : cases) {
    FoolsReport fg = fools_number(c.g);
    FoolsReport fh = fools_number(c.h);
    int bound = fg.f_value * fh.f_value;
    Graph prod = cartesian(c.g, c.h).first;
    int computed = fools_number(prod, 64).f_value;
    bool cert_ok = true;
    if (c.compose) {
      StrategyCertificate cert = product_compose(c.g, c.h, fg.terminal, fh.terminal);
      cert_ok = certificate_status(cert) == "ok" && cert.claimed_terminal_size == bound;
    }
    bool ok = cert_ok && (c.relation == ProductCase::sharp ? computed == bound
                                                           : computed > bound);
    push_instance(rep, c.name,
                  c.relation == ProductCase::sharp
                      ? "F=" + std::to_string(bound)
                      : "F>" + std::to_string(bound),
                  "F=" + std::to_string(computed), cert_ok, ok);
  }

  // products whose fool's number falls below F(G)F(H)
  struct DeficitCase {
    std::string name;
    Graph g, h;
  };
  std::vector<DeficitCase> deficits;
  deficits.push_back({"K_{1,3} x P_3", make_star(3), make_path(3)});
  deficits.push_back({"K_{1,3} x paw", make_star(3), make_paw()});
  for (auto& c : deficits) {
    int fg = fools_number(c.g).f_value;
    int fh = fools_number(c.h).f_value;
    Graph prod = cartesian(c.g, c.h).first;
    int computed = fools_number(prod, 64).f_value;
    int predicted = fg * fh - 1;
    push_instance(rep, c.name, "F=" + std::to_string(predicted),
                  "F=" + std::to_string(computed), true, computed == predicted);
  }
  return rep;
}

NbhdRatioReport nbhd_ratio_report(std::istream& g6_lines, int cap, int jobs) {
  NbhdRatioReport rep;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(g6_lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip_line(line)) continue;
    lines.push_back(line);
  }
  std::vector<std::uint8_t> flags(lines.size(), 0);  // 1 connected, 2 freely, 4 nbhd
  parallel_for((long long)lines.size(), jobs, [&](long long i) {
    try {
      Graph g = parse_graph6(lines[i]);
      if (!is_connected(g)) return;
      SolvabilityProfile p = solvability_profile(g, cap);
      flags[i] = std::uint8_t(1 | (p.freely_solvable ? 2 : 0) |
                              (p.freely_nbhd_solvable ? 4 : 0));
    } catch (const std::exception&) {
      // unreadable lines are simply not counted
    }
  });
  for (auto f : flags) {
    if (f & 1) ++rep.connected;
    if (f & 2) ++rep.freely_solvable;
    if (f & 4) ++rep.freely_nbhd_solvable;
  }
  if (rep.connected)
    rep.ratio_of_connected = double(rep.freely_nbhd_solvable) / double(rep.connected);
  if (rep.freely_solvable)
    rep.ratio_of_freely_solvable =
        double(rep.freely_nbhd_solvable) / double(rep.freely_solvable);
  return rep;
}

}  // namespace pegsol
