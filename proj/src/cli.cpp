#include "pegsol/cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pegsol/census.hpp"
#include "pegsol/engine.hpp"
#include "pegsol/graph6.hpp"
#include "pegsol/graphspec.hpp"
#include "pegsol/invariants.hpp"
#include "pegsol/strategies.hpp"

namespace pegsol {

namespace {

std::uint64_t parse_vertex_set(const std::string& text, int n) {
  std::uint64_t bits = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = std::stoi(item);
    if (v < 0 || v >= n)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    bits |= std::uint64_t{1} << v;
  }
  return bits;
}

nlohmann::json jumps_json(const JumpSequence& seq) {
  nlohmann::json out = nlohmann::json::array();
  for (const Jump& j : seq) out.push_back({j.from, j.over, j.to});
  return out;
}

nlohmann::json fools_json(const Graph& g, const FoolsReport& r) {
  nlohmann::json doc;
  doc["graph6"] = write_graph6(g);
  doc["f_value"] = r.f_value;
  doc["witness_hole"] = r.witness_hole;
  doc["terminal"] = r.terminal.elements();
  doc["jumps"] = jumps_json(r.witness_sequence);
  return doc;
}

nlohmann::json report_json(const VerifyReport& rep) {
  nlohmann::json doc;
  doc["suite"] = rep.suite;
  doc["failures"] = rep.failures;
  doc["skipped"] = rep.skipped;
  nlohmann::json rows = nlohmann::json::array();
  for (const VerifyInstance& inst : rep.instances) {
    nlohmann::json row;
    row["instance"] = inst.instance;
    row["predicted"] = inst.predicted;
    row["computed"] = inst.computed;
    row["certificate_ok"] = inst.certificate_ok;
    row["ok"] = inst.ok;
    rows.push_back(std::move(row));
  }
  doc["instances"] = std::move(rows);
  return doc;
}

struct CliState {
  int cap = kDefaultSearchCap;
  int jobs = 0;
  int seed = 0;  // reserved; nothing randomized yet
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact peg and fool's solitaire toolkit for graphs"};
  app.set_help_flag("--help", "print help and exit");  // frees -h for --h below
  app.require_subcommand(1);
  CliState st;
  app.add_option("--cap", st.cap, "engine search cap (vertices)");
  app.add_option("--jobs", st.jobs, "worker threads for census-style commands");
  app.add_option("--seed", st.seed, "reserved");

  std::string graph_arg, g_arg, h_arg, holes_arg, set_arg, pegs_arg;
  std::string in_path, out_path, suite, kind;
  std::vector<std::string> in_paths;
  int k_arg = 0, hole_arg = 0, target_arg = 0, clear_arg = 0, n_arg = 0;
  std::string questions_arg = "alpha,f,solvability";

  auto* fools_cmd = app.add_subcommand("fools", "fool's solitaire number with witness");
  fools_cmd->add_option("graph", graph_arg, "graph spec")->required();

  auto* solve_cmd = app.add_subcommand("solve", "reduce a configuration to one peg");
  solve_cmd->add_option("graph", graph_arg, "graph spec")->required();
  solve_cmd->add_option("--holes", holes_arg, "comma-separated hole vertices")->required();

  auto* profile_cmd = app.add_subcommand("profile", "solvability profile");
  profile_cmd->add_option("graph", graph_arg, "graph spec")->required();

  auto* strategy_cmd = app.add_subcommand("strategy", "emit a strategy certificate");
  strategy_cmd->add_option("kind", kind, "join|kk|p2k3|cartesian-kk|hampath|product")
      ->required();
  strategy_cmd->add_option("--g", g_arg, "first factor / host graph");
  strategy_cmd->add_option("--h", h_arg, "second factor");
  strategy_cmd->add_option("--set", set_arg, "starting hole set (comma-separated)");
  strategy_cmd->add_option("--k", k_arg, "complete-graph order");
  strategy_cmd->add_option("--hole", hole_arg, "starting hole on K_k");
  strategy_cmd->add_option("--target", target_arg, "required final peg on K_k");
  strategy_cmd->add_option("--pegs", pegs_arg, "peg set on P_2 x K_3");
  strategy_cmd->add_option("--clear", clear_arg, "triangle to clear (0 or 1)");

  auto* census_cmd = app.add_subcommand("census", "evaluate graph6 lines to JSON lines");
  census_cmd->add_option("--in", in_path, "input path ('-' for stdin)");
  census_cmd->add_option("--out", out_path, "output path (default stdout)");
  census_cmd->add_option("--questions", questions_arg, "subset of alpha,f,solvability");

  auto* enum_cmd = app.add_subcommand("enumerate", "connected graphs as graph6 lines");
  enum_cmd->add_option("--n", n_arg, "vertex count (1..7)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "re-check structural results");
  verify_cmd->add_option("--suite", suite, "joins|cartesian|k2|counterexamples|all|nbhd-ratio")
      ->required();
  verify_cmd->add_option("--in", in_paths, "graph6 files for nbhd-ratio");

  auto* check_cmd = app.add_subcommand("check", "validate a certificate JSON document");
  check_cmd->add_option("--in", in_path, "certificate path ('-' for stdin)")->required();

  // let --cap/--jobs/--seed appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, err, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (fools_cmd->parsed()) {
      Graph g = parse_graph_spec(graph_arg);
      FoolsReport r = fools_number(g, st.cap);
      out << fools_json(g, r).dump() << '\n';
      return 0;
    }

    if (solve_cmd->parsed()) {
      Graph g = parse_graph_spec(graph_arg);
      Config start = Config::with_holes(g.vertex_count(),
                                        parse_vertex_set(holes_arg, g.vertex_count()));
      auto seq = reachable_to_single_peg(g, start, st.cap);
      nlohmann::json doc;
      doc["graph6"] = write_graph6(g);
      doc["solvable"] = bool(seq);
      if (seq) {
        doc["jumps"] = jumps_json(*seq);
        Config end = replay(g, start, *seq);
        doc["final_peg"] = end.pegs ? std::countr_zero(end.pegs) : -1;
      }
      out << doc.dump() << '\n';
      return 0;
    }

    if (profile_cmd->parsed()) {
      Graph g = parse_graph_spec(graph_arg);
      SolvabilityProfile p = solvability_profile(g, st.cap);
      nlohmann::json doc;
      doc["graph6"] = write_graph6(g);
      doc["solvable"] = p.solvable;
      doc["freely_solvable"] = p.freely_solvable;
      doc["freely_nbhd_solvable"] = p.freely_nbhd_solvable;
      out << doc.dump() << '\n';
      return 0;
    }

    if (strategy_cmd->parsed()) {
      if (kind == "kk") {
        JumpSequence seq = kk_solve_with_target(k_arg, hole_arg, target_arg);
        nlohmann::json doc;
        doc["k"] = k_arg;
        doc["hole"] = hole_arg;
        doc["target"] = target_arg;
        doc["jumps"] = jumps_json(seq);
        out << doc.dump() << '\n';
        return 0;
      }
      if (kind == "p2k3") {
        Config state = Config::from_pegs(parse_vertex_set(pegs_arg, 6));
        K3ClearResult res = p2k3_clear(state, clear_arg);
        nlohmann::json doc;
        doc["jumps"] = jumps_json(res.prefix);
        if (res.pending) {
          doc["pending"] = {{"from", res.pending->from},
                            {"over", res.pending->over},
                            {"landings", {res.pending->landings[0], res.pending->landings[1]}}};
        }
        out << doc.dump() << '\n';
        return 0;
      }
      StrategyCertificate cert;
      if (kind == "join") {
        Graph g = parse_graph_spec(g_arg);
        Graph h = parse_graph_spec(h_arg);
        Graph j = join(g, h);
        VertexSet s(j.vertex_count());
        if (!set_arg.empty()) {
          s = VertexSet::from_bits(j.vertex_count(),
                                   parse_vertex_set(set_arg, j.vertex_count()));
        } else {
          IndependenceResult ind = independence_number(j, 64);
          s = ind.maximum_sets.front();
        }
        cert = solve_join(g, h, s);
      } else if (kind == "cartesian-kk") {
        Graph g = parse_graph_spec(g_arg);
        Graph prod = cartesian(g, make_complete(k_arg)).first;
        VertexSet s(prod.vertex_count());
        if (!set_arg.empty()) {
          s = VertexSet::from_bits(prod.vertex_count(),
                                   parse_vertex_set(set_arg, prod.vertex_count()));
        } else {
          IndependenceResult ind = independence_number(prod, 64);
          s = ind.maximum_sets.front();
        }
        cert = cartesian_kk_solve(g, k_arg, s);
      } else if (kind == "hampath") {
        cert = hampath_solve(parse_graph_spec(g_arg));
      } else if (kind == "product") {
        Graph g = parse_graph_spec(g_arg);
        Graph h = parse_graph_spec(h_arg);
        cert = product_compose(g, h, fools_number(g, st.cap).terminal,
                               fools_number(h, st.cap).terminal);
      } else {
        err << "unknown strategy kind '" << kind << "'\n";
        return 1;
      }
      out << certificate_to_json(cert) << '\n';
      return 0;
    }

    if (census_cmd->parsed()) {
      CensusOptions opt;
      opt.cap = st.cap;
      opt.jobs = st.jobs;
      opt.questions = CensusQuestions{false, false, false};
      {
        std::stringstream qs(questions_arg);
        std::string q;
        while (std::getline(qs, q, ',')) {
          if (q == "alpha") opt.questions.alpha = true;
          else if (q == "f") opt.questions.f = true;
          else if (q == "solvability") opt.questions.solvability = true;
          else if (!q.empty()) throw std::invalid_argument("unknown question '" + q + "'");
        }
      }
      std::ifstream fin;
      std::istream* in = &std::cin;
      if (!in_path.empty() && in_path != "-") {
        fin.open(in_path);
        if (!fin) {
          err << "cannot open " << in_path << '\n';
          return 1;
        }
        in = &fin;
      }
      std::ofstream fout;
      std::ostream* o = &out;
      if (!out_path.empty() && out_path != "-") {
        fout.open(out_path);
        if (!fout) {
          err << "cannot open " << out_path << '\n';
          return 1;
        }
        o = &fout;
      }
      CensusSummary s = run_census(*in, *o, opt);
      err << "census: lines=" << s.lines << " graphs=" << s.graphs
          << " connected=" << s.connected << " solvable=" << s.solvable
          << " freely_solvable=" << s.freely_solvable
          << " freely_nbhd_solvable=" << s.freely_nbhd_solvable
          << " skipped=" << s.errors.size() << '\n';
      bool assertion = false;
      for (auto& [ln, msg] : s.errors) {
        err << "line " << ln << ": " << msg << '\n';
        if (msg.rfind("assertion:", 0) == 0) assertion = true;
      }
      return assertion ? 2 : 0;
    }

    if (enum_cmd->parsed()) {
      for (const Graph& g : enumerate_connected(n_arg)) out << write_graph6(g) << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<VerifyReport> reports;
      if (suite == "joins") reports.push_back(verify_joins());
      else if (suite == "cartesian") reports.push_back(verify_cartesian_kk());
      else if (suite == "k2") reports.push_back(verify_k2_deficit());
      else if (suite == "counterexamples") reports.push_back(counterexample_suite());
      else if (suite == "all") {
        reports.push_back(verify_joins());
        reports.push_back(verify_cartesian_kk());
        reports.push_back(verify_k2_deficit());
        reports.push_back(counterexample_suite());
      } else if (suite == "nbhd-ratio") {
        if (in_paths.empty()) {
          err << "nbhd-ratio requires at least one --in graph6 file\n";
          return 1;
        }
        nlohmann::json doc = nlohmann::json::array();
        for (const std::string& path : in_paths) {
          std::ifstream fin(path);
          if (!fin) {
            err << "cannot open " << path << '\n';
            return 1;
          }
          NbhdRatioReport r = nbhd_ratio_report(fin, st.cap, st.jobs);
          nlohmann::json row;
          row["file"] = path;
          row["connected"] = r.connected;
          row["freely_solvable"] = r.freely_solvable;
          row["freely_nbhd_solvable"] = r.freely_nbhd_solvable;
          row["ratio_of_connected"] = r.ratio_of_connected;
          row["ratio_of_freely_solvable"] = r.ratio_of_freely_solvable;
          doc.push_back(std::move(row));
        }
        out << doc.dump() << '\n';
        return 0;
      } else {
        err << "unknown suite '" << suite << "'\n";
        return 1;
      }
      nlohmann::json doc = nlohmann::json::array();
      int failures = 0;
      for (const VerifyReport& r : reports) {
        failures += r.failures;
        doc.push_back(report_json(r));
        err << "suite " << r.suite << ": " << r.instances.size() << " instances, "
            << r.failures << " failures\n";
      }
      out << doc.dump() << '\n';
      return failures ? 2 : 0;
    }

    if (check_cmd->parsed()) {
      std::string text;
      if (in_path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        std::ifstream fin(in_path);
        if (!fin) {
          err << "cannot open " << in_path << '\n';
          return 1;
        }
        std::ostringstream ss;
        ss << fin.rdbuf();
        text = ss.str();
      }
      StrategyCertificate cert = certificate_from_json(text);
      std::string why;
      bool ok = validate_certificate(cert, &why);
      nlohmann::json doc;
      doc["valid"] = ok;
      if (!ok) doc["reason"] = why;
      out << doc.dump() << '\n';
      return ok ? 0 : 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "no subcommand\n";
  return 1;
}

}  // namespace pegsol
