#include "pec/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pec/constructions.hpp"
#include "pec/graph6.hpp"
#include "pec/report.hpp"

namespace pec {

namespace {

struct CommonOpts {
  std::string input;      // graph6 string
  std::string name;       // named generator
  uint64_t budget = SearchBudget{}.max_nodes;
  bool opt_in_large = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
  if (with_input)
    cmd->add_option("input", o.input, "graph6 line (stdin when omitted)");
  cmd->add_option("--name", o.name, "use a named graph instead of input");
  cmd->add_option("--budget", o.budget, "node cap for the exact searches");
  cmd->add_flag("--opt-in-large", o.opt_in_large,
                "allow 2-factor enumeration above 24 vertices");
}

Graph load_graph(const CommonOpts& o, std::istream& in) {
  if (!o.name.empty()) return make_named(o.name);
  if (!o.input.empty()) return parse_graph6(o.input);
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), Errc::bad_cli_usage,
          "no graph on stdin");
  return parse_graph6(line);
}

void print_colouring(std::ostream& out, const EdgeColouring& c) {
  for (int i = 0; i < c.graph().edge_count(); ++i) {
    Edge e = c.graph().edges()[i];
    out << e.u << " " << e.v << " " << colour_name(c.at_index(i)) << "\n";
  }
}

Edge parse_edge_arg(const std::string& text) {
  size_t comma = text.find(',');
  require(comma != std::string::npos, Errc::bad_cli_usage,
          "edge must look like 'u,v'");
  try {
    return Edge(std::stoi(text.substr(0, comma)),
                std::stoi(text.substr(comma + 1)));
  } catch (const std::exception&) {
    fail(Errc::bad_cli_usage, "cannot parse edge '" + text + "'");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"parsimonious 4-edge-colouring toolkit for graphs of maximum "
               "degree 3"};
  app.require_subcommand(1);

  CommonOpts colour_o, smin_o, gamma_o, metrics_o, verify_o, payan_o,
      factors_o, reduce_o;
  bool colour_dot = false, payan_dot = false, metrics_timing = false,
       scan_timing = false;

  auto* cmd_colour = app.add_subcommand(
      "colour", "print a proper 4-colouring with minimum delta class");
  add_common(cmd_colour, colour_o);
  cmd_colour->add_flag("--dot", colour_dot, "emit DOT instead of edge lines");

  auto* cmd_smin = app.add_subcommand("smin", "print s(G)");
  add_common(cmd_smin, smin_o);

  auto* cmd_gamma = app.add_subcommand("gamma", "print gamma(G) as p/q");
  add_common(cmd_gamma, gamma_o);

  auto* cmd_metrics =
      app.add_subcommand("metrics", "emit the full JSON report");
  add_common(cmd_metrics, metrics_o);
  cmd_metrics->add_flag("--timing", metrics_timing,
                        "include timing (breaks byte-stability)");

  auto* cmd_verify = app.add_subcommand(
      "verify", "run every verifier; nonzero exit on failure");
  add_common(cmd_verify, verify_o);

  auto* cmd_payan = app.add_subcommand(
      "payan", "print the strong-matching delta-minimum witness");
  add_common(cmd_payan, payan_o);
  cmd_payan->add_flag("--dot", payan_dot, "emit DOT instead of edge lines");

  auto* cmd_factors =
      app.add_subcommand("factors", "list 2-factors with odd-cycle stats");
  add_common(cmd_factors, factors_o);

  std::string generate_name;
  auto* cmd_generate =
      app.add_subcommand("generate", "emit a named graph as graph6");
  cmd_generate->add_option("graph", generate_name,
                           "PETERSEN, G5, P_PRIME, K4, K33 or C<k>")
      ->required();

  auto* cmd_reduce = app.add_subcommand(
      "reduce", "apply pendant/triangle reductions to a fixpoint");
  add_common(cmd_reduce, reduce_o);

  std::string dot_first, dot_second, dot_e1 = "", dot_f1 = "", dot_uv = "";
  bool alt_pairing = false;
  auto* cmd_dotp = app.add_subcommand(
      "dotproduct", "dot product of two cubic graphs");
  cmd_dotp->add_option("first", dot_first, "first graph (graph6 or name)")
      ->required();
  cmd_dotp->add_option("second", dot_second, "second graph (graph6 or name)")
      ->required();
  cmd_dotp->add_option("--e1", dot_e1, "first removed edge of g1, 'u,v'");
  cmd_dotp->add_option("--f1", dot_f1, "second removed edge of g1, 'u,v'");
  cmd_dotp->add_option("--uv", dot_uv, "contracted edge of g2, 'u,v'");
  cmd_dotp->add_flag("--alt-pairing", alt_pairing,
                     "swap the attachment pairing on the v side");

  std::string scan_file;
  CommonOpts scan_o;
  auto* cmd_scan = app.add_subcommand(
      "scan", "stream a graph6 file, one JSON report line per graph");
  cmd_scan->add_option("file", scan_file, "graph6 file ('-' for stdin)")
      ->required();
  cmd_scan->add_option("--budget", scan_o.budget,
                       "node cap for the exact searches");
  cmd_scan->add_flag("--opt-in-large", scan_o.opt_in_large,
                     "allow 2-factor enumeration above 24 vertices");
  cmd_scan->add_flag("--timing", scan_timing,
                     "include timing (breaks byte-stability)");

  std::vector<const char*> argv;
  argv.push_back("pec");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_colour) {
      Graph g = load_graph(colour_o, in);
      SminResult sr = s_exact(g, {colour_o.budget});
      if (colour_dot)
        out << to_dot(sr.witness);
      else {
        out << "s " << sr.s << "\n";
        print_colouring(out, sr.witness);
      }
      return 0;
    }
    if (*cmd_smin) {
      Graph g = load_graph(smin_o, in);
      out << s_exact(g, {smin_o.budget}).s << "\n";
      return 0;
    }
    if (*cmd_gamma) {
      Graph g = load_graph(gamma_o, in);
      out << gamma(g, {gamma_o.budget}).str() << "\n";
      return 0;
    }
    if (*cmd_metrics) {
      Graph g = load_graph(metrics_o, in);
      auto start = std::chrono::steady_clock::now();
      Report r = analyze(g, {metrics_o.budget}, metrics_o.opt_in_large);
      if (!metrics_o.name.empty()) r.graph_name = metrics_o.name;
      if (metrics_timing)
        r.timing_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      out << report_to_json(r).dump() << "\n";
      return 0;
    }
    if (*cmd_verify) {
      Graph g = load_graph(verify_o, in);
      Report r = analyze(g, {verify_o.budget}, verify_o.opt_in_large);
      for (const auto& b : r.metrics.bounds) {
        const char* tag = b.state == BoundEval::State::satisfied ? "PASS"
                          : b.state == BoundEval::State::violated ? "FAIL"
                                                                  : "SKIP";
        out << tag << " " << b.name;
        if (b.state != BoundEval::State::skipped)
          out << " rhs=" << b.rhs.str();
        if (!b.note.empty()) out << " (" << b.note << ")";
        out << "\n";
      }
      for (const auto& c : r.checks) {
        const char* tag = c.status == CheckResult::Status::pass ? "PASS"
                          : c.status == CheckResult::Status::fail ? "FAIL"
                                                                  : "SKIP";
        out << tag << " " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
      }
      return r.any_check_failed() ? 1 : 0;
    }
    if (*cmd_payan) {
      Graph g = load_graph(payan_o, in);
      SminResult sr = s_exact(g, {payan_o.budget});
      EdgeColouring strong = payan_strong_matching(g, sr.witness);
      if (payan_dot)
        out << to_dot(strong);
      else {
        out << "s " << sr.s << "\n";
        print_colouring(out, strong);
      }
      return 0;
    }
    if (*cmd_factors) {
      Graph g = load_graph(factors_o, in);
      auto factors = enumerate_two_factors(g, factors_o.opt_in_large);
      out << factors.size() << " two-factors\n";
      for (const auto& f : factors) {
        out << "factor odd=" << f.odd_cycle_count() << " cycles";
        for (const auto& c : f.cycles) out << " " << c.size();
        out << "\n";
      }
      return 0;
    }
    if (*cmd_generate) {
      out << emit_graph6(make_named(generate_name)) << "\n";
      return 0;
    }
    if (*cmd_reduce) {
      Graph g = load_graph(reduce_o, in);
      auto [reduced, steps] = reduce_all(g);
      for (const auto& st : steps) {
        out << (st.kind == ReductionStep::Kind::pendant_removal
                    ? "pendant"
                    : "triangle")
            << " removed";
        for (int v : st.removed_vertices) out << " " << v;
        if (st.introduced_vertex >= 0)
          out << " -> " << st.introduced_vertex;
        out << "\n";
      }
      out << emit_graph6(reduced) << "\n";
      return 0;
    }
    if (*cmd_dotp) {
      auto named_or_graph6 = [](const std::string& text) {
        try {
          return make_named(text);
        } catch (const Error&) {
          return parse_graph6(text);
        }
      };
      Graph g1 = named_or_graph6(dot_first);
      Graph g2 = named_or_graph6(dot_second);
      Edge e1, f1;
      if (dot_e1.empty() && dot_f1.empty() &&
          are_isomorphic(g1, make_named("PETERSEN"))) {
        // the stored distance-1 spoke pair
        std::tie(e1, f1) = petersen_attachment_pair();
      } else {
        e1 = dot_e1.empty() ? g1.edges().front() : parse_edge_arg(dot_e1);
        if (!dot_f1.empty()) {
          f1 = parse_edge_arg(dot_f1);
        } else {
          bool found = false;
          for (Edge cand : g1.edges())
            if (!cand.adjacent_to(e1) && !found) {
              f1 = cand;
              found = true;
            }
          require(found, Errc::bad_cli_usage,
                  "no edge disjoint from " + e1.str());
        }
      }
      Edge uv = dot_uv.empty() ? g2.edges().front() : parse_edge_arg(dot_uv);
      Graph h = dot_product(g1, e1, f1, g2, uv, alt_pairing);
      out << emit_graph6(h) << "\n";
      return 0;
    }
    if (*cmd_scan) {
      std::ifstream file;
      std::istream* src = &in;
      if (scan_file != "-") {
        file.open(scan_file);
        require(file.good(), Errc::bad_cli_usage,
                "cannot open '" + scan_file + "'");
        src = &file;
      }
      std::string line;
      while (std::getline(*src, line)) {
        if (line.empty()) continue;
        auto start = std::chrono::steady_clock::now();
        nlohmann::json j;
        try {
          Graph g = parse_graph6(line);
          Report r = analyze(g, {scan_o.budget}, scan_o.opt_in_large);
          if (scan_timing)
            r.timing_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
          j = report_to_json(r);
        } catch (const Error& e) {
          j["graph6"] = line;
          j["error"] = e.what();
        }
        out << j.dump() << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pec
