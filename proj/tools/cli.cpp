#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "rfot/analysis.hpp"
#include "rfot/errors.hpp"
#include "rfot/evaluation.hpp"
#include "rfot/generators.hpp"
#include "rfot/io.hpp"
#include "rfot/solvers.hpp"

namespace rfot {
namespace {

struct GlobalFlags {
  std::optional<int> decimal;
  std::uint64_t cap_paths = Limits{}.max_paths;
  std::uint64_t cap_scenarios = Limits{}.max_scenarios;
  std::uint64_t cap_lp_nonzeros = Limits{}.max_lp_nonzeros;
  std::string dump_lp;

  Limits limits() const { return Limits{cap_paths, cap_scenarios, cap_lp_nonzeros}; }
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Holds the --dump-lp stream for the duration of one command.
class LpDump {
 public:
  explicit LpDump(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw Usage("cannot write " + path);
  }

  SolverOptions options(const Limits& limits) {
    SolverOptions opts;
    opts.limits = limits;
    if (file_.is_open()) {
      opts.observer = [this](const LpProblem& problem, const LpSolution& solution) {
        file_ << "# lp " << ++count_ << " status=" << to_string(solution.status);
        if (solution.status == LpStatus::kOptimal) file_ << " objective=" << to_string(solution.objective);
        file_ << '\n' << format_lp(problem) << '\n';
      };
    }
    return opts;
  }

 private:
  std::ofstream file_;
  int count_ = 0;
};

void print_decimal(std::ostream& out, const GlobalFlags& flags, const std::string& name,
                   const Rational& value) {
  if (flags.decimal) out << "# " << name << "~" << to_decimal(value, *flags.decimal) << '\n';
}

// Writes to `path`, or to `fallback` when the path is empty.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Usage("cannot write " + path);
  write(file);
}

// "K<n>" (complete), "C<n>" (cycle) or an edge list "1-2,2-3,...".
UndirectedGraph parse_graph(const std::string& text, int vertices) {
  UndirectedGraph graph;
  if (text.size() > 1 && (text[0] == 'K' || text[0] == 'C')) {
    const int n = std::stoi(text.substr(1));
    graph.num_vertices = n;
    if (text[0] == 'K') {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) graph.edges.emplace_back(i, j);
      }
    } else {
      for (int i = 1; i <= n; ++i) graph.edges.emplace_back(i, i % n + 1);
    }
    return graph;
  }
  std::stringstream list(text);
  std::string item;
  int highest = 0;
  while (std::getline(list, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Usage("graph edge '" + item + "' is not of the form i-j");
    const int i = std::stoi(item.substr(0, dash));
    const int j = std::stoi(item.substr(dash + 1));
    graph.edges.emplace_back(i, j);
    highest = std::max({highest, i, j});
  }
  graph.num_vertices = vertices > 0 ? vertices : highest;
  return graph;
}

// Directed edge list "a>b,b>c,..."; vertices in order of first appearance.
DirectedGraph parse_digraph(const std::string& text) {
  DirectedGraph graph;
  auto declare = [&graph](const std::string& v) {
    if (std::find(graph.vertices.begin(), graph.vertices.end(), v) == graph.vertices.end()) {
      graph.vertices.push_back(v);
    }
  };
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    const auto arrow = item.find('>');
    if (arrow == std::string::npos) throw Usage("arc '" + item + "' is not of the form a>b");
    const std::string tail = item.substr(0, arrow);
    const std::string head = item.substr(arrow + 1);
    declare(tail);
    declare(head);
    graph.edges.emplace_back(tail, head);
  }
  return graph;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Usage("range must look like a..b");
  const int a = std::stoi(text.substr(0, dots));
  const int b = std::stoi(text.substr(dots + 2));
  if (a > b) throw Usage("empty range " + text);
  return {a, b};
}

GeneratedInstance generate_family(const std::string& family, int r) {
  if (family == "log-gap") return gen_log_gap(r);
  if (family == "linear-gap") return gen_linear_gap(r);
  throw Usage("unknown family '" + family + "' (expected log-gap or linear-gap)");
}

// Triples of the file plus the temporally repeated part expanded to triples.
TripleSolution all_triples(const SolutionFile& file, const Instance& inst) {
  TripleSolution sol = file.triples;
  for (auto& t : to_triples(file.repeated, inst).triples) sol.triples.push_back(std::move(t));
  return sol;
}

AdversaryReport evaluate(const SolutionFile& file, const Instance& inst, const Limits& limits) {
  EvaluationOptions options;
  options.limits = limits;
  if (file.is_repeated_only()) return robust_value_tr(file.repeated, inst, options);
  return robust_value(all_triples(file, inst), inst, options);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact robust maximum flows over time", "rfot"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--decimal", flags.decimal, "Also print values with this many decimal digits")
      ->check(CLI::Range(0, 100));
  app.add_option("--cap-paths", flags.cap_paths, "Maximum number of enumerated paths");
  app.add_option("--cap-scenarios", flags.cap_scenarios, "Maximum number of enumerated scenarios");
  app.add_option("--cap-lp-nonzeros", flags.cap_lp_nonzeros, "Maximum LP constraint nonzeros");
  app.add_option("--dump-lp", flags.dump_lp, "Write every LP that is solved to this file");

  // generate
  std::string family;
  std::vector<std::string> params;
  std::string output;
  std::string certificate;
  std::string graph_text;
  int graph_vertices = 0;
  std::string s1 = "s1", s2 = "s2", d1 = "d1", d2 = "d2";
  auto* generate = app.add_subcommand("generate", "Write an instance of a constructed family");
  generate->add_option("family", family,
                       "log-gap | linear-gap | clique | disjoint-paths | static-embedding")
      ->required();
  generate->add_option("params", params, "r for the gap and clique families, the input "
                                         "instance for static-embedding");
  generate->add_option("-o,--output", output, "Instance file (default: stdout)");
  generate->add_option("--certificate", certificate,
                       "Certificate solution file (default: <output>.sol)");
  generate->add_option("--graph", graph_text,
                       "clique: K<n>, C<n> or i-j,...; disjoint-paths: a>b,...");
  generate->add_option("--vertices", graph_vertices, "clique: number of graph vertices");
  generate->add_option("--s1", s1);
  generate->add_option("--s2", s2);
  generate->add_option("--d1", d1);
  generate->add_option("--d2", d2);

  // solvers
  std::string instance_path;
  std::string solution_path;
  std::string mode = "exact";
  auto* solve_tr_cmd = app.add_subcommand("solve-tr", "Optimal robust temporally repeated flow");
  solve_tr_cmd->add_option("instance", instance_path)->required();
  solve_tr_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exact", "compact"}));
  solve_tr_cmd->add_option("-o,--output", output, "Solution file (default: stdout)");

  auto* solve_general_cmd = app.add_subcommand("solve-general", "Optimal robust triple solution");
  solve_general_cmd->add_option("instance", instance_path)->required();
  solve_general_cmd->add_option("-o,--output", output, "Solution file (default: stdout)");

  auto* robust_cmd = app.add_subcommand("robust-value", "Robust value of a solution");
  auto* worst_cmd = app.add_subcommand("worst-scenario", "Worst-case scenario for a solution");
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution for capacity violations");
  for (auto* cmd : {robust_cmd, worst_cmd, verify_cmd}) {
    cmd->add_option("instance", instance_path)->required();
    cmd->add_option("solution", solution_path)->required();
  }

  bool with_gap = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Structural parameters of an instance");
  analyze_cmd->add_option("instance", instance_path)->required();
  analyze_cmd->add_flag("--gap", with_gap, "Also solve both problems and report the gap");

  std::string range_text;
  auto* sweep_cmd = app.add_subcommand("gap-sweep", "Optimality gap over a family");
  sweep_cmd->add_option("family", family, "log-gap | linear-gap")->required();
  sweep_cmd->add_option("--r-range", range_text, "a..b")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Limits limits = flags.limits();
    LpDump dump(flags.dump_lp);

    if (generate->parsed()) {
      std::optional<TripleSolution> cert;
      Instance inst;
      auto param_r = [&params]() {
        if (params.size() != 1) throw Usage("expected exactly one parameter r");
        return std::stoi(params[0]);
      };
      if (family == "log-gap" || family == "linear-gap") {
        auto generated = generate_family(family, param_r());
        inst = std::move(generated.instance);
        cert = std::move(generated.certificate);
      } else if (family == "clique") {
        if (graph_text.empty()) throw Usage("clique needs --graph");
        auto generated = gen_clique_reduction(parse_graph(graph_text, graph_vertices), param_r());
        inst = std::move(generated.instance);
        cert = std::move(generated.certificate);
      } else if (family == "disjoint-paths") {
        if (graph_text.empty()) throw Usage("disjoint-paths needs --graph");
        inst = gen_disjoint_paths_reduction(parse_digraph(graph_text), s1, s2, d1, d2);
      } else if (family == "static-embedding") {
        if (params.size() != 1) throw Usage("static-embedding needs an input instance file");
        inst = gen_static_embedding(to_static(read_instance_file(params[0])));
      } else {
        throw Usage("unknown family '" + family + "'");
      }
      emit(output, out, [&inst](std::ostream& os) { write_instance(os, inst); });
      if (cert) {
        if (certificate.empty() && !output.empty()) certificate = output + ".sol";
        if (!certificate.empty()) {
          emit(certificate, out, [&](std::ostream& os) { write_solution(os, *cert, inst); });
        }
      }
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      const auto [a, b] = parse_range(range_text);
      out << "r tr_opt general_opt gap\n";
      for (int r = a; r <= b; ++r) {
        const auto generated = generate_family(family, r);
        const GapReport gap = optimality_gap(generated.instance, dump.options(limits));
        out << r << ' ' << to_string(gap.tr_optimum) << ' ' << to_string(gap.general_optimum)
            << ' ' << to_string(gap.gap) << '\n';
        if (flags.decimal && !gap.gap.infinite) {
          out << "# r=" << r << " gap~" << to_decimal(gap.gap.ratio, *flags.decimal) << '\n';
        }
      }
      return kExitOk;
    }

    const Instance inst = read_instance_file(instance_path);
    require_valid(inst);

    if (analyze_cmd->parsed()) {
      const AnalysisReport report = analyze(inst, with_gap, dump.options(limits));
      out << format_report(report) << '\n';
      if (flags.decimal) {
        print_decimal(out, flags, "eta", report.eta.eta);
        if (report.gap && !report.gap->gap.infinite) print_decimal(out, flags, "gap", report.gap->gap.ratio);
        if (report.bound) print_decimal(out, flags, "bound", *report.bound);
      }
      return kExitOk;
    }

    if (solve_tr_cmd->parsed()) {
      const TrMode tr_mode =
          mode == "compact" ? TrMode::kCompactColumnGeneration : TrMode::kScenarioEnumeration;
      const TrSolveResult result = solve_tr(inst, tr_mode, dump.options(limits));
      emit(output, out, [&](std::ostream& os) {
        os << "# robust_value=" << to_string(result.robust_value) << " mode=" << to_string(result.mode)
           << " loss=" << to_string(result.loss) << '\n';
        print_decimal(os, flags, "robust_value", result.robust_value);
        write_solution(os, result.flow, inst);
      });
      if (!output.empty()) out << "robust_value=" << to_string(result.robust_value) << '\n';
      return kExitOk;
    }

    if (solve_general_cmd->parsed()) {
      const GeneralSolveResult result = solve_general(inst, dump.options(limits));
      emit(output, out, [&](std::ostream& os) {
        os << "# robust_value=" << to_string(result.robust_value)
           << " loss=" << to_string(result.loss) << " support_paths=" << result.support_paths
           << '\n';
        print_decimal(os, flags, "robust_value", result.robust_value);
        write_solution(os, result.solution, inst);
      });
      if (!output.empty()) out << "robust_value=" << to_string(result.robust_value) << '\n';
      return kExitOk;
    }

    const SolutionFile solution = read_solution_file(solution_path, inst);

    if (verify_cmd->parsed()) {
      bool ok = true;
      for (const auto& problem : validate_tr_flow(solution.repeated, inst)) {
        out << "invalid " << problem << '\n';
        ok = false;
      }
      for (const auto& problem : validate_solution(solution.triples, inst)) {
        out << "invalid " << problem << '\n';
        ok = false;
      }
      if (!ok) return kExitFinding;
      if (auto violation = verify_feasibility(all_triples(solution, inst), inst, limits)) {
        out << format_violation(*violation, inst) << '\n';
        return kExitFinding;
      }
      out << "feasible\n";
      return kExitOk;
    }

    const AdversaryReport report = evaluate(solution, inst, limits);
    if (robust_cmd->parsed()) {
      out << "robust_value=" << to_string(report.robust_value) << '\n';
    } else {
      out << "worst_scenario z=" << format_scenario(report.worst_scenario, inst)
          << " value=" << to_string(report.robust_value) << '\n';
    }
    print_decimal(out, flags, "robust_value", report.robust_value);
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const CapExceeded& e) {
    err << "refused (beyond desk scale): " << e.what() << '\n';
  } catch (const Usage& e) {
    err << "usage: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
}  // namespace rfot
