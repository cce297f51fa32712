#include "sumdiff/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "sumdiff/bounds.hpp"
#include "sumdiff/enumerate.hpp"
#include "sumdiff/errors.hpp"
#include "sumdiff/families.hpp"
#include "sumdiff/graph_io.hpp"
#include "sumdiff/scan.hpp"
#include "sumdiff/serialize.hpp"
#include "sumdiff/solvers.hpp"
#include "sumdiff/sumsets.hpp"

namespace sumdiff {
namespace {

struct SolverFlags {
  std::string input;
  std::string format = "g6";
  Label range = 0;
  bool escalate = false;
  std::uint64_t budget = 0;
  unsigned workers = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", input, "Input graph file")->required();
    cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"g6", "edges"}));
    cmd->add_option("--range", range, "Label range bound B (0 = default)");
    cmd->add_flag("--escalate", escalate, "Double B until the value is stable");
    cmd->add_option("--budget", budget, "Search-node budget (0 = unlimited)");
    cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  }

  SearchConfig config() const {
    SearchConfig cfg;
    cfg.label_bound = range;
    cfg.escalate = escalate;
    if (budget > 0) cfg.node_budget = budget;
    cfg.workers = workers;
    return cfg;
  }

  std::vector<Graph> graphs() const {
    return read_graphs(input, format == "edges" ? GraphFormat::EdgeList : GraphFormat::Graph6);
  }
};

std::string witness_text(const VertexLabelling& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t v = 0; v < f.size(); ++v) os << (v ? "," : "") << f[static_cast<Vertex>(v)];
  os << ']';
  return os.str();
}

void write_json(const std::string& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

int run_index(const std::string& which, const SolverFlags& flags, const std::string& json_path,
              std::ostream& out) {
  const auto cfg = flags.config();
  Json all = Json::array();
  for (const Graph& g : flags.graphs()) {
    Json j;
    if (which == "sum" || which == "diff") {
      const auto r = which == "sum" ? sum_index(g, cfg) : difference_index(g, cfg);
      j = index_result_to_json(r);
      out << emit_graph6(g) << ' ' << to_string(r.invariant) << ' ' << r.value
          << " witness=" << witness_text(r.witness) << " range=" << r.range_used
          << " exhaustive=" << (r.exhaustive_within_range ? "true" : "false") << '\n';
    } else if (which == "exclusive") {
      const auto r = exclusive_sum_number(g, cfg);
      j = exclusive_result_to_json(r);
      out << emit_graph6(g) << " exclusive_sum_number<=";
      if (r.found) out << r.bound.value << " witness=" << witness_text(r.bound.witness);
      else out << "none-in-range";
      out << " range=" << r.bound.range_used
          << " exhaustive=" << (r.bound.exhaustive_within_range ? "true" : "false") << '\n';
    } else {
      const auto r = sum_number(g, cfg);
      j = sum_number_result_to_json(r);
      out << emit_graph6(g) << " sum_number<=";
      if (r.found) out << r.bound.value << " witness=" << witness_text(r.bound.witness);
      else out << "none-in-range";
      out << " range=" << r.bound.range_used
          << " exhaustive=" << (r.bound.exhaustive_within_range ? "true" : "false") << '\n';
    }
    j["graph6"] = emit_graph6(g);
    all.push_back(std::move(j));
  }
  if (!json_path.empty()) write_json(json_path, all);
  return kExitOk;
}

FamilyInstance build_family(const std::string& name, int k, int s, int n) {
  if (name == "chained-cycles") return chained_odd_cycles(k, s);
  if (name == "prism") return prism(n);
  if (name == "subdivided-complete") return subdivided_complete(n);
  if (name == "subdivided-complete-kk") return subdivided_complete_kk(n, k);
  return gnk(n, k);
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum index, difference index and sum-labelling toolkit"};
  app.require_subcommand(1);

  // index
  auto* index = app.add_subcommand("index", "Compute an invariant by exact search");
  std::string index_kind;
  std::string index_json;
  SolverFlags index_flags;
  index->add_option("invariant", index_kind, "sum | diff | exclusive | sumnumber")
      ->required()
      ->check(CLI::IsMember({"sum", "diff", "exclusive", "sumnumber"}));
  index_flags.attach(index);
  index->add_option("--json", index_json, "Write results as JSON");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate lower bounds");
  std::string bounds_in;
  std::string bounds_format = "g6";
  std::string bounds_json;
  int bounds_max_k = 3;
  bounds->add_option("--in", bounds_in, "Input graph file")->required();
  bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"g6", "edges"}));
  bounds->add_option("--max-k", bounds_max_k, "Largest k for (2k+1)-cycle bounds");
  bounds->add_option("--json", bounds_json, "Write the reports to a file");

  // family
  auto* family = app.add_subcommand("family", "Generate a graph family instance");
  std::string family_name;
  int fk = 0, fs = 0, fn = 0;
  std::string emit_path;
  std::string cert_path;
  family->add_option("name", family_name)
      ->required()
      ->check(CLI::IsMember({"chained-cycles", "prism", "subdivided-complete",
                             "subdivided-complete-kk", "gnk"}));
  family->add_option("--k", fk);
  family->add_option("--s", fs);
  family->add_option("--n", fn);
  family->add_option("--emit", emit_path, "Write the graph as graph6");
  family->add_option("--cert", cert_path, "Write the family bundle with certificates as JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify labelling certificates against a graph");
  std::string verify_graph;
  std::string verify_cert;
  std::string verify_format = "g6";
  verify->add_option("--graph", verify_graph)->required();
  verify->add_option("--cert", verify_cert)->required();
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"g6", "edges"}));

  // scan
  auto* scan = app.add_subcommand("scan", "Scan a graph corpus for conjecture violations");
  SolverFlags scan_flags;
  std::string scan_checks = "conj42,conj44,dflesm";
  std::string scan_out;
  bool fail_on_counterexample = false;
  int scan_max_k = 3;
  scan_flags.attach(scan);
  scan->add_option("--checks", scan_checks, "Comma list of conj42, conj44, dflesm");
  scan->add_option("--out", scan_out, "Report file")->required();
  scan->add_option("--max-k", scan_max_k, "Largest k for (2k+1)-cycle bounds");
  scan->add_flag("--fail-on-counterexample", fail_on_counterexample);

  // sumset
  auto* sumset_cmd = app.add_subcommand("sumset", "Additive-combinatorics checks");
  auto* stanchescu = sumset_cmd->add_subcommand("stanchescu", "Random stability-theorem check");
  sumset_cmd->require_subcommand(1);
  std::uint64_t trials = 10000;
  std::uint64_t seed = 7;
  std::int64_t max_elem = 30;
  int max_size = 8;
  stanchescu->add_option("--trials", trials);
  stanchescu->add_option("--seed", seed);
  stanchescu->add_option("--max-elem", max_elem);
  stanchescu->add_option("--max-size", max_size);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Write connected graphs as graph6");
  int enum_n = 0;
  bool enum_up_to = false;
  std::string enum_out;
  enumerate->add_option("--n", enum_n)->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  enumerate->add_flag("--up-to", enum_up_to, "Include all orders 1..n");
  enumerate->add_option("--out", enum_out, "Output file (stdout when absent)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*index) return run_index(index_kind, index_flags, index_json, out);

    if (*bounds) {
      const auto graphs = read_graphs(
          bounds_in, bounds_format == "edges" ? GraphFormat::EdgeList : GraphFormat::Graph6);
      Json all = Json::array();
      for (const auto& g : graphs) all.push_back(bound_report_to_json(bound_report(g, bounds_max_k)));
      if (!bounds_json.empty()) write_json(bounds_json, all);
      out << all.dump(2) << '\n';
      return kExitOk;
    }

    if (*family) {
      const auto inst = build_family(family_name, fk, fs, fn);
      if (!emit_path.empty()) write_text_file(emit_path, emit_graph6(inst.graph) + "\n");
      if (!cert_path.empty()) write_json(cert_path, family_to_json(inst));
      out << inst.family << ' ' << emit_graph6(inst.graph) << " n=" << inst.graph.order()
          << " m=" << inst.graph.size() << '\n';
      for (const auto& c : inst.certificates) {
        const auto verdict = verify_certificate(c);
        out << "certificate " << to_string(c.kind) << " claimed=" << c.claimed_value
            << " observed=" << verdict.observed << (verdict.pass ? " pass" : " FAIL") << '\n';
      }
      return kExitOk;
    }

    if (*verify) {
      const auto graphs = read_graphs(
          verify_graph, verify_format == "edges" ? GraphFormat::EdgeList : GraphFormat::Graph6);
      if (graphs.size() != 1) throw ValidationError("verify expects exactly one graph");
      const Json cert_json = Json::parse(read_text_file(verify_cert));
      const auto certs = certificates_from_json(cert_json);
      bool all_pass = true;
      for (const auto& c : certs) {
        if (!(c.graph == graphs.front())) {
          throw ValidationError("certificate graph " + emit_graph6(c.graph) +
                                " does not match " + emit_graph6(graphs.front()));
        }
        const auto verdict = verify_certificate(c);
        all_pass = all_pass && verdict.pass;
        out << to_string(c.kind) << " claimed=" << c.claimed_value
            << " observed=" << verdict.observed << (verdict.pass ? " pass" : " FAIL") << '\n';
      }
      return all_pass ? kExitOk : kExitCounterexample;
    }

    if (*scan) {
      const auto graphs = scan_flags.graphs();
      const auto report = scan_conjectures(graphs, scan_flags.config(),
                                           parse_scan_checks(scan_checks), scan_flags.workers,
                                           scan_max_k);
      write_json(scan_out, scan_report_to_json(report));
      out << "scanned " << report.records.size() << " graphs: "
          << report.counterexamples_42.size() << " conj42, "
          << report.counterexamples_44.size() << " conj44, "
          << report.counterexamples_df_le_sm.size() << " df<=sm counterexamples; "
          << report.inconclusive << " inconclusive\n";
      if (fail_on_counterexample && report.has_counterexample()) return kExitCounterexample;
      return kExitOk;
    }

    if (*stanchescu) {
      const auto run = stanchescu_property_run(trials, seed, max_elem, max_size);
      Json j;
      j["trials"] = run.trials;
      j["seed"] = seed;
      j["skipped_undefined"] = run.skipped_undefined;
      j["hypothesis_true"] = run.hypothesis_true;
      j["violations"] = run.violations;
      out << j.dump() << '\n';
      return run.violations == 0 ? kExitOk : kExitCounterexample;
    }

    if (*enumerate) {
      const auto graphs = enum_up_to ? enumerate_connected_up_to(enum_n) : enumerate_connected(enum_n);
      std::string text;
      for (const auto& g : graphs) text += emit_graph6(g) + "\n";
      if (enum_out.empty()) out << text;
      else write_text_file(enum_out, text);
      return kExitOk;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sumdiff
