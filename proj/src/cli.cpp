#include "totalchoose/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "totalchoose/bench.hpp"
#include "totalchoose/errors.hpp"
#include "totalchoose/gadget_trials.hpp"
#include "totalchoose/generators.hpp"
#include "totalchoose/instance_io.hpp"
#include "totalchoose/oracle.hpp"
#include "totalchoose/orchestrator.hpp"

namespace totalchoose {

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TOTALCHOOSE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("TOTALCHOOSE_SEED is not a number: '") + env + "'");
    }
  }
  return 1;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

std::vector<int> parse_sizes(const std::string& s) {
  std::vector<int> sizes;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad size '" + item + "' in --sizes");
    }
  }
  return sizes;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"List total coloring of multigraphs from lists of size 2*Delta-1", "totalchoose"};
  app.require_subcommand(1);

  std::string in_path, out_path, coloring_path;
  auto* color = app.add_subcommand("color", "color an instance file and verify the result");
  color->add_option("input", in_path, "instance file")->required();
  color->add_option("-o,--output", out_path, "coloring file (default stdout)");
  bool show_stats = false;
  color->add_flag("--stats", show_stats, "print dispatch counters to stderr");

  auto* verify = app.add_subcommand("verify", "check a coloring against an instance");
  verify->add_option("input", in_path, "instance file")->required();
  verify->add_option("coloring", coloring_path, "coloring file")->required();

  std::uint64_t budget = 10'000'000;
  auto* oracle = app.add_subcommand("oracle", "exact backtracking search");
  oracle->add_option("input", in_path, "instance file")->required();
  oracle->add_option("--budget", budget, "search node budget");
  oracle->add_option("-o,--output", out_path, "coloring file when found");

  int n = 0, delta = 0, list_size = 0, palette = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string kind = "regular";
  double double_prob = 0.3, triple_prob = 0.2;
  auto* gen = app.add_subcommand("gen", "write a random instance");
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--delta", delta, "maximum degree")->required();
  auto* gen_seed = gen->add_option("--seed", seed, "random seed (default $TOTALCHOOSE_SEED or 1)");
  gen->add_option("--lists", list_size, "list size; omit for no list section");
  gen->add_option("--palette", palette, "colors drawn from 0..P-1 (default 4*delta)");
  gen->add_option("--kind", kind, "regular | deficient | multigraph | triple")
      ->check(CLI::IsMember({"regular", "deficient", "multigraph", "triple"}));
  gen->add_option("--double-prob", double_prob, "double-edge probability for multigraphs");
  gen->add_option("--triple-prob", triple_prob, "triple-edge probability for --kind triple");
  gen->add_option("-o,--output", out_path, "instance file (default stdout)");

  std::string sizes_arg = "4096,16384,65536";
  int reps = 3;
  bool json = false;
  auto* bench = app.add_subcommand("bench", "time the pipeline on random regular graphs");
  bench->add_option("--delta", delta, "degree")->required();
  bench->add_option("--sizes", sizes_arg, "comma separated, strictly increasing");
  auto* bench_seed = bench->add_option("--seed", seed, "random seed");
  bench->add_option("--reps", reps, "repetitions per size (best is kept)");
  bench->add_flag("--json", json, "print the report as JSON");

  std::string kind_arg;
  int trials = 1000, length = 5;
  palette = 0;
  auto* gadget = app.add_subcommand("gadget-test", "random trials of one gadget solver");
  gadget->add_option("--kind", kind_arg, "ring, double-edge-thick, ..., k4, k33")->required();
  gadget->add_option("--trials", trials, "trial count");
  auto* gadget_seed = gadget->add_option("--seed", seed, "random seed");
  gadget->add_option("--palette", palette, "palette size (default 12)");
  gadget->add_option("--length", length, "ring length");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  seed_given = gen_seed->count() + bench_seed->count() + gadget_seed->count() > 0;

  try {
    if (!seed_given) seed = default_seed();

    if (color->parsed()) {
      const InstanceFile file = read_instance_file(in_path);
      const TotalColoringResult r = total_color_with_stats(file.graph, file.lists_or_default());
      emit(out_path, write_coloring(file.graph, r.coloring), out);
      if (show_stats) {
        for (const auto& [name, count] : r.stats.branches()) err << name << ' ' << count << '\n';
        err << "probes " << r.probes << '\n';
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const InstanceFile file = read_instance_file(in_path);
      const PartialTotalColoring c = parse_coloring(file.graph, read_text_file(coloring_path));
      const VerifyResult v = verify_total_coloring(file.graph, file.lists_or_default(), c, true);
      if (v) {
        out << "ok\n";
        return kExitOk;
      }
      out << "violation: " << v.message << '\n';
      return kExitFailed;
    }
    if (oracle->parsed()) {
      const InstanceFile file = read_instance_file(in_path);
      const OracleResult r = oracle_total_color(file.graph, file.lists_or_default(), budget);
      switch (r.status) {
        case OracleStatus::Found:
          out << "found\n";
          if (!out_path.empty()) write_text_file(out_path, write_coloring(file.graph, r.coloring));
          return kExitOk;
        case OracleStatus::Infeasible:
          out << "infeasible\n";
          return kExitFailed;
        case OracleStatus::BudgetExceeded:
          out << "budget exceeded after " << r.nodes << " nodes\n";
          return kExitBudget;
      }
    }
    if (gen->parsed()) {
      InstanceFile file;
      if (kind == "regular")
        file.graph = gen_random_regular(n, delta, seed);
      else if (kind == "deficient")
        file.graph = gen_deficient(n, delta, seed);
      else if (kind == "multigraph")
        file.graph = gen_random_multigraph(n, delta, double_prob, seed);
      else
        file.graph = gen_random_multigraph(n, delta, double_prob, seed, triple_prob);
      file.seed = seed;
      file.delta = file.graph.max_degree();
      if (list_size > 0) {
        if (palette == 0) palette = 4 * delta;
        file.palette = palette;
        file.lists = gen_lists(file.graph, list_size, palette, seed + 1);
      }
      emit(out_path, write_instance(file), out);
      return kExitOk;
    }
    if (bench->parsed()) {
      const BenchReport report = run_bench(delta, parse_sizes(sizes_arg), seed, reps);
      if (json) {
        out << report.to_json() << '\n';
      } else {
        out << std::setw(10) << "n" << std::setw(12) << "elements" << std::setw(12) << "seconds"
            << std::setw(14) << "ns/element" << std::setw(16) << "probes/element" << '\n';
        for (const auto& r : report.rows)
          out << std::setw(10) << r.n << std::setw(12) << r.elements << std::setw(12) << std::fixed
              << std::setprecision(4) << r.seconds << std::setw(14) << std::setprecision(1)
              << r.seconds_per_element() * 1e9 << std::setw(16) << std::setprecision(2) << r.probes_per_element()
              << '\n';
        out << "probe ratio " << std::setprecision(3) << report.probe_ratio() << ", time ratio "
            << report.time_ratio() << '\n';
      }
      return kExitOk;
    }
    if (gadget->parsed()) {
      const GadgetKind k = parse_kind(kind_arg);
      const GadgetTrialReport r =
          run_gadget_trials(k, trials, seed, palette > 0 ? palette : 12, k == GadgetKind::Ring ? length : 0);
      out << kind_name(k);
      if (k == GadgetKind::Ring) out << " m=" << length;
      out << ": " << r.solved << '/' << r.trials << " solved, oracle feasible " << r.oracle_feasible
          << ", mismatches " << r.mismatches << '\n';
      for (const auto& f : r.failures) out << "  " << f << '\n';
      return r.clean() ? kExitOk : kExitFailed;
    }
  } catch (const DeltaTooSmall& e) {
    err << "error: " << e.what() << '\n';
    return kExitDeltaTooSmall;
  } catch (const ListTooSmall& e) {
    err << "error: " << e.what() << '\n';
    return kExitListTooSmall;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace totalchoose
