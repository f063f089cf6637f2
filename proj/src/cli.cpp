#include "homing/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "CLI11.hpp"

#include "homing/analysis.hpp"
#include "homing/enumerate.hpp"
#include "homing/serialize.hpp"
#include "homing/verify.hpp"

namespace homing {

namespace {

int default_workers() {
  if (const char* env = std::getenv("SHUFFLE_WORKERS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  return 1;
}

// Writes through a temporary so a failure never leaves a partial file.
void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
  if (!stream) throw IoError("cannot open '" + tmp.string() + "' for writing");
  stream << content;
  stream.close();
  if (stream.fail()) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("failed while writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move '" + tmp.string() + "' to '" + target.string() +
                  "': " + ec.message());
  }
}

void print_table(std::ostream& out, const SequenceTable& table) { out << to_csv(table); }

int run_trace(std::ostream& out, const std::string& shuffle, const std::string& perm,
              bool as_json) {
  const ShuffleRule rule = rule_by_name(shuffle);
  const Permutation start = parse_one_line(perm);
  const Trace trace = iterate_trace(rule, start);
  if (as_json) {
    out << to_json(trace).dump() << "\n";
    return 0;
  }
  out << "rule: " << trace.rule_name << "\n";
  for (std::size_t i = 0; i < trace.states.size(); ++i)
    out << "step " << i << ": " << to_string(trace.states[i]) << "   front "
        << trace.front_cards[i] << "\n";
  out << "steps: " << trace.steps << "\n";
  out << "sorted: " << (trace.sorted ? "yes" : "no") << "\n";
  return 0;
}

int run_termnum(std::ostream& out, const std::string& shuffle, int n, int workers, bool as_json) {
  const ShuffleRule rule = rule_by_name(shuffle);
  const TerminationReport report = termination_number(rule, n, workers);
  if (as_json) {
    out << to_json(report).dump() << "\n";
    return 0;
  }
  out << "rule: " << report.rule_name << "\n";
  out << "n: " << report.n << "\n";
  out << "tn: " << report.tn << "\n";
  out << "least witness: " << to_string(report.least_witness) << "\n";
  out << "witness count: " << report.witness_count << "\n";
  out << "histogram:";
  for (const auto& [steps, count] : report.histogram) out << " " << steps << ":" << count;
  out << "\n";
  return 0;
}

SequenceTable brute_table(const std::string& what, int n_max, int workers) {
  std::vector<std::int64_t> values;
  for (int n = 1; n <= n_max; ++n) {
    if (what == "irreducible")
      values.push_back(count_irreducible_bruteforce(n, workers));
    else if (what == "unsortable")
      values.push_back(count_unsortable_bruteforce(n, workers));
    else
      values.push_back(class_count_bruteforce(n));
  }
  return {what, "brute_force", std::move(values)};
}

SequenceTable formula_table(const std::string& what, int n_max) {
  if (what == "irreducible") return count_irreducible_recurrence(n_max);
  if (what == "unsortable") return count_unsortable_formula(n_max);
  std::vector<std::int64_t> values;
  for (int n = 1; n <= n_max; ++n) values.push_back(class_count_formula(n));
  return {"classes", "formula", std::move(values)};
}

int run_count(std::ostream& out, std::ostream& err, const std::string& what, int n,
              const std::string& method, int workers) {
  if (method == "formula" || method == "both") print_table(out, formula_table(what, n));
  if (method == "brute" || method == "both") print_table(out, brute_table(what, n, workers));
  if (method == "both") {
    const SequenceTable formula = formula_table(what, n);
    const SequenceTable brute = brute_table(what, n, workers);
    for (int i = 1; i <= n; ++i) {
      if (formula.values[i - 1] != brute.values[i - 1]) {
        err << "error: formula and brute force disagree for " << what << " at n=" << i << ": "
            << formula.values[i - 1] << " vs " << brute.values[i - 1] << "\n";
        return 4;
      }
    }
    out << "agreement OK\n";
  }
  return 0;
}

int run_sortables(std::ostream& out, const std::string& shuffle, int n, bool list, bool ratio,
                  int workers) {
  const ShuffleRule rule = rule_by_name(shuffle);
  const SortableCensus census = sortable_census(rule, n, list, workers);
  out << "rule: " << rule.name() << "\n";
  out << "n: " << n << "\n";
  out << "sortable count: " << census.count << "\n";
  if (ratio) {
    const std::uint64_t total = factorial(n);
    out << "ratio: " << census.count << "/" << total << " = "
        << static_cast<double>(census.count) / static_cast<double>(total) << "\n";
    if (rule.name() == "mckinley") {
      (void)mckinley_ratio_probe(n, workers);  // exact-rational assertion
      out << "e/n bound: " << 2.7182818285 / n << " (ratio is below the bound)\n";
    }
  }
  if (list && census.members)
    for (const Permutation& w : *census.members) out << to_string(w) << "\n";
  return 0;
}

int run_verify(std::ostream& out, const std::string& suite, int max_n) {
  const std::vector<CheckResult> results = run_suite(suite, max_n);
  int failures = 0;
  for (const CheckResult& r : results) {
    if (r.pass) {
      out << "PASS " << r.name << " (" << r.detail << ")\n";
    } else {
      out << "FAIL " << r.name << " — " << r.detail << "\n";
      ++failures;
    }
  }
  out << "result: " << (results.size() - failures) << " passed, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

SequenceTable export_table(const std::string& what, int n_max, int workers) {
  if (what == "irreducible" || what == "unsortable" || what == "classes")
    return formula_table(what, n_max);
  constexpr std::string_view tn_prefix = "tn-";
  if (what.rfind(tn_prefix, 0) == 0) {
    const ShuffleRule rule = rule_by_name(what.substr(tn_prefix.size()));
    std::vector<std::int64_t> values;
    for (int n = 1; n <= n_max; ++n) values.push_back(termination_number(rule, n, workers).tn);
    return {what, "brute_force", std::move(values)};
  }
  constexpr std::string_view sortable_prefix = "sortable-";
  if (what.rfind(sortable_prefix, 0) == 0) {
    const ShuffleRule rule = rule_by_name(what.substr(sortable_prefix.size()));
    std::vector<std::int64_t> values;
    for (int n = 1; n <= n_max; ++n)
      values.push_back(sortable_census(rule, n, false, workers).count);
    return {what, "brute_force", std::move(values)};
  }
  throw UnknownKind("unknown sequence '" + what +
                    "'; expected irreducible|unsortable|classes|tn-<shuffle>|sortable-<shuffle>");
}

int run_export(std::ostream& out, const std::string& what, int n_max, const std::string& format,
               const std::string& path, int workers) {
  const SequenceTable table = export_table(what, n_max, workers);
  const std::string content =
      format == "csv" ? to_csv(table) : to_json(table).dump(2) + "\n";
  write_file_atomic(path, content);
  out << "wrote " << path << "\n";
  return 0;
}

int run_bench(std::ostream& out, const std::string& shuffle, int n, int workers) {
  const ShuffleRule rule = rule_by_name(shuffle);
  const auto start = std::chrono::steady_clock::now();
  const TerminationReport report = termination_number(rule, n, workers);
  const auto stop = std::chrono::steady_clock::now();
  const double seconds = std::chrono::duration<double>(stop - start).count();
  const std::uint64_t total = factorial(n);
  out << "rule: " << rule.name() << "\n";
  out << "n: " << n << "\n";
  out << "workers: " << workers << "\n";
  out << "permutations: " << total << "\n";
  out << "tn: " << report.tn << "\n";
  out << "elapsed_s: " << seconds << "\n";
  out << "throughput_perms_per_s: "
      << static_cast<std::uint64_t>(seconds > 0 ? static_cast<double>(total) / seconds : 0)
      << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fixed-point homing shuffles: traces, termination sweeps, counts, and checks"};
  app.require_subcommand(1);

  std::string shuffle, perm, what, method = "formula", suite = "all", format = "csv", out_path;
  int n = 0, n_max = 0, max_n = 8;
  int workers = default_workers();
  bool as_json = false, list = false, ratio = false;

  CLI::App* trace = app.add_subcommand("trace", "Iterate one deck until the 1-card is in front");
  trace->add_option("--shuffle", shuffle, "shuffle name")->required();
  trace->add_option("--perm", perm, "deck in one-line notation, e.g. \"3 4 2 1 5\"")->required();
  trace->add_flag("--json", as_json, "emit the trace as JSON");

  CLI::App* termnum = app.add_subcommand("termnum", "Exhaustive termination sweep over S_n");
  termnum->add_option("--shuffle", shuffle, "shuffle name")->required();
  termnum->add_option("--n", n, "deck size")->required();
  termnum->add_option("--workers", workers, "worker threads");
  termnum->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* count = app.add_subcommand("count", "Count irreducible/unsortable decks or classes");
  count->add_option("--what", what, "irreducible|unsortable|classes")
      ->required()
      ->check(CLI::IsMember({"irreducible", "unsortable", "classes"}));
  count->add_option("--n", n, "count for n = 1..N")->required();
  count->add_option("--method", method, "formula|brute|both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));
  count->add_option("--workers", workers, "worker threads");

  CLI::App* sortables = app.add_subcommand("sortables", "Census of the decks a shuffle sorts");
  sortables->add_option("--shuffle", shuffle, "shuffle name")->required();
  sortables->add_option("--n", n, "deck size")->required();
  sortables->add_flag("--list", list, "list every sortable deck (n <= 8)");
  sortables->add_flag("--ratio", ratio, "print count/n!, and the e/n bound for mckinley");
  sortables->add_option("--workers", workers, "worker threads");

  CLI::App* verify = app.add_subcommand("verify", "Run the exhaustive verification suites");
  verify->add_option("--suite", suite, "homing|wilf|unsortable|max|equivalence|all")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", max_n, "largest deck size to sweep (default 8)");

  CLI::App* exports = app.add_subcommand("export", "Write an integer sequence to CSV or JSON");
  exports->add_option("--what", what,
                      "irreducible|unsortable|classes|tn-<shuffle>|sortable-<shuffle>")
      ->required();
  exports->add_option("--n-max", n_max, "rows for n = 1..N")->required();
  exports->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  exports->add_option("--out", out_path, "output path")->required();

  CLI::App* bench = app.add_subcommand("bench", "Time a full termination sweep");
  bench->add_option("--shuffle", shuffle, "shuffle name")->required();
  bench->add_option("--n", n, "deck size")->required();
  bench->add_option("--workers", workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e, out, err);
    return 2;
  }

  try {
    if (trace->parsed()) return run_trace(out, shuffle, perm, as_json);
    if (termnum->parsed()) return run_termnum(out, shuffle, n, workers, as_json);
    if (count->parsed()) return run_count(out, err, what, n, method, workers);
    if (sortables->parsed()) return run_sortables(out, shuffle, n, list, ratio, workers);
    if (verify->parsed()) return run_verify(out, suite, max_n);
    if (exports->parsed()) return run_export(out, what, n_max, format, out_path, workers);
    if (bench->parsed()) return run_bench(out, shuffle, n, workers);
  } catch (const NExceedsExhaustiveCap& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("homing");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace homing
