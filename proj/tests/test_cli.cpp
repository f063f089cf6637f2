#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "homing/cli.hpp"

using namespace homing;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("trace command") {
  const CliRun run = cli({"trace", "--shuffle", "topswops", "--perm", "3 4 2 1 5"});
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("step 3: 1 3 2 4 5") != std::string::npos);
  CHECK(run.out.find("steps: 3") != std::string::npos);
  CHECK(run.out.find("sorted: no") != std::string::npos);

  const CliRun zero = cli({"trace", "--shuffle", "mckinley", "--perm", "1 2 3"});
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("steps: 0") != std::string::npos);

  const CliRun max = cli({"trace", "--shuffle", "max", "--perm", "2 3 4 5 1"});
  CHECK(max.exit_code == 0);
  CHECK(max.out.find("steps: 7") != std::string::npos);
  CHECK(max.out.find("sorted: yes") != std::string::npos);
}

TEST_CASE("trace --json emits the full record") {
  const CliRun run = cli({"trace", "--shuffle", "topswops", "--perm", "3,4,2,1,5", "--json"});
  CHECK(run.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(run.out);
  CHECK(j["rule"] == "topswops");
  CHECK(j["steps"] == 3);
  CHECK(j["sorted"] == false);
  CHECK(j["start"] == nlohmann::json({3, 4, 2, 1, 5}));
  CHECK(j["states"].size() == 4);
  CHECK(j["front_cards"] == nlohmann::json({3, 2, 4, 1}));
}

TEST_CASE("parse failures name the offending token and exit 2") {
  const CliRun bad_token = cli({"trace", "--shuffle", "topswops", "--perm", "2 x 1"});
  CHECK(bad_token.exit_code == 2);
  CHECK(bad_token.err.find("'x'") != std::string::npos);

  const CliRun bad_rule = cli({"trace", "--shuffle", "riffle", "--perm", "2 1"});
  CHECK(bad_rule.exit_code == 2);
  CHECK(bad_rule.err.find("riffle") != std::string::npos);

  const CliRun bad_flag = cli({"trace", "--permutation", "2 1"});
  CHECK(bad_flag.exit_code == 2);

  const CliRun no_cmd = cli({});
  CHECK(no_cmd.exit_code == 2);
}

TEST_CASE("termnum command") {
  const CliRun run = cli({"termnum", "--shuffle", "transposition", "--n", "7"});
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("tn: 6") != std::string::npos);
  CHECK(run.out.find("least witness: 2 3 4 5 6 7 1") != std::string::npos);
  CHECK(run.out.find("witness count: 720") != std::string::npos);

  const CliRun json_run =
      cli({"termnum", "--shuffle", "max", "--n", "5", "--workers", "2", "--json"});
  CHECK(json_run.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(json_run.out);
  CHECK(j["tn"] == 7);
  CHECK(j["n"] == 5);
  CHECK(j["witness_count"].is_number());
  CHECK(j["histogram"].is_object());

  const CliRun capped = cli({"termnum", "--shuffle", "transposition", "--n", "13"});
  CHECK(capped.exit_code == 3);
}

TEST_CASE("termnum output is identical across worker counts") {
  const CliRun base = cli({"termnum", "--shuffle", "transposition", "--n", "7", "--workers", "1"});
  for (const char* workers : {"2", "8"}) {
    const CliRun other =
        cli({"termnum", "--shuffle", "transposition", "--n", "7", "--workers", workers});
    CHECK(other.exit_code == 0);
    CHECK(other.out == base.out);
  }
}

TEST_CASE("count command") {
  const CliRun formula = cli({"count", "--what", "unsortable", "--n", "12", "--method", "formula"});
  CHECK(formula.exit_code == 0);
  CHECK(formula.out.find("12,51122982,formula") != std::string::npos);

  const CliRun irr = cli({"count", "--what", "irreducible", "--n", "1"});
  CHECK(irr.exit_code == 0);
  CHECK(irr.out.find("1,1,formula") != std::string::npos);

  const CliRun both = cli({"count", "--what", "unsortable", "--n", "7", "--method", "both"});
  CHECK(both.exit_code == 0);
  CHECK(both.out.find("7,1043,formula") != std::string::npos);
  CHECK(both.out.find("7,1043,brute_force") != std::string::npos);
  CHECK(both.out.find("agreement OK") != std::string::npos);

  const CliRun classes = cli({"count", "--what", "classes", "--n", "3", "--method", "both"});
  CHECK(classes.exit_code == 0);
  CHECK(classes.out.find("3,5,formula") != std::string::npos);

  const CliRun unknown = cli({"count", "--what", "widgets", "--n", "3"});
  CHECK(unknown.exit_code == 2);

  const CliRun capped = cli({"count", "--what", "unsortable", "--n", "12", "--method", "brute"});
  CHECK(capped.exit_code == 3);
}

TEST_CASE("sortables command") {
  const CliRun max5 = cli({"sortables", "--shuffle", "max", "--n", "5"});
  CHECK(max5.exit_code == 0);
  CHECK(max5.out.find("sortable count: 89") != std::string::npos);

  const CliRun t3 = cli({"sortables", "--shuffle", "transposition", "--n", "3", "--list"});
  CHECK(t3.exit_code == 0);
  CHECK(t3.out.find("sortable count: 5") != std::string::npos);
  CHECK(t3.out.find("2 3 1") != std::string::npos);

  const CliRun ts2 = cli({"sortables", "--shuffle", "topswops", "--n", "2"});
  CHECK(ts2.exit_code == 0);
  CHECK(ts2.out.find("sortable count: 2") != std::string::npos);

  const CliRun ratio = cli({"sortables", "--shuffle", "mckinley", "--n", "4", "--ratio"});
  CHECK(ratio.exit_code == 0);
  CHECK(ratio.out.find("ratio: ") != std::string::npos);
  CHECK(ratio.out.find("e/n bound: ") != std::string::npos);

  const CliRun capped = cli({"sortables", "--shuffle", "max", "--n", "9", "--list"});
  CHECK(capped.exit_code == 3);
}

TEST_CASE("verify command") {
  const CliRun tiny = cli({"verify", "--suite", "all", "--max-n", "2"});
  CHECK(tiny.exit_code == 0);
  CHECK(tiny.out.find("FAIL") == std::string::npos);
  CHECK(tiny.out.find("0 failed") != std::string::npos);

  const CliRun max4 = cli({"verify", "--suite", "max", "--max-n", "4"});
  CHECK(max4.exit_code == 0);
  CHECK(max4.out.find("PASS max-termination-2n-3") != std::string::npos);

  const CliRun unknown = cli({"verify", "--suite", "bogus"});
  CHECK(unknown.exit_code == 2);

  const CliRun capped = cli({"verify", "--suite", "homing", "--max-n", "10"});
  CHECK(capped.exit_code == 3);
}

TEST_CASE("export command") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "homing_cli_test";
  std::filesystem::create_directories(dir);

  const std::filesystem::path csv = dir / "unsortable.csv";
  const CliRun run = cli({"export", "--what", "unsortable", "--n-max", "3", "--format", "csv",
                          "--out", csv.string()});
  CHECK(run.exit_code == 0);
  CHECK(read_file(csv) == "n,value,method\n1,0,formula\n2,0,formula\n3,1,formula\n");

  const std::filesystem::path tn_csv = dir / "tn-max.csv";
  const CliRun tn = cli({"export", "--what", "tn-max", "--n-max", "5", "--out", tn_csv.string()});
  CHECK(tn.exit_code == 0);
  CHECK(read_file(tn_csv) ==
        "n,value,method\n1,0,brute_force\n2,1,brute_force\n3,3,brute_force\n4,5,brute_force\n"
        "5,7,brute_force\n");

  const std::filesystem::path json_path = dir / "irr.json";
  const CliRun js = cli({"export", "--what", "irreducible", "--n-max", "4", "--format", "json",
                         "--out", json_path.string()});
  CHECK(js.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(read_file(json_path));
  CHECK(j["label"] == "irreducible");
  CHECK(j["entries"][3] == nlohmann::json({{"n", 4}, {"value", 13}}));

  const CliRun unwritable = cli({"export", "--what", "unsortable", "--n-max", "3", "--out",
                                 "/nonexistent-dir/out.csv"});
  CHECK(unwritable.exit_code == 5);

  const CliRun unknown =
      cli({"export", "--what", "mystery", "--n-max", "3", "--out", (dir / "x.csv").string()});
  CHECK(unknown.exit_code == 2);

  std::filesystem::remove_all(dir);
}

TEST_CASE("bench command") {
  const CliRun run = cli({"bench", "--shuffle", "transposition", "--n", "6", "--workers", "2"});
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("throughput_perms_per_s: ") != std::string::npos);
  CHECK(run.out.find("tn: 5") != std::string::npos);
}
