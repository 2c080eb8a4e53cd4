#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct CommandResult {
  int status = -1;
  std::string output;
};

// Runs the CLI with stderr dropped (progress lines land there) unless
// the caller folds it in to inspect error messages.
CommandResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string command = std::string(SPHOM_CLI_PATH) + " " + args +
                        (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int raw = ::pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

const std::string kChiFile = std::string(SPHOM_TEST_DATA_DIR) + "/chi_known.csv";

}  // namespace

TEST_CASE("chi emits exact CSV") {
  const CommandResult result = run_cli("chi --max-weight 10 --format csv");
  CHECK(result.status == 0);
  CHECK(result.output == "w,chi\n2,1\n4,2\n6,4\n8,6\n10,10\n");
}

TEST_CASE("chi table aligns one column per weight") {
  const CommandResult result = run_cli("chi --max-weight 8");
  CHECK(result.status == 0);
  const auto rows = lines(result.output);
  REQUIRE(rows.size() == 2);
  CHECK(tokens(rows[0]) == std::vector<std::string>{"w", "2", "4", "6", "8"});
  CHECK(tokens(rows[1]) == std::vector<std::string>{"chi", "1", "2", "4", "6"});
}

TEST_CASE("chi JSON carries every integer as a decimal string") {
  const CommandResult result = run_cli("chi --max-weight 6 --format json");
  CHECK(result.status == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc.at("schema_version") == "1");
  CHECK(doc.at("command") == "chi");
  CHECK(doc.at("max_weight") == "6");
  REQUIRE(doc.at("chi").size() == 3);
  for (const auto& entry : doc.at("chi")) {
    CHECK(entry.at("w").is_string());
    CHECK(entry.at("chi").is_string());
  }
  CHECK(doc.at("chi")[2].at("w") == "6");
  CHECK(doc.at("chi")[2].at("chi") == "4");
}

TEST_CASE("dims reports a full dimension table") {
  const CommandResult csv = run_cli("dims --weight 4 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.output == "key,value\nC_1,0\nC_2,0\nC_3,6\nC_4,8\ntotal,14\nchi,2\n");

  const CommandResult json = run_cli("dims --weight 4 --format json");
  CHECK(json.status == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc.at("command") == "dims");
  CHECK(doc.at("weight") == "4");
  REQUIRE(doc.at("dims").size() == 4);
  CHECK(doc.at("dims")[2].at("i") == "3");
  CHECK(doc.at("dims")[2].at("dim") == "6");
  CHECK(doc.at("total") == "14");
  CHECK(doc.at("chi") == "2");
}

TEST_CASE("dims on an odd weight prints the all-zero table") {
  const CommandResult result = run_cli("dims --weight 3 --format csv");
  CHECK(result.status == 0);
  CHECK(result.output == "key,value\nC_1,0\nC_2,0\nC_3,0\ntotal,0\nchi,0\n");
}

TEST_CASE("out-euler from a chi file reproduces the rank table") {
  const CommandResult result =
      run_cli("out-euler --chi-file " + kChiFile + " --max-weight 20 --format csv");
  CHECK(result.status == 0);
  CHECK(result.output ==
        "n,w,chi,chi_lower_terms,e_out_fn\n"
        "2,2,1,0,1\n"
        "3,4,2,1,1\n"
        "4,6,4,2,2\n"
        "5,8,6,5,1\n"
        "6,10,10,8,2\n"
        "7,12,16,15,1\n"
        "8,14,23,22,1\n"
        "9,16,13,34,-21\n"
        "10,18,-96,28,-124\n"
        "11,20,-1299,-97,-1202\n");
}

TEST_CASE("out-euler table shows the literature constants for reference") {
  const CommandResult result =
      run_cli("out-euler --chi-file " + kChiFile + " --max-weight 20");
  CHECK(result.status == 0);
  CHECK(result.output.find("rational chi (lit.)") != std::string::npos);
  CHECK(result.output.find("-1690.70") != std::string::npos);
  CHECK(result.output.find("-1202") != std::string::npos);
}

TEST_CASE("out-euler truncates the chi file to max-weight") {
  const CommandResult result =
      run_cli("out-euler --chi-file " + kChiFile + " --max-weight 8 --format csv");
  CHECK(result.status == 0);
  const auto rows = lines(result.output);
  REQUIRE(rows.size() == 5);
  CHECK(rows[4] == "5,8,6,5,1");
}

TEST_CASE("out-euler rejects a chi file that stops short") {
  const CommandResult result =
      run_cli("out-euler --chi-file " + kChiFile + " --max-weight 24 --format csv", true);
  CHECK(result.status == 3);
  CHECK(result.output.find("missing weights: 22, 24") != std::string::npos);
}

TEST_CASE("verify reports one line per check and a summary") {
  const CommandResult result = run_cli("verify --max-weight 2");
  CHECK(result.status == 0);
  const auto rows = lines(result.output);
  REQUIRE(rows.size() == 10);
  unsigned ok = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    ok += rows[i].rfind("ok   ", 0) == 0 ? 1 : 0;
  }
  CHECK(ok == 9);
  CHECK(rows.back() == "verification passed (9/9 checks)");
}

TEST_CASE("thread count never changes the output bytes") {
  const CommandResult one = run_cli("chi --max-weight 10 --format csv --threads 1");
  const CommandResult eight = run_cli("chi --max-weight 10 --format csv --threads 8");
  CHECK(one.status == 0);
  CHECK(eight.status == 0);
  CHECK(one.output == eight.output);
}

TEST_CASE("pairing cross-check mode agrees with the default") {
  const CommandResult checked = run_cli("chi --max-weight 8 --format csv --fused-pairing check");
  CHECK(checked.status == 0);
  CHECK(checked.output == run_cli("chi --max-weight 8 --format csv").output);
}

TEST_CASE("a cache directory is populated and reused") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("sphom_cli_cache_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const std::string args = "chi --max-weight 8 --format csv --cache-dir " + dir.string();

  const CommandResult cold = run_cli(args);
  CHECK(cold.status == 0);
  unsigned records = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    CHECK(entry.path().extension() == ".symc");
    ++records;
  }
  CHECK(records > 0);

  const CommandResult warm = run_cli(args, true);
  CHECK(warm.status == 0);
  CHECK(warm.output.find("computed=0") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors exit with code 3") {
  CHECK(run_cli("chi --max-weight 7", true).status == 3);     // odd weight
  CHECK(run_cli("chi", true).status == 3);                    // missing required flag
  CHECK(run_cli("spectral-sequence", true).status == 3);      // unknown subcommand
  CHECK(run_cli("chi --max-weight 4 --format yaml", true).status == 3);
  CHECK(run_cli("", true).status == 3);                       // no subcommand
  CHECK(run_cli("out-euler --chi-file /nonexistent.csv --max-weight 4", true).status == 3);
}

TEST_CASE("help exits cleanly") {
  const CommandResult result = run_cli("--help");
  CHECK(result.status == 0);
  CHECK(result.output.find("chi") != std::string::npos);
  const CommandResult sub = run_cli("dims --help");
  CHECK(sub.status == 0);
  CHECK(sub.output.find("--weight") != std::string::npos);
}
