#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sphom/cache.hpp"
#include "sphom/chain.hpp"
#include "sphom/outer_euler.hpp"
#include "sphom/verify.hpp"
#include "sphom/version.hpp"

namespace {

using sphom::Integer;

struct RunConfig {
  unsigned max_weight = 0;
  unsigned weight = 0;
  unsigned threads = 1;
  std::string cache_dir;
  std::string format = "table";
  std::string fused_pairing = "on";
  std::string chi_file;
};

sphom::PairingMode pairing_mode(const std::string& flag) {
  if (flag == "on") return sphom::PairingMode::fused;
  if (flag == "off") return sphom::PairingMode::materialize;
  return sphom::PairingMode::check;
}

std::unique_ptr<sphom::PlethysmStore> make_store(const RunConfig& config) {
  if (config.cache_dir.empty()) return std::make_unique<sphom::PlethysmStore>();
  return std::make_unique<sphom::PlethysmStore>(sphom::DiskCache(config.cache_dir));
}

std::mutex& stderr_mutex() {
  static std::mutex mutex;
  return mutex;
}

std::string seconds_string(double seconds) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2fs", seconds);
  return buffer;
}

// All result output goes to stdout; progress and store statistics go
// here, so piped CSV/JSON stays clean.
sphom::ChainOptions chain_options(const RunConfig& config, sphom::PlethysmStore& store) {
  sphom::ChainOptions options;
  options.threads = config.threads;
  options.pairing = pairing_mode(config.fused_pairing);
  options.store = &store;
  options.on_term = [](const sphom::WeightPartition& term, double seconds) {
    if (seconds < 1.0) return;  // only stragglers are worth a line
    std::lock_guard lock(stderr_mutex());
    std::cerr << "  term (" << term.parts.to_string() << ") i=" << term.homological_degree()
              << " deg=" << term.sf_degree() << ": " << seconds_string(seconds) << "\n";
  };
  return options;
}

void report_weight(unsigned weight, const sphom::ChainDimTable& table, double seconds,
                   const sphom::PlethysmStore& store) {
  sphom::StoreStats stats = store.stats();
  std::lock_guard lock(stderr_mutex());
  std::cerr << "weight " << weight << ": chi = " << table.euler().get_str() << " ("
            << seconds_string(seconds) << "; store mem=" << stats.memory_hits
            << " disk=" << stats.disk_hits << " computed=" << stats.computed << ")\n";
}

sphom::ChiTable compute_chi_table(unsigned max_weight, const RunConfig& config,
                                  sphom::PlethysmStore& store) {
  sphom::ChainOptions options = chain_options(config, store);
  sphom::ChiTable chi;
  for (unsigned w = 2; w <= max_weight; w += 2) {
    auto started = std::chrono::steady_clock::now();
    sphom::ChainDimTable table = sphom::chain_dims(w, options);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    report_weight(w, table, elapsed.count(), store);
    chi.emplace(w, table.euler());
  }
  return chi;
}

// First column left-aligned, the rest right-aligned, two-space gutters.
void print_aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      std::size_t pad = widths[i] - row[i].size();
      if (i == 0) {
        line += row[i] + std::string(pad, ' ');
      } else {
        line += std::string(pad, ' ') + row[i];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << "\n";
  }
}

nlohmann::ordered_json json_envelope(const char* command) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = "1";
  doc["engine"] = sphom::kEngineVersion;
  doc["command"] = command;
  return doc;
}

void require_even_weight(unsigned value, const char* flag) {
  if (value < 2 || value % 2 != 0) {
    throw std::invalid_argument(std::string(flag) + " must be an even weight >= 2");
  }
}

int cmd_chi(const RunConfig& config) {
  require_even_weight(config.max_weight, "--max-weight");
  auto store = make_store(config);
  sphom::ChiTable chi = compute_chi_table(config.max_weight, config, *store);

  if (config.format == "csv") {
    std::cout << "w,chi\n";
    for (const auto& [w, value] : chi) std::cout << w << "," << value.get_str() << "\n";
  } else if (config.format == "json") {
    nlohmann::ordered_json doc = json_envelope("chi");
    doc["max_weight"] = std::to_string(config.max_weight);
    doc["chi"] = nlohmann::ordered_json::array();
    for (const auto& [w, value] : chi) {
      doc["chi"].push_back({{"w", std::to_string(w)}, {"chi", value.get_str()}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::vector<std::string> weights{"w"}, values{"chi"};
    for (const auto& [w, value] : chi) {
      weights.push_back(std::to_string(w));
      values.push_back(value.get_str());
    }
    print_aligned({weights, values});
  }
  return 0;
}

int cmd_dims(const RunConfig& config) {
  if (config.weight < 1) throw std::invalid_argument("--weight must be >= 1");
  auto store = make_store(config);
  sphom::ChainOptions options = chain_options(config, *store);
  auto started = std::chrono::steady_clock::now();
  sphom::ChainDimTable table = sphom::chain_dims(config.weight, options);
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  report_weight(config.weight, table, elapsed.count(), *store);

  if (config.format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [i, dim] : table.dims) {
      std::cout << "C_" << i << "," << dim.get_str() << "\n";
    }
    std::cout << "total," << table.total().get_str() << "\n";
    std::cout << "chi," << table.euler().get_str() << "\n";
  } else if (config.format == "json") {
    nlohmann::ordered_json doc = json_envelope("dims");
    doc["weight"] = std::to_string(config.weight);
    doc["dims"] = nlohmann::ordered_json::array();
    for (const auto& [i, dim] : table.dims) {
      doc["dims"].push_back({{"i", std::to_string(i)}, {"dim", dim.get_str()}});
    }
    doc["total"] = table.total().get_str();
    doc["chi"] = table.euler().get_str();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "weight " << config.weight << "\n";
    std::vector<std::vector<std::string>> rows{{"i", "dim C_i"}};
    for (const auto& [i, dim] : table.dims) {
      rows.push_back({std::to_string(i), dim.get_str()});
    }
    rows.push_back({"total", table.total().get_str()});
    rows.push_back({"chi", table.euler().get_str()});
    print_aligned(rows);
  }
  return 0;
}

// Rational Euler characteristics of Out F_n from the literature, shown
// for reference next to the integral values; never computed here.
const char* literature_rational_chi(unsigned n) {
  static const std::map<unsigned, const char*> kTable = {
      {2, "-0.04"},  {3, "-0.02"},   {4, "-0.02"},    {5, "-0.06"},    {6, "-0.20"},
      {7, "-0.87"},  {8, "-4.58"},   {9, "-28.52"},   {10, "-205.83"}, {11, "-1690.70"},
  };
  auto it = kTable.find(n);
  return it == kTable.end() ? "" : it->second;
}

int cmd_out_euler(const RunConfig& config) {
  require_even_weight(config.max_weight, "--max-weight");
  sphom::ChiTable chi;
  if (!config.chi_file.empty()) {
    chi = sphom::read_chi_csv(config.chi_file);
    chi.erase(chi.upper_bound(config.max_weight), chi.end());
    std::string missing;
    for (unsigned w = 2; w <= config.max_weight; w += 2) {
      if (!chi.count(w)) missing += (missing.empty() ? "" : ", ") + std::to_string(w);
    }
    if (!missing.empty()) {
      throw std::invalid_argument("chi table from " + config.chi_file +
                                  " is missing weights: " + missing);
    }
  } else {
    auto store = make_store(config);
    chi = compute_chi_table(config.max_weight, config, *store);
  }

  sphom::EulerTable table = sphom::extract_out_euler(chi);
  sphom::CongruenceReport congruence = sphom::verify_congruence(chi, table);
  if (!congruence.ok) {
    throw sphom::VerificationError(
        "rebuilt weight generating function disagrees with chi first at degree " +
        std::to_string(congruence.first_mismatch));
  }
  {
    std::lock_guard lock(stderr_mutex());
    std::cerr << "congruence verified through degree " << config.max_weight << "\n";
  }

  if (config.format == "csv") {
    std::cout << "n,w,chi,chi_lower_terms,e_out_fn\n";
    for (const sphom::EulerRow& row : table) {
      std::cout << row.n << "," << row.weight << "," << row.chi.get_str() << ","
                << row.lower.get_str() << "," << row.primitive.get_str() << "\n";
    }
  } else if (config.format == "json") {
    nlohmann::ordered_json doc = json_envelope("out-euler");
    doc["max_weight"] = std::to_string(config.max_weight);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const sphom::EulerRow& row : table) {
      doc["rows"].push_back({{"n", std::to_string(row.n)},
                             {"w", std::to_string(row.weight)},
                             {"chi", row.chi.get_str()},
                             {"chi_lower_terms", row.lower.get_str()},
                             {"e_out_fn", row.primitive.get_str()}});
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows{
        {"n", "w", "chi", "chi lower terms", "e(Out F_n)", "rational chi (lit.)"}};
    for (const sphom::EulerRow& row : table) {
      rows.push_back({std::to_string(row.n), std::to_string(row.weight), row.chi.get_str(),
                      row.lower.get_str(), row.primitive.get_str(),
                      literature_rational_chi(row.n)});
    }
    print_aligned(rows);
  }
  return 0;
}

int cmd_verify(const RunConfig& config) {
  require_even_weight(config.max_weight, "--max-weight");
  auto store = make_store(config);
  constexpr std::size_t kNameWidth = 30;
  auto print_result = [&](const sphom::CheckResult& result) {
    std::string padding(result.name.size() < kNameWidth ? kNameWidth - result.name.size() : 1,
                        ' ');
    std::cout << (result.passed ? "ok   " : "FAIL ") << result.name << padding << result.detail
              << std::endl;  // flushed so progress is visible during long checks
  };
  std::vector<sphom::CheckResult> results =
      sphom::run_verification(config.max_weight, config.threads, store.get(), print_result);

  unsigned passed = 0;
  for (const sphom::CheckResult& result : results) passed += result.passed ? 1 : 0;
  std::cout << (passed == results.size() ? "verification passed" : "verification FAILED") << " ("
            << passed << "/" << results.size() << " checks)\n";
  return passed == results.size() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Sp-invariant chain-complex dimensions, per-weight Euler "
               "characteristics, and integral Euler characteristics of Out(F_n)"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--threads", config.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cache-dir", config.cache_dir,
                    "Directory for persistent plethysm records (resume support)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
  };
  auto add_pairing = [&](CLI::App* cmd) {
    cmd->add_option("--fused-pairing", config.fused_pairing,
                    "Pair during the product (on), materialize first (off), or run both "
                    "and compare (check)")
        ->check(CLI::IsMember({"on", "off", "check"}))
        ->capture_default_str();
  };

  CLI::App* chi = app.add_subcommand("chi", "Euler characteristic chi_w for w = 2..max-weight");
  chi->add_option("--max-weight", config.max_weight, "Top weight (even, >= 2)")->required();
  add_common(chi);
  add_format(chi);
  add_pairing(chi);

  CLI::App* dims = app.add_subcommand("dims", "Chain dimensions dim C_i for one weight");
  dims->add_option("--weight", config.weight, "Weight (>= 1; odd weights vanish)")->required();
  add_common(dims);
  add_format(dims);
  add_pairing(dims);

  CLI::App* out_euler = app.add_subcommand(
      "out-euler", "Integral Euler characteristics e(Out F_n) extracted from chi");
  out_euler->add_option("--max-weight", config.max_weight, "Top weight (even, >= 2)")->required();
  out_euler->add_option("--chi-file", config.chi_file,
                        "Read chi from a w,chi CSV instead of computing it");
  add_common(out_euler);
  add_format(out_euler);
  add_pairing(out_euler);

  CLI::App* verify = app.add_subcommand("verify", "Run the cross-check suite");
  unsigned verify_max_weight = 8;
  verify->add_option("--max-weight", verify_max_weight,
                     "Oracle-equivalence weight bound (even; capped at 12)")
      ->capture_default_str();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& success) {
    return app.exit(success);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 3;
  }

  auto run = [&](int (*command)(const RunConfig&)) {
    try {
      return command(config);
    } catch (const sphom::VerificationError& err) {
      std::cerr << "verification failure: " << err.what() << "\n";
      return 2;
    } catch (const sphom::ComputationError& err) {
      std::cerr << "computation error: " << err.what() << "\n";
      return 1;
    } catch (const std::invalid_argument& err) {
      std::cerr << "error: " << err.what() << "\n";
      return 3;
    } catch (const std::exception& err) {
      std::cerr << "error: " << err.what() << "\n";
      return 1;
    }
  };

  if (chi->parsed()) return run(cmd_chi);
  if (dims->parsed()) return run(cmd_dims);
  if (out_euler->parsed()) return run(cmd_out_euler);
  if (verify->parsed()) {
    config.max_weight = verify_max_weight;
    return run(cmd_verify);
  }
  return 3;
}
