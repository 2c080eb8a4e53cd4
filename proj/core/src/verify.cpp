#include "sphom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "sphom/chain.hpp"
#include "sphom/characters.hpp"
#include "sphom/lie.hpp"
#include "sphom/littlewood.hpp"
#include "sphom/outer_euler.hpp"

namespace sphom {

CheckResult check_character_orthogonality(unsigned max_degree) {
  CharacterTable& table = shared_character_table();
  for (unsigned n = 1; n <= max_degree; ++n) {
    std::vector<Partition> classes = partitions_of(n);
    for (const Partition& mu : classes) {
      for (const Partition& nu : classes) {
        Integer acc = 0;
        for (const Partition& lambda : classes) {
          acc += table.value(lambda, mu) * table.value(lambda, nu);
        }
        Integer expected = (mu == nu) ? z_factor(mu) : Integer(0);
        if (acc != expected) {
          std::ostringstream msg;
          msg << "n=" << n << " mu=(" << mu.to_string() << ") nu=(" << nu.to_string()
              << "): sum " << acc.get_str() << ", expected " << expected.get_str();
          return {"character-orthogonality", false, msg.str()};
        }
      }
    }
  }
  return {"character-orthogonality", true,
          "all S_n class pairs, n <= " + std::to_string(max_degree)};
}

CheckResult check_witt_dimensions(unsigned max_k, unsigned max_n,
                                  const std::function<int(unsigned)>& mobius_fn) {
  auto mu = mobius_fn ? mobius_fn : [](unsigned d) { return mobius(d); };
  for (unsigned k = 1; k <= max_k; ++k) {
    const SymmetricFunction& lie = lie_character(k).character;
    for (unsigned n = 1; n <= max_n; ++n) {
      Rational divisor_sum(0);
      for (unsigned d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), n, k / d);
        divisor_sum += Rational(mu(d)) * Rational(power);
      }
      divisor_sum /= k;
      divisor_sum.canonicalize();
      Rational from_character = specialize_dimension(lie, n);
      if (from_character != divisor_sum || !is_integer(divisor_sum) || divisor_sum < 0) {
        std::ostringstream msg;
        msg << "k=" << k << " N=" << n << ": character gives "
            << rational_to_string(from_character) << ", Moebius sum gives "
            << rational_to_string(divisor_sum);
        return {"witt-dimensions", false, msg.str()};
      }
    }
  }
  std::ostringstream scope;
  scope << "k <= " << max_k << ", N <= " << max_n;
  return {"witt-dimensions", true, scope.str()};
}

namespace {

CheckResult schur_nonnegative(const SymmetricFunction& f, const std::string& label,
                              const char* check_name) {
  for (const auto& [lambda, coeff] : schur_expand(f)) {
    if (!is_integer(coeff) || coeff < 0) {
      std::ostringstream msg;
      msg << label << ": coefficient of s_(" << lambda.to_string() << ") is "
          << rational_to_string(coeff);
      return {check_name, false, msg.str()};
    }
  }
  return {check_name, true, ""};
}

}  // namespace

CheckResult check_schur_positivity(unsigned max_k) {
  constexpr const char* kName = "schur-positivity";
  for (unsigned k = 1; k <= max_k; ++k) {
    CheckResult result = schur_nonnegative(derivation_character(k).character,
                                           "derivation character k=" + std::to_string(k), kName);
    if (!result.passed) return result;
  }
  // Exterior powers of honest characters stay honest; spot the small ones.
  unsigned products = 0;
  for (unsigned k = 1; k <= max_k; ++k) {
    for (unsigned m = 2; m * (k + 2) <= 14; ++m) {
      std::ostringstream label;
      label << "e_" << m << "[f_" << k << "]";
      CheckResult result = schur_nonnegative(
          exterior_plethysm(m, derivation_character(k).character), label.str(), kName);
      if (!result.passed) return result;
      ++products;
    }
  }
  std::ostringstream scope;
  scope << "derivation characters k <= " << max_k << " and " << products
        << " exterior powers";
  return {kName, true, scope.str()};
}

CheckResult check_exterior_generating_identity(unsigned max_m) {
  constexpr const char* kName = "exterior-generating-identity";
  std::vector<std::pair<std::string, SymmetricFunction>> cases;
  cases.emplace_back("p_1", SymmetricFunction::power_sum(1));
  cases.emplace_back("f_1", derivation_character(1).character);
  cases.emplace_back("f_2", derivation_character(2).character);

  for (const auto& [label, f] : cases) {
    // exp(G) with G = sum_{r=1}^{max_m} (-1)^{r-1} t^r p_r[f] / r,
    // truncated to t^max_m; exact because G has no constant term.
    std::vector<SymmetricFunction> series(max_m + 1);
    series[0] = SymmetricFunction::one();
    std::vector<SymmetricFunction> g(max_m + 1);
    for (unsigned r = 1; r <= max_m; ++r) {
      g[r] = plethysm_power(r, f) * make_rational(r % 2 == 1 ? 1 : -1, static_cast<long>(r));
    }
    std::vector<SymmetricFunction> power = series;  // G^j / j!, starting at j=0
    for (unsigned j = 1; j <= max_m; ++j) {
      std::vector<SymmetricFunction> next(max_m + 1);
      for (unsigned a = 0; a <= max_m; ++a) {
        if (power[a].is_zero()) continue;
        for (unsigned r = 1; a + r <= max_m; ++r) {
          if (g[r].is_zero()) continue;
          next[a + r] += power[a] * g[r] * make_rational(1, static_cast<long>(j));
        }
      }
      power = std::move(next);
      for (unsigned a = 0; a <= max_m; ++a) series[a] += power[a];
    }
    for (unsigned m = 0; m <= max_m; ++m) {
      if (exterior_plethysm(m, f) != series[m]) {
        std::ostringstream msg;
        msg << "e_" << m << "[" << label << "] disagrees with the exp expansion";
        return {kName, false, msg.str()};
      }
    }
  }
  std::ostringstream scope;
  scope << cases.size() << " characters, m <= " << max_m;
  return {kName, true, scope.str()};
}

namespace {

// Runs fn over the index range [0, count) on `threads` workers and
// returns the lowest-index failure message, if any.
std::optional<std::string> parallel_find_failure(
    std::size_t count, unsigned threads,
    const std::function<std::optional<std::string>(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::optional<std::string> failure;
  std::size_t failure_index = 0;

  auto worker = [&] {
    for (;;) {
      std::size_t index = next.fetch_add(1);
      if (index >= count) return;
      std::optional<std::string> message;
      try {
        message = fn(index);
      } catch (const std::exception& err) {
        message = err.what();
      }
      if (message) {
        std::lock_guard lock(mutex);
        if (!failure || index < failure_index) {
          failure = std::move(message);
          failure_index = index;
        }
      }
    }
  };

  unsigned workers = std::max(1u, std::min<unsigned>(threads, count));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  return failure;
}

}  // namespace

CheckResult check_oracle_equivalence(unsigned max_weight, unsigned threads,
                                     PlethysmStore* store) {
  constexpr const char* kName = "oracle-equivalence";
  PlethysmStore local;
  PlethysmStore& plethysms = store ? *store : local;

  std::vector<WeightPartition> pieces;
  for (unsigned w = 2; w <= max_weight; w += 2) {
    for (WeightPartition& term : weight_partitions(w)) pieces.push_back(std::move(term));
  }
  // Hardest first: the all-ones pieces dominate the character degree.
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const WeightPartition& a, const WeightPartition& b) {
                     return a.sf_degree() > b.sf_degree();
                   });
  InvariantWeights weights(pieces.empty() ? 2 : 3 * max_weight);

  auto failure = parallel_find_failure(
      pieces.size(), threads, [&](std::size_t index) -> std::optional<std::string> {
        const WeightPartition& term = pieces[index];
        SymmetricFunction product = SymmetricFunction::one();
        for (auto [k, m] : term.parts.multiplicities()) {
          product = product * (*plethysms.exterior(k, m));
        }
        Integer paired = sp_invariant_dim(product);
        Integer counted = sp_invariant_dim_oracle(product);
        Integer fused = chain_term_dim(term, plethysms, weights, PairingMode::fused);
        if (paired != counted || fused != paired) {
          std::ostringstream msg;
          msg << "weight " << term.weight << " piece (" << term.parts.to_string()
              << "): pairing " << paired.get_str() << ", oracle " << counted.get_str()
              << ", fused " << fused.get_str();
          return msg.str();
        }
        return std::nullopt;
      });
  if (failure) return {kName, false, *failure};
  std::ostringstream scope;
  scope << pieces.size() << " chain pieces, even weights <= " << max_weight;
  return {kName, true, scope.str()};
}

CheckResult check_odd_weight_vanishing(PlethysmStore* store) {
  constexpr const char* kName = "odd-weight-vanishing";
  PlethysmStore local;
  PlethysmStore& plethysms = store ? *store : local;
  unsigned pieces = 0;
  for (unsigned w : {3u, 5u, 7u, 9u}) {
    InvariantWeights weights(3 * w);
    for (const WeightPartition& term : weight_partitions(w)) {
      Integer fused = chain_term_dim(term, plethysms, weights, PairingMode::fused);
      SymmetricFunction product = SymmetricFunction::one();
      for (auto [k, m] : term.parts.multiplicities()) {
        product = product * (*plethysms.exterior(k, m));
      }
      Integer paired = sp_invariant_dim(product);
      if (fused != 0 || paired != 0) {
        std::ostringstream msg;
        msg << "weight " << w << " piece (" << term.parts.to_string() << "): fused "
            << fused.get_str() << ", pairing " << paired.get_str();
        return {kName, false, msg.str()};
      }
      ++pieces;
    }
  }
  return {kName, true, std::to_string(pieces) + " chain pieces, weights {3,5,7,9}"};
}

CheckResult check_outfn_round_trip(unsigned tables) {
  constexpr const char* kName = "outfn-round-trip";
  std::mt19937 rng(20260815u);
  std::uniform_int_distribution<unsigned> half_weight(1, 20);
  std::uniform_int_distribution<long> chi_value(-1000000, 1000000);
  for (unsigned trial = 0; trial < tables; ++trial) {
    unsigned top = 2 * half_weight(rng);
    ChiTable chi;
    for (unsigned w = 2; w <= top; w += 2) chi.emplace(w, Integer(chi_value(rng)));
    EulerTable table = extract_out_euler(chi);
    CongruenceReport report = verify_congruence(chi, table);
    if (!report.ok) {
      std::ostringstream msg;
      msg << "trial " << trial << " (top weight " << top << "): expansion disagrees first at t^"
          << report.first_mismatch;
      return {kName, false, msg.str()};
    }
  }
  std::ostringstream scope;
  scope << tables << " pseudorandom chi tables, top weight <= 40";
  return {kName, true, scope.str()};
}

CheckResult check_littlewood_closed_form(unsigned max_degree) {
  constexpr const char* kName = "littlewood-closed-form";
  InvariantWeights weights(max_degree);
  LittlewoodSeries& series = shared_littlewood_series();
  for (unsigned d = 0; d <= max_degree; ++d) {
    const SymmetricFunction& part = series.part(d);
    for (const Partition& lambda : partitions_of(d)) {
      Rational materialized = part.coefficient(lambda) * Rational(z_factor(lambda));
      if (materialized != Rational(weights.weight(lambda))) {
        std::ostringstream msg;
        msg << "lambda=(" << lambda.to_string() << "): closed form "
            << weights.weight(lambda).get_str() << ", series gives "
            << rational_to_string(materialized);
        return {kName, false, msg.str()};
      }
    }
  }
  return {kName, true, "all partitions of degree <= " + std::to_string(max_degree)};
}

CheckResult check_memo_coherence(PlethysmStore& store, unsigned samples, unsigned seed) {
  constexpr const char* kName = "memo-coherence";
  std::mt19937 rng(seed);
  std::uniform_int_distribution<unsigned> pick_k(1, 5);
  std::ostringstream sampled;
  for (unsigned i = 0; i < samples; ++i) {
    unsigned k = pick_k(rng);
    unsigned m = std::uniform_int_distribution<unsigned>(1, 12 / (k + 2) + 1)(rng);
    SymmetricFunction fresh = exterior_plethysm(m, derivation_character(k).character);
    if (*store.exterior(k, m) != fresh) {
      std::ostringstream msg;
      msg << "stored e_" << m << "[f_" << k << "] differs from a fresh computation";
      return {kName, false, msg.str()};
    }
    if (i > 0) sampled << " ";
    sampled << "e_" << m << "[f_" << k << "]";
  }
  return {kName, true, "resampled " + sampled.str()};
}

std::vector<CheckResult> run_verification(
    unsigned max_weight, unsigned threads, PlethysmStore* store,
    const std::function<void(const CheckResult&)>& on_result) {
  PlethysmStore local;
  PlethysmStore& plethysms = store ? *store : local;
  std::vector<CheckResult> results;
  auto run = [&](CheckResult result) {
    if (on_result) on_result(result);
    results.push_back(std::move(result));
  };
  run(check_character_orthogonality());
  run(check_witt_dimensions());
  run(check_schur_positivity());
  run(check_exterior_generating_identity());
  run(check_littlewood_closed_form());
  run(check_odd_weight_vanishing(&plethysms));
  run(check_oracle_equivalence(std::min(max_weight, 12u), threads, &plethysms));
  run(check_outfn_round_trip());
  run(check_memo_coherence(plethysms, 4, max_weight));
  return results;
}

}  // namespace sphom
