#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sphom/cache.hpp"

namespace sphom {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // scope on success, first counterexample on failure
};

// The runtime cross-check suite. Each check is callable on its own so
// tests can narrow scope or inject faults; run_verification() bundles
// them with scopes derived from max_weight.

// Column orthogonality of irreducible characters,
// sum_lambda chi^lambda(mu) chi^lambda(nu) = z_mu [mu == nu], for all
// classes of S_n, n <= max_degree. Exercises the Murnaghan-Nakayama
// evaluator and the centralizer orders against each other.
CheckResult check_character_orthogonality(unsigned max_degree = 10);

// specialize_dimension(lie_character(k), N) against the divisor sum
// (1/k) sum_{d|k} mu(d) N^{k/d}. The Moebius function is a parameter
// so the suite's failure reporting is itself testable.
CheckResult check_witt_dimensions(unsigned max_k = 12, unsigned max_n = 6,
                                  const std::function<int(unsigned)>& mobius_fn = {});

// Derivation characters and small exterior plethysms must be honest
// characters: non-negative integer Schur coefficients.
CheckResult check_schur_positivity(unsigned max_k = 8);

// Newton-recurrence exterior powers against an independently computed
// truncation of exp( sum_r (-1)^{r-1} t^r p_r[f] / r ).
CheckResult check_exterior_generating_identity(unsigned max_m = 6);

// Littlewood pairing vs Murnaghan-Nakayama/even-conjugate count (and
// the fused pairing vs both) on every chain piece of even weight
// <= max_weight.
CheckResult check_oracle_equivalence(unsigned max_weight, unsigned threads = 1,
                                     PlethysmStore* store = nullptr);

// Genuine zero pairings for every chain piece of odd weight in
// {3, 5, 7, 9}; no parity shortcut involved.
CheckResult check_odd_weight_vanishing(PlethysmStore* store = nullptr);

// extract_out_euler / expand_product round trip on pseudorandom chi
// tables (|chi| <= 1e6, top weight <= 40, deterministic seed).
CheckResult check_outfn_round_trip(unsigned tables = 50);

// Closed-form pairing weights against the materialized series:
// weight(lambda) = z_lambda [p_lambda] B for all lambda of degree
// <= max_degree.
CheckResult check_littlewood_closed_form(unsigned max_degree = 12);

// A seeded random sample of cached e_m[f_k] recomputed from scratch.
CheckResult check_memo_coherence(PlethysmStore& store, unsigned samples = 4,
                                 unsigned seed = 1);

// on_result, when set, fires after each check completes (in order).
std::vector<CheckResult> run_verification(
    unsigned max_weight, unsigned threads = 1, PlethysmStore* store = nullptr,
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace sphom
