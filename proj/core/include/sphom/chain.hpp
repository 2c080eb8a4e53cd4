#pragma once

#include <functional>
#include <map>
#include <vector>

#include "sphom/cache.hpp"
#include "sphom/littlewood.hpp"
#include "sphom/numeric.hpp"
#include "sphom/partition.hpp"

namespace sphom {

// One direct summand of the weight-w chain complex: a partition of w
// whose parts are the generator weights k (with multiplicity m_k). The
// homological degree is the part count i = Σ m_k, and the associated
// character Π_k e_{m_k}[f_k] is homogeneous of degree w + 2i, since a
// weight-k generator spans a degree-(k+2) representation.
struct WeightPartition {
  unsigned weight = 0;
  Partition parts;  // partition of `weight`

  unsigned homological_degree() const { return static_cast<unsigned>(parts.size()); }
  unsigned sf_degree() const { return weight + 2 * homological_degree(); }
};

// One summand per integer partition of `weight`, in canonical partition
// order (so grouped-by-degree views are deterministic).
std::vector<WeightPartition> weight_partitions(unsigned weight);

enum class PairingMode {
  fused,        // pair against closed-form weights while multiplying
  materialize,  // build the full product, then pair against the series
  check,        // run both and require agreement
};

struct ChainOptions {
  unsigned threads = 1;
  PairingMode pairing = PairingMode::fused;
  PlethysmStore* store = nullptr;  // shared across calls when provided

  // Invoked after each summand with its wall-clock cost; may be called
  // from any worker thread. Lets callers surface straggler terms.
  std::function<void(const WeightPartition&, double seconds)> on_term;
};

struct ChainDimTable {
  unsigned weight = 0;
  std::map<unsigned, Integer> dims;  // homological degree i -> dim C_i

  Integer total() const;
  Integer euler() const;  // Σ (-1)^i dims[i]
};

// Invariant dimension of one summand: ⟨Π_k e_{m_k}[f_k], B⟩. Plethysm
// factors come from the store; `weights` must cover sf_degree(). In
// check mode a fused/materialized disagreement raises VerificationError.
Integer chain_term_dim(const WeightPartition& term, PlethysmStore& store,
                       const InvariantWeights& weights,
                       PairingMode mode = PairingMode::fused);

// Full dimension table for one weight. Parallel over weight partitions,
// longest (largest sf_degree) first; the per-partition results land in
// preassigned slots, so the output is identical for any thread count.
// Odd weights vanish identically and are returned as all-zero tables
// without pairing work. weight 0 is the empty product: {0 -> 1}.
ChainDimTable chain_dims(unsigned weight, const ChainOptions& options = {});

Integer euler_char(unsigned weight, const ChainOptions& options = {});

}  // namespace sphom
