#include "sphom/chain.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

namespace sphom {

std::vector<WeightPartition> weight_partitions(unsigned weight) {
  std::vector<WeightPartition> out;
  for (Partition& p : partitions_of(weight)) {
    out.push_back(WeightPartition{weight, std::move(p)});
  }
  return out;
}

Integer ChainDimTable::total() const {
  Integer acc = 0;
  for (const auto& [degree, dim] : dims) acc += dim;
  return acc;
}

Integer ChainDimTable::euler() const {
  Integer acc = 0;
  for (const auto& [degree, dim] : dims) {
    if (degree % 2 == 0) {
      acc += dim;
    } else {
      acc -= dim;
    }
  }
  return acc;
}

namespace {

Integer checked_dim(Rational value, const WeightPartition& term, const char* route) {
  if (!is_integer(value) || value < 0) {
    std::ostringstream msg;
    msg << "chain term (" << term.parts.to_string() << ") at weight " << term.weight << ": "
        << route << " pairing is not a non-negative integer: " << rational_to_string(value);
    throw ComputationError(msg.str());
  }
  return value.get_num();
}

Integer fused_term_dim(const std::vector<PlethysmStore::Handle>& factors,
                       const WeightPartition& term, const InvariantWeights& weights) {
  if (factors.size() == 1) {
    return checked_dim(littlewood_pair(*factors.front(), weights), term, "fused");
  }
  // Multiply the small factors together and fuse the largest one into
  // the pairing, so the widest support is never materialized into a
  // product. Factors arrive sorted by ascending term count.
  SymmetricFunction partial = *factors[0];
  for (std::size_t i = 1; i + 1 < factors.size(); ++i) partial = partial * (*factors[i]);
  return checked_dim(littlewood_pair_product(partial, *factors.back(), weights), term, "fused");
}

Integer materialized_term_dim(const std::vector<PlethysmStore::Handle>& factors,
                              const WeightPartition& term) {
  SymmetricFunction product = *factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) product = product * (*factors[i]);
  Integer dim = sp_invariant_dim(product);
  (void)term;
  return dim;
}

}  // namespace

Integer chain_term_dim(const WeightPartition& term, PlethysmStore& store,
                       const InvariantWeights& weights, PairingMode mode) {
  if (term.parts.empty()) return 1;  // empty product pairs to <1, B> = 1

  std::vector<PlethysmStore::Handle> factors;
  for (auto [k, m] : term.parts.multiplicities()) {
    factors.push_back(store.exterior(k, m));
  }
  std::sort(factors.begin(), factors.end(),
            [](const PlethysmStore::Handle& a, const PlethysmStore::Handle& b) {
              return a->term_count() < b->term_count();
            });

  switch (mode) {
    case PairingMode::fused:
      return fused_term_dim(factors, term, weights);
    case PairingMode::materialize:
      return materialized_term_dim(factors, term);
    case PairingMode::check: {
      Integer fused = fused_term_dim(factors, term, weights);
      Integer materialized = materialized_term_dim(factors, term);
      if (fused != materialized) {
        std::ostringstream msg;
        msg << "chain term (" << term.parts.to_string() << ") at weight " << term.weight
            << ": fused pairing " << fused.get_str() << " != materialized "
            << materialized.get_str();
        throw VerificationError(msg.str());
      }
      return fused;
    }
  }
  throw std::invalid_argument("chain_term_dim: unknown pairing mode");
}

namespace {

PlethysmStore& fallback_store() {
  static PlethysmStore store;
  return store;
}

}  // namespace

ChainDimTable chain_dims(unsigned weight, const ChainOptions& options) {
  ChainDimTable table;
  table.weight = weight;
  if (weight == 0) {
    table.dims.emplace(0u, Integer(1));
    return table;
  }
  for (unsigned i = 1; i <= weight; ++i) table.dims.emplace(i, Integer(0));
  if (weight % 2 == 1) return table;  // every summand has odd character degree

  PlethysmStore& store = options.store ? *options.store : fallback_store();
  InvariantWeights weights(3 * weight);
  if (options.pairing != PairingMode::fused) {
    // Materialize the series up front so workers only ever read it.
    shared_littlewood_series().part(3 * weight);
  }

  std::vector<WeightPartition> terms = weight_partitions(weight);

  // Longest job first: pairing cost grows steeply with the character
  // degree, and the stragglers would otherwise all land at the end.
  std::vector<std::size_t> order(terms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return terms[a].sf_degree() > terms[b].sf_degree();
  });

  // Every term writes its own slot; the reduction below is sequential,
  // so the table is identical for any worker count.
  std::vector<Integer> results(terms.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      std::size_t slot = next.fetch_add(1);
      if (slot >= order.size() || failed.load()) return;
      std::size_t index = order[slot];
      try {
        auto started = std::chrono::steady_clock::now();
        results[index] = chain_term_dim(terms[index], store, weights, options.pairing);
        if (options.on_term) {
          std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
          options.on_term(terms[index], elapsed.count());
        }
      } catch (...) {
        {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };

  unsigned workers = std::max(1u, options.threads);
  workers = std::min<unsigned>(workers, terms.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < terms.size(); ++i) {
    table.dims[terms[i].homological_degree()] += results[i];
  }
  return table;
}

Integer euler_char(unsigned weight, const ChainOptions& options) {
  return chain_dims(weight, options).euler();
}

}  // namespace sphom
