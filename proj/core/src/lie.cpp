#include "sphom/lie.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace sphom {

namespace {

SymmetricFunction witt_character(unsigned k) {
  SymmetricFunction f;
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Partition key =
        Partition::unchecked(std::vector<Partition::Part>(k / d, d));
    f.add_term(std::move(key), make_rational(mu, static_cast<long>(k)));
  }
  return f;
}

}  // namespace

const LieCharacter& lie_character(unsigned k) {
  if (k == 0) throw std::invalid_argument("lie_character: k must be positive");
  static std::mutex mutex;
  static std::map<unsigned, LieCharacter> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(k);
  if (it == memo.end()) {
    it = memo.emplace(k, LieCharacter{k, witt_character(k)}).first;
  }
  return it->second;
}

const DerivationCharacter& derivation_character(unsigned k) {
  if (k == 0) {
    // h(0) is the symplectic Lie algebra itself; only the positive
    // degree ideal h+ enters the chain complex.
    throw std::invalid_argument("derivation_character: k must be positive");
  }
  static std::mutex mutex;
  static std::map<unsigned, DerivationCharacter> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(k);
  if (it == memo.end()) {
    SymmetricFunction character =
        SymmetricFunction::power_sum(1) * lie_character(k + 1).character -
        lie_character(k + 2).character;
    it = memo.emplace(k, DerivationCharacter{k, std::move(character)}).first;
  }
  return it->second;
}

Integer witt_dimension(unsigned k, unsigned n) {
  if (k == 0) throw std::invalid_argument("witt_dimension: k must be positive");
  Integer acc = 0;
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), n, k / d);
    acc += mu * power;
  }
  if (acc % k != 0) throw ComputationError("witt_dimension: divisor sum not divisible by k");
  return acc / k;
}

}  // namespace sphom
