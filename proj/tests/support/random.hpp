#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jumploci/cyclotomic.hpp"
#include "jumploci/laurent.hpp"
#include "jumploci/linalg.hpp"

namespace testsupport {

using jumploci::Cyclo;

/// Raw mt19937_64 output reduced mod n, so streams are identical on every
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(gen_() % n); }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
  bool coin() { return (gen_() & 1U) != 0; }

 private:
  std::mt19937_64 gen_;
};

Cyclo random_rational(Rng& rng, long bound);
// Conductors and orders are kept to divisors of 24: mixing coprime orders
// makes the common conductor (and every field operation) blow up.

/// Small element of Q(zeta_n) for n drawn from {1, 3, 4, 6, 8, 12}.
Cyclo random_cyclo(Rng& rng, long bound = 3);
Cyclo random_nonzero_cyclo(Rng& rng, long bound = 3);
/// zeta_n^k with n | 24 and n <= max_order.
Cyclo random_root_of_unity(Rng& rng, unsigned max_order);

jumploci::LaurentPoly random_poly(Rng& rng, std::size_t nvars, std::size_t terms, int exp_bound, bool cyclotomic);

/// Product of elementary matrices with small rational entries (exactly invertible).
jumploci::Matrix random_invertible(Rng& rng, std::size_t n, bool cyclotomic = false);

}  // namespace testsupport
