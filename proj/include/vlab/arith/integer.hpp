#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vlab {

using Int = mpz_class;

bool is_prime(const Int& n);
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

// Exponent of p in n; n must be nonzero.
long vp_int(const Int& n, const Int& p);

// Trial-division factorization of a small positive integer, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t n);

Int pow_int(const Int& base, unsigned long exp);

// Symmetric residue in (-m/2, m/2].
Int symmetric_mod(const Int& a, const Int& m);

// Nonnegative residue in [0, m).
Int mod_floor(const Int& a, const Int& m);

Int inverse_mod(const Int& a, const Int& m);

// Fits into a uint64 and throws otherwise.
std::uint64_t to_u64(const Int& n);

} // namespace vlab
