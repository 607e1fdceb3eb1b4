#pragma once

#include <cstdint>
#include <vector>

namespace grouplab {

// Deterministic sieve of Eratosthenes; supported bounds are small (<= 1e6 by
// policy, hard limit 1e7 to keep memory in check).
std::vector<std::int64_t> sieve_primes(std::int64_t bound);

bool is_prime(std::int64_t n);

// v_p(n): largest k with p^k | n. Requires n != 0 and p >= 2.
int p_adic_valuation(std::int64_t n, std::int64_t p);

std::int64_t ipow(std::int64_t base, int exp);

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m);

// Prime factorization of n >= 1 as (p, multiplicity) pairs, p ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

}  // namespace grouplab
