#include "grouplab/primes.hpp"

#include <stdexcept>

namespace grouplab {

std::vector<std::int64_t> sieve_primes(std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("sieve_primes: negative bound");
  if (bound > 10'000'000) throw std::invalid_argument("sieve_primes: bound too large");
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t n = 2; n <= bound; ++n) {
    if (composite[static_cast<std::size_t>(n)]) continue;
    primes.push_back(n);
    for (std::int64_t m = n * n; m <= bound; m += n) composite[static_cast<std::size_t>(m)] = true;
  }
  return primes;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int p_adic_valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("p_adic_valuation: n must be nonzero");
  if (p < 2) throw std::invalid_argument("p_adic_valuation: p must be >= 2");
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace grouplab
