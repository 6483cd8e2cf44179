#include "atomix/psi.hpp"

#include <string>

#include "atomix/error.hpp"

namespace atomix {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt psi(long long n, long long s) {
  if (n < 1 || s < 0 || s > n)
    raise(ErrorKind::Domain, "psi(" + std::to_string(n) + ", " + std::to_string(s) + ") needs n >= 1, 0 <= s <= n");
  const auto un = static_cast<unsigned>(n);
  const auto us = static_cast<unsigned>(s);
  if (us == 0 || us == un) return (BigInt{1} << un) - 1;
  // Binomials advance incrementally along both sums: C(n,k) in k, C(n-k,l) in l.
  BigInt total = 1;
  BigInt choose_k = 1;
  for (unsigned k = 1; k <= us; ++k) {
    choose_k = choose_k * (un - k + 1) / k;
    const unsigned m = un - k;
    BigInt choose_l = 1;
    BigInt inner = 0;
    for (unsigned l = 1; l <= un - us; ++l) {
      choose_l = choose_l * (m - l + 1) / l;
      inner += choose_l;
    }
    total += choose_k * inner;
  }
  return total;
}

}  // namespace atomix
