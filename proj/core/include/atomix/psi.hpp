#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace atomix {

using BigInt = boost::multiprecision::cpp_int;

/// Upper bound on the state complexity of an atom A_S with |S| = s of a
/// language whose minimal DFA has n states:
///
///     2^n - 1                                        if s = 0 or s = n
///     1 + sum_{k=1..s} sum_{l=1..n-s} C(n,k) C(n-k,l)  otherwise
///
/// The leading 1 counts the sink; the double sum counts disjoint pairs (S',T')
/// with 1 <= |S'| <= s and 1 <= |T'| <= n-s. Throws DomainError unless
/// 0 <= s <= n and n >= 1.
BigInt psi(long long n, long long s);

BigInt binomial(unsigned n, unsigned k);

}  // namespace atomix
