#pragma once

// a(n) = sum_k C(n,k) C(n+k,k), the value of the n-th Legendre polynomial
// at 3, computed by several independent routes.
//
// None of the routines below share state or caches; each one can serve as an
// oracle for the others.

#include <cstdint>
#include <vector>

#include "apery/bignat.hpp"

namespace apery {

/// C(n, k) by running product; 0 when k > n.
BigNat binomial(std::uint64_t n, std::uint64_t k);

/// sum_{k=0}^{n} C(n,k) C(n+k,k). The reference definition.
BigNat apery_direct(std::uint64_t n);

/// Single term n! / ((k!)^2 (n-2k)!) * 2^k * 3^(n-2k) of the Barnes sum,
/// built from factorials. Requires 2k <= n.
BigNat barnes_term(std::uint64_t n, std::uint64_t k);

/// All Barnes terms for k = 0..floor(n/2), produced by an incremental
/// update of the multinomial. Each step checks that the division is exact.
std::vector<BigNat> barnes_terms(std::uint64_t n);

/// sum_{k=0}^{floor(n/2)} n! / ((k!)^2 (n-2k)!) * 2^k * 3^(n-2k).
BigNat apery_barnes(std::uint64_t n);

/// sum_{i=0}^{n} C(n,i) C(n,n-i) 2^(n-i), i.e. the coefficient of x^n in
/// (1+x)^n (2+x)^n.
BigNat apery_convolution(std::uint64_t n);

/// [a(0), ..., a(n_max)] from (n+1) a(n+1) = 3(2n+1) a(n) - n a(n-1).
std::vector<BigNat> apery_recurrence_range(std::uint64_t n_max);

}  // namespace apery
