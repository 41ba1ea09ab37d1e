#pragma once

#include <cstdint>
#include <vector>

#include "sklift/exactnum/modp.hpp"

namespace sklift {

// B_n mod p for even n >= 2 with (p-1) not dividing n, by inverting
// (e^t - 1)/t over F_p to degree n with NTT products. Larger n are reduced
// to n mod (p-1) by Kummer's congruence.
PrimeFieldElement bernoulli_mod_p(std::uint64_t n, std::uint64_t p);

// B_0, ..., B_{len-1} mod p from one series inversion. len <= p.
std::vector<std::uint64_t> bernoulli_table_mod_p(std::uint64_t p, std::size_t len);

// Even n <= p-3 with p | B_n, in increasing order.
std::vector<std::uint64_t> irregular_scan(std::uint64_t p);

// Quadratic-time recurrence; only meant for small p and cross-checks.
// Throws DomainError unless `allow_slow` is set or p < 5000.
std::vector<std::uint64_t> irregular_scan_naive(std::uint64_t p, bool allow_slow = false);

}  // namespace sklift
