#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sklift/exactnum/bigint.hpp"

namespace sklift::ntt {

// Largest transform length supported by the built-in prime table.
inline constexpr std::size_t kMaxLength = std::size_t{1} << 24;
// Below this many output terms schoolbook multiplication wins.
inline constexpr std::size_t kSchoolbookThreshold = 48;

// First `len` coefficients of a*b over Z/p, for any modulus p < 2^62.
std::vector<std::uint64_t> convolve_mod(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b, std::uint64_t p,
                                        std::size_t len);

// First `len` coefficients of a*b over Z. Multi-modular NTT with CRT
// reassembly; falls back to schoolbook for short inputs or when the
// coefficient bound exceeds the prime table.
std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                             std::size_t len);

std::vector<BigInt> multiply_schoolbook(const std::vector<BigInt>& a,
                                        const std::vector<BigInt>& b, std::size_t len);

// Inverse of a power series over Z/p (a[0] must be a unit), to `len` terms.
// Newton iteration on top of convolve_mod.
std::vector<std::uint64_t> inverse_series_mod(const std::vector<std::uint64_t>& a,
                                              std::uint64_t p, std::size_t len);

}  // namespace sklift::ntt
