#pragma once

#include <cstdint>

namespace rankwb {

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Smallest prime >= start.
std::uint64_t next_prime(std::uint64_t start);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace rankwb
