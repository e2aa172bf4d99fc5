#pragma once

#include <cstdint>

namespace posmon {

/// n-th prime, 1-indexed: nth_prime(1) == 2. Backed by a process-wide sieve
/// that grows on demand; safe to call from multiple threads.
/// Throws ErrorCode::kDomain for n == 0.
std::uint64_t nth_prime(std::uint64_t n);

}  // namespace posmon
