#include "posmon/primes.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "posmon/error.hpp"

namespace posmon {
namespace {

// Hard ceiling on the sieve so a runaway p(...) argument fails instead of
// exhausting memory.
constexpr std::uint64_t kMaxIndex = 50'000'000;

class PrimeTable {
 public:
  std::uint64_t at(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (primes_.size() < n) grow();
    return primes_[n - 1];
  }

 private:
  void grow() {
    limit_ = limit_ == 0 ? 1024 : limit_ * 2;
    std::vector<bool> composite(limit_ + 1, false);
    primes_.clear();
    for (std::uint64_t i = 2; i <= limit_; ++i) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (std::uint64_t j = i * i; j <= limit_; j += i) composite[j] = true;
    }
  }

  std::mutex mu_;
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
};

PrimeTable& table() {
  static PrimeTable t;
  return t;
}

}  // namespace

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomain, "nth_prime: index must be at least 1");
  if (n > kMaxIndex) throw Error(ErrorCode::kDomain, "nth_prime: index too large");
  return table().at(n);
}

}  // namespace posmon
