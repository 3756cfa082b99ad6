#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace simplex_kde {

//! SplitMix64 finalizer; maps (seed, stream) to an independent 64-bit seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

//! Seeded generator with a fixed, platform-independent draw protocol.
//!
//! Everything is built on std::mt19937_64 (bit-exact by the standard):
//!   uniform()        (x >> 11) * 2^-53, in [0, 1)
//!   uniform_open()   ((x >> 11) + 0.5) * 2^-53, in (0, 1)
//!   standard_normal  inverse normal CDF of one uniform_open()
//!   exponential      -log(uniform_open())
//!   index(n)         rejection-sampled x mod n, no modulo bias
//! Each call consumes exactly one engine output, except index() on rejection.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  //! Independent stream for a named purpose, derived from a parent seed.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(derive_seed(seed, stream));
  }

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  double uniform_open();
  double standard_normal();
  double exponential();
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace simplex_kde
