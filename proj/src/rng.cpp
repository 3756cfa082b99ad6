#include "simplex_kde/rng.hpp"

#include <cmath>
#include <limits>

#include "simplex_kde/error.hpp"
#include "simplex_kde/special.hpp"

namespace simplex_kde {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::standard_normal() {
  return special::normal_quantile(uniform_open());
}

double Rng::exponential() {
  return -std::log(uniform_open());
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "index range is empty");
  const std::uint64_t range = n;
  // Largest multiple of n representable in 64 bits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % range);
}

}  // namespace simplex_kde
