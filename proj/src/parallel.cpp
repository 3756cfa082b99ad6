#include "simplex_kde/parallel.hpp"

#include <cstdlib>
#include <string>

namespace simplex_kde {

std::size_t thread_count() {
  if (const char* env = std::getenv("SIMPLEX_KDE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace simplex_kde
