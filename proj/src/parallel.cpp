#include "parallel.hpp"

#include <cstdlib>
#include <string>

namespace netperf::detail {

int thread_count() {
  if (const char* env = std::getenv("NETPERF_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested >= 1) return requested;
    } catch (...) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace netperf::detail
