#include "mukai/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mukai {

unsigned worker_count() {
  if (const char* env = std::getenv("MUKAI_KIT_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace mukai
