#include "vlasol/parallel.hpp"

#include <cstdlib>
#include <string>

namespace vlasol {

int worker_count() {
  static const int count = [] {
    if (const char* env = std::getenv("VLASOL_THREADS")) {
      try {
        const int n = std::stoi(env);
        if (n > 0) return n;
      } catch (const std::exception&) {
      }
    }
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  }();
  return count;
}

}  // namespace vlasol
