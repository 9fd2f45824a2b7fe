#include "vanish/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace vanish {
namespace {

unsigned threads_from_env() {
  if (const char* env = std::getenv("VANISH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return 1;
}

std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> value{threads_from_env()};
  return value;
}

}  // namespace

unsigned default_threads() { return thread_setting().load(); }

void set_default_threads(unsigned threads) {
  thread_setting().store(threads == 0 ? 1 : threads);
}

}  // namespace vanish
