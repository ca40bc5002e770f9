#include "cnp/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cnp {

namespace {
std::atomic<int> override_count{0};
}

int thread_count() {
  int o = override_count.load();
  if (o > 0) return o;
  if (const char* env = std::getenv("CNPIERI_THREADS")) {
    try {
      int k = std::stoi(env);
      if (k > 0) return k;
    } catch (...) {
    }
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? int(h) : 1;
}

void set_thread_count(int k) { override_count.store(k > 0 ? k : 0); }

}  // namespace cnp
