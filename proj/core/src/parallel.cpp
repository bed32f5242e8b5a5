#include "gsr/parallel.hpp"

#include <Eigen/Core>

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsr {
namespace {

int default_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("GSR_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < hw) return cap;
        } catch (...) {
            // unparsable value: ignore the cap
        }
    }
    return hw;
}

std::atomic<int> g_threads{0};

void apply(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#endif
    Eigen::setNbThreads(n);
}

}  // namespace

int thread_count() {
    int n = g_threads.load();
    if (n == 0) {
        n = default_threads();
        g_threads.store(n);
        apply(n);
    }
    return n;
}

void set_thread_count(int threads) {
    int n = threads >= 1 ? threads : default_threads();
    g_threads.store(n);
    apply(n);
}

}  // namespace gsr
