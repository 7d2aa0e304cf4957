#include "kothedim/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>
#include <vector>

namespace kothedim {

int scan_thread_count(int requested) {
  if (requested > 0) return requested;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("KOTHEDIM_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  }
  return hw;
}

namespace {

template <typename Combine>
double parallel_reduce(std::int64_t lo, std::int64_t hi,
                       const std::function<double(std::int64_t)>& f, int threads,
                       double init, Combine combine) {
  if (hi < lo) return init;
  int n_threads = scan_thread_count(threads);
  std::int64_t span = hi - lo + 1;
  if (n_threads <= 1 || span < 2048) {
    double acc = init;
    for (std::int64_t t = lo; t <= hi; ++t) acc = combine(acc, f(t));
    return acc;
  }
  std::int64_t chunk = (span + n_threads - 1) / n_threads;
  std::vector<double> partial(static_cast<std::size_t>(n_threads), init);
  std::vector<std::thread> workers;
  for (int w = 0; w < n_threads; ++w) {
    std::int64_t a = lo + w * chunk;
    std::int64_t b = std::min(hi, a + chunk - 1);
    if (a > hi) break;
    workers.emplace_back([&, w, a, b]() {
      double acc = init;
      for (std::int64_t t = a; t <= b; ++t) acc = combine(acc, f(t));
      partial[static_cast<std::size_t>(w)] = acc;
    });
  }
  for (auto& th : workers) th.join();
  double acc = init;
  for (double p : partial) acc = combine(acc, p);
  return acc;
}

}  // namespace

double parallel_max(std::int64_t lo, std::int64_t hi,
                    const std::function<double(std::int64_t)>& f, int threads) {
  return parallel_reduce(lo, hi, f, threads, -std::numeric_limits<double>::infinity(),
                         [](double a, double b) { return a > b ? a : b; });
}

double parallel_min(std::int64_t lo, std::int64_t hi,
                    const std::function<double(std::int64_t)>& f, int threads) {
  return parallel_reduce(lo, hi, f, threads, std::numeric_limits<double>::infinity(),
                         [](double a, double b) { return a < b ? a : b; });
}

}  // namespace kothedim
