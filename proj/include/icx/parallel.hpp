#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace icx {

/// Worker count: ICX_THREADS when set to a positive integer, else the hardware concurrency.
unsigned worker_count();

/**
 * Runs job(i) for i in [0, n) on up to worker_count() threads. Jobs must not
 * share mutable state. If any job throws, the exception of the lowest index
 * is rethrown after all workers stop.
 */
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job);

/// Results are stored by index, so the output never depends on scheduling.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace icx
