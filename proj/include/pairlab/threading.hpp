#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace pairlab {

/// Number of worker threads to use. Reads PAIRLAB_THREADS (>= 1) if set,
/// otherwise std::thread::hardware_concurrency().
unsigned thread_cap();

/// Runs fn(i) for i in [0, n) on up to thread_cap() threads.
/// Results must not depend on execution order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// SplitMix64 step; advances state and returns the next value.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent stream seed from (base, stream, index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index);

}  // namespace pairlab
