#pragma once

#include <functional>

namespace avicert {

/// Resolves a thread-count request: values <= 0 mean "use all hardware threads".
int resolve_threads(int requested);

/// Runs fn(i) for i in [0, count) on up to `threads` workers using a static
/// block partition. Each index is processed exactly once and results must be
/// written to per-index slots, so the outcome is identical for any thread
/// count. The first exception thrown by a worker is rethrown on the caller.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace avicert
