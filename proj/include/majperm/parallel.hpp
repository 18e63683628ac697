#pragma once

#include <cstddef>
#include <functional>

namespace majperm {

// Work-distribution hook. `for_each(count, body)` must call body(0..count-1)
// exactly once each, in any order and on any thread, and return after all
// calls finished. Library code only ever receives one of these; it never
// creates threads on its own.
using ForEach =
    std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

ForEach sequential();

// Runs bodies on `workers` std::threads pulling indices from a shared
// counter. workers <= 1 degrades to sequential().
ForEach threaded(unsigned workers);

}  // namespace majperm
