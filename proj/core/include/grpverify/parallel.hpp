#pragma once

#include <cstddef>
#include <functional>

namespace grpverify {

std::size_t default_jobs();

// Runs body(i) for i in [0, n) on up to `jobs` threads. Workers inherit the
// caller's deadline; the first exception thrown is rethrown here.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& body);

}  // namespace grpverify
