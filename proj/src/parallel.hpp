#pragma once

// Deterministic parallel search helpers. Every kernel here has a serial
// twin producing the same answer; tests compare the two.

#include <omp.h>

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <vector>

namespace grayfac::detail {

/// Smallest index i in [0, n) for which body(i) reports a failure, together
/// with that failure. body must be a pure function of i.
template <class Body>
std::optional<std::string> first_failure(std::ptrdiff_t n, const Body& body, bool parallel) {
  if (!parallel || n < 2) {
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (auto msg = body(i)) return msg;
    }
    return std::nullopt;
  }
  std::atomic<std::ptrdiff_t> best{n};
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (body(i)) {
      std::ptrdiff_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  if (best.load() == n) return std::nullopt;
  return body(best.load());
}

/// Concatenation of per-index result vectors in index order.
template <class T, class Body>
std::vector<T> ordered_collect(std::ptrdiff_t n, const Body& body, bool parallel) {
  std::vector<std::vector<T>> parts(static_cast<std::size_t>(n));
  if (parallel && n > 1) {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        parts[i] = body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) parts[i] = body(i);
  }
  std::vector<T> out;
  for (auto& p : parts) {
    for (auto& x : p) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace grayfac::detail
