#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace tfu {

/// Number of worker threads used by slice-parallel loops (default 1).
/// Results never depend on this value: every parallel loop writes disjoint
/// outputs and every reduction runs in a fixed order.
void set_thread_count(int threads);
int thread_count();

/// Runs body(i) for i in [0, count), split into contiguous blocks across
/// the configured threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Pairwise (tree) summation with a fixed split order.
double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

}  // namespace tfu
