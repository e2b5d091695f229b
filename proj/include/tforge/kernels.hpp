#pragma once

#include <functional>
#include <vector>

#include "tforge/series.hpp"

namespace tforge::kernels {

// Convolution kernels behind cauchy_product. The parallel variant splits
// across output coefficients; each coefficient is accumulated in the same
// order as the serial loop, so results are bitwise identical.
std::vector<double> convolve_serial(const std::vector<double>& a,
                                    const std::vector<double>& b, int out_len);
std::vector<double> convolve_parallel(const std::vector<double>& a,
                                      const std::vector<double>& b, int out_len);

// Dot products. The reduction variant uses an OpenMP reduction, so the
// summation order is unspecified; expect agreement to roundoff, not bits.
double dot_serial(const std::vector<double>& a, const std::vector<double>& b);
double dot_omp_reduction(const std::vector<double>& a,
                         const std::vector<double>& b);

// Evaluates f(i) for i in [0, n) with independent iterations spread over
// threads. Each slot is written exactly once, so the output is
// deterministic whenever f is.
std::vector<double> parallel_map(int n, const std::function<double(int)>& f);

int thread_count();

} // namespace tforge::kernels
