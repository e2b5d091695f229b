#include "tforge/kernels.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tforge/errors.hpp"

namespace tforge::kernels {

namespace {

inline double convolve_one(const std::vector<double>& a,
                           const std::vector<double>& b, int k) {
    const int na = static_cast<int>(a.size());
    const int nb = static_cast<int>(b.size());
    double acc = 0.0;
    int lo = std::max(0, k - nb + 1);
    int hi = std::min(k, na - 1);
    for (int i = lo; i <= hi; ++i) {
        acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(k - i)];
    }
    return acc;
}

} // namespace

std::vector<double> convolve_serial(const std::vector<double>& a,
                                    const std::vector<double>& b, int out_len) {
    if (a.empty() || b.empty()) throw NumericError("convolve: empty operand");
    std::vector<double> out(static_cast<size_t>(out_len));
    for (int k = 0; k < out_len; ++k) {
        out[static_cast<size_t>(k)] = convolve_one(a, b, k);
    }
    return out;
}

std::vector<double> convolve_parallel(const std::vector<double>& a,
                                      const std::vector<double>& b, int out_len) {
    if (a.empty() || b.empty()) throw NumericError("convolve: empty operand");
    std::vector<double> out(static_cast<size_t>(out_len));
#pragma omp parallel for schedule(static)
    for (int k = 0; k < out_len; ++k) {
        out[static_cast<size_t>(k)] = convolve_one(a, b, k);
    }
    return out;
}

double dot_serial(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw NumericError("dot: length mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double dot_omp_reduction(const std::vector<double>& a,
                         const std::vector<double>& b) {
    if (a.size() != b.size()) throw NumericError("dot: length mismatch");
    const int n = static_cast<int>(a.size());
    double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (int i = 0; i < n; ++i) {
        acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
    }
    return acc;
}

std::vector<double> parallel_map(int n, const std::function<double(int)>& f) {
    std::vector<double> out(static_cast<size_t>(n));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        // Exceptions must not cross the OpenMP region; capture the first
        // one and rethrow after the join.
        try {
            out[static_cast<size_t>(i)] = f(i);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace tforge::kernels
