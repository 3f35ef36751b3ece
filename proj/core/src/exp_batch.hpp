#pragma once

#include <cmath>
#include <cstddef>

#if defined(MODESEEK_HAVE_LIBMVEC) && defined(__x86_64__) && \
    (defined(__AVX512F__) || defined(__AVX2__))
#define MODESEEK_EXP_BATCH_VECTOR 1
#include <immintrin.h>

extern "C" {
#if defined(__AVX512F__)
__m512d _ZGVeN8v_exp(__m512d);
#endif
#if defined(__AVX2__)
__m256d _ZGVdN4v_exp(__m256d);
#endif
}
#endif

namespace modeseek::detail {

/// In-place x[i] = exp(x[i]). Uses glibc's vectorized exp where available
/// (within 4 ulp of std::exp); the tail and the fallback use std::exp. The
/// result is a pure function of the input array, so batching does not affect
/// reproducibility.
inline void exp_batch(double* x, std::size_t n) {
  std::size_t i = 0;
#if defined(MODESEEK_EXP_BATCH_VECTOR)
#if defined(__AVX512F__)
  for (; i + 8 <= n; i += 8) {
    _mm512_storeu_pd(x + i, _ZGVeN8v_exp(_mm512_loadu_pd(x + i)));
  }
#elif defined(__AVX2__)
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x + i, _ZGVdN4v_exp(_mm256_loadu_pd(x + i)));
  }
#endif
#endif
  for (; i < n; ++i) {
    x[i] = std::exp(x[i]);
  }
}

}  // namespace modeseek::detail
