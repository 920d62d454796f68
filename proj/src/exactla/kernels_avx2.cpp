// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels_internal.hpp"

namespace singulus::simd::avx2 {

namespace {

// c*x mod p on eight lanes. Lanes hold residues < p < 2^31.
inline __m256i mul_shoup(__m256i x, __m256i c, __m256i c_shoup, __m256i p) {
  // High halves of the 32x32->64 products c_shoup*x, even and odd lanes.
  const __m256i even = _mm256_mul_epu32(x, c_shoup);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), c_shoup);
  const __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0b10101010);
  const __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, c), _mm256_mullo_epi32(q, p));
  // r in [0, 2p): min(r, r - p) as unsigned picks the reduced value.
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, p));
}

}  // namespace

void axpy(std::uint32_t* dst, const std::uint32_t* src, MulConstant c, std::uint32_t p,
          std::size_t len) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c.value));
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(c.shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_add_epi32(d, mul_shoup(x, vc, vs, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_min_epu32(s, _mm256_sub_epi32(s, vp)));
  }
  scalar::axpy(dst + i, src + i, c, p, len - i);
}

void scale(std::uint32_t* row, MulConstant c, std::uint32_t p, std::size_t len) {
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c.value));
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(c.shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), mul_shoup(x, vc, vs, vp));
  }
  scalar::scale(row + i, c, p, len - i);
}

}  // namespace singulus::simd::avx2
