#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace singulus::simd::neon {

namespace {

inline uint32x4_t mul_shoup(uint32x4_t x, uint32_t c, uint32_t c_shoup, uint32x4_t p) {
  const uint32x2_t s = vdup_n_u32(c_shoup);
  const uint64x2_t lo = vmull_u32(vget_low_u32(x), s);
  const uint64x2_t hi = vmull_u32(vget_high_u32(x), s);
  const uint32x4_t q = vcombine_u32(vshrn_n_u64(lo, 32), vshrn_n_u64(hi, 32));
  const uint32x4_t r = vsubq_u32(vmulq_n_u32(x, c), vmulq_u32(q, p));
  return vminq_u32(r, vsubq_u32(r, p));
}

}  // namespace

void axpy(std::uint32_t* dst, const std::uint32_t* src, MulConstant c, std::uint32_t p,
          std::size_t len) {
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const uint32x4_t s = vaddq_u32(vld1q_u32(dst + i), mul_shoup(vld1q_u32(src + i), c.value, c.shoup, vp));
    vst1q_u32(dst + i, vminq_u32(s, vsubq_u32(s, vp)));
  }
  scalar::axpy(dst + i, src + i, c, p, len - i);
}

void scale(std::uint32_t* row, MulConstant c, std::uint32_t p, std::size_t len) {
  const uint32x4_t vp = vdupq_n_u32(p);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) vst1q_u32(row + i, mul_shoup(vld1q_u32(row + i), c.value, c.shoup, vp));
  scalar::scale(row + i, c, p, len - i);
}

}  // namespace singulus::simd::neon
