#include "singulus/simd/kernels.hpp"

namespace singulus::simd {

MulConstant make_mul_constant(std::uint32_t c, std::uint32_t p) {
  return {c, static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p)};
}

namespace scalar {

namespace {

inline std::uint32_t mul_shoup(std::uint32_t x, MulConstant c, std::uint32_t p) {
  const auto q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c.shoup) * x) >> 32);
  std::uint32_t r = c.value * x - q * p;  // exact in [0, 2p) modulo 2^32
  return r >= p ? r - p : r;
}

}  // namespace

void axpy(std::uint32_t* dst, const std::uint32_t* src, MulConstant c, std::uint32_t p,
          std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t s = dst[i] + mul_shoup(src[i], c, p);
    dst[i] = s >= p ? s - p : s;
  }
}

void scale(std::uint32_t* row, MulConstant c, std::uint32_t p, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) row[i] = mul_shoup(row[i], c, p);
}

}  // namespace scalar
}  // namespace singulus::simd
