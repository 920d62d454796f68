#pragma once

#include "singulus/simd/kernels.hpp"

namespace singulus::simd {

namespace avx2 {
void axpy(std::uint32_t* dst, const std::uint32_t* src, MulConstant c, std::uint32_t p,
          std::size_t len);
void scale(std::uint32_t* row, MulConstant c, std::uint32_t p, std::size_t len);
}  // namespace avx2

namespace neon {
void axpy(std::uint32_t* dst, const std::uint32_t* src, MulConstant c, std::uint32_t p,
          std::size_t len);
void scale(std::uint32_t* row, MulConstant c, std::uint32_t p, std::size_t len);
}  // namespace neon

}  // namespace singulus::simd
