#include "singulus/dense.hpp"

namespace singulus::la {

PrimeField::PrimeField(std::uint32_t p, const simd::KernelTable& kernels) : p_(p), kernels_(&kernels) {
  if (p < 2 || p >= simd::kMaxKernelModulus)
    throw std::invalid_argument("dense prime field needs 2 <= p < 2^31");
}

}  // namespace singulus::la
