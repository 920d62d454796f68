#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace singulus::simd {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::axpy, &scalar::scale};
#if defined(SINGULUS_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::axpy, &avx2::scale};
#endif
#if defined(SINGULUS_HAVE_NEON_KERNELS)
constexpr KernelTable kNeon{Isa::Neon, &neon::axpy, &neon::scale};
#endif

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(SINGULUS_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(SINGULUS_HAVE_NEON_KERNELS)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select() {
  if (const char* forced = std::getenv("SINGULUS_SIMD")) {
    const std::string name(forced);
    for (Isa isa : available_isas())
      if (isa_name(isa) == name) return kernels_for(isa);
    if (name != "auto") throw std::runtime_error("SINGULUS_SIMD=" + name + " is not available");
  }
  return kernels_for(available_isas().back());
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Neon:
      return "neon";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::Scalar};
  for (Isa isa : {Isa::Avx2, Isa::Neon})
    if (cpu_has(isa)) out.push_back(isa);
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (!cpu_has(isa)) throw std::invalid_argument("kernel variant not available on this CPU");
  switch (isa) {
#if defined(SINGULUS_HAVE_AVX2_KERNELS)
    case Isa::Avx2:
      return kAvx2;
#endif
#if defined(SINGULUS_HAVE_NEON_KERNELS)
    case Isa::Neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace singulus::simd
