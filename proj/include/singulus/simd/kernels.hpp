#pragma once

// Row kernels for dense elimination over Z/p, p < 2^31.
//
// Every kernel has a scalar reference implementation; AVX2 and NEON
// variants are compiled when the target architecture has them and picked
// at runtime. All variants must produce bit-identical rows.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace singulus::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// Largest modulus the kernels accept (exclusive): residues and 2p fit in
/// an unsigned 32-bit lane.
inline constexpr std::uint32_t kMaxKernelModulus = 1u << 31;

/// Precomputed multiplier for x -> c*x mod p (Shoup's trick): with
/// c_shoup = floor(c * 2^32 / p), the quotient estimate (c_shoup*x) >> 32
/// is off by at most one.
struct MulConstant {
  std::uint32_t value;
  std::uint32_t shoup;
};

MulConstant make_mul_constant(std::uint32_t c, std::uint32_t p);

struct KernelTable {
  Isa isa;
  /// dst[i] = (dst[i] + c * src[i]) mod p, for i < len. Inputs in [0, p).
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, MulConstant c, std::uint32_t p,
               std::size_t len);
  /// row[i] = c * row[i] mod p.
  void (*scale)(std::uint32_t* row, MulConstant c, std::uint32_t p, std::size_t len);
};

/// Kernels chosen for this process: the widest variant the CPU supports,
/// unless SINGULUS_SIMD=scalar|avx2|neon forces a specific one.
const KernelTable& active_kernels();

/// Variants compiled in and runnable on this CPU (scalar always first).
std::vector<Isa> available_isas();
const KernelTable& kernels_for(Isa isa);

// Individual variants, exposed for equivalence testing.
namespace scalar {
void axpy(std::uint32_t* dst, const std::uint32_t* src, MulConstant c, std::uint32_t p,
          std::size_t len);
void scale(std::uint32_t* row, MulConstant c, std::uint32_t p, std::size_t len);
}  // namespace scalar

}  // namespace singulus::simd
