#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace singulus {

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// First eight bytes of the SHA-256, big endian. Used to seed the random
/// choices (primes, test lines) so that runs on the same input agree.
std::uint64_t seed_from(std::string_view bytes);

}  // namespace singulus
