#include "singulus/digest.hpp"

#include <array>
#include <stdexcept>

#include <openssl/evp.h>

namespace singulus {

namespace {

std::array<unsigned char, 32> sha256(std::string_view bytes) {
  std::array<unsigned char, 32> out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size())
    throw std::runtime_error("SHA-256 failed");
  return out;
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s;
  for (unsigned char b : sha256(bytes)) {
    s += kHex[b >> 4];
    s += kHex[b & 15];
  }
  return s;
}

std::uint64_t seed_from(std::string_view bytes) {
  const auto h = sha256(bytes);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | h[i];
  return v;
}

}  // namespace singulus
