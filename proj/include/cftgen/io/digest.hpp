#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace cftgen::io {

// FNV-1a 64-bit content digest, hex-encoded; used to tag exported documents
// with the inputs they were generated from.
inline std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

}  // namespace cftgen::io
