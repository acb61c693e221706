#pragma once

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace xbench {

inline constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ULL;
inline constexpr std::uint64_t kFnvPrime = 0x100000001B3ULL;

// FNV-1a over 64-bit words.
constexpr std::uint64_t fold_words(std::initializer_list<std::uint64_t> words,
                                   std::uint64_t h = kFnvOffset) noexcept {
  for (auto w : words) {
    h ^= w;
    h *= kFnvPrime;
  }
  return h;
}

constexpr std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = kFnvOffset) noexcept {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace xbench
