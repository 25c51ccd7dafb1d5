#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace crlab {

/// 128-bit content hash used as a color identifier. Colors are recursively
/// defined multiset trees; hashing the sorted child digests makes equal trees
/// collide-free up to the digest width, with no shared rename table.
struct Digest {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  friend auto operator<=>(const Digest&, const Digest&) = default;

  std::string hex() const;
};

namespace detail {

inline std::uint64_t rotl64(std::uint64_t x, int r) {
  return (x << r) | (x >> (64 - r));
}

inline std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdULL;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ULL;
  k ^= k >> 33;
  return k;
}

// MurmurHash3 x64 128-bit variant.
inline Digest murmur3_128(const void* key, std::size_t len, std::uint64_t seed) {
  const auto* data = static_cast<const std::uint8_t*>(key);
  const std::size_t nblocks = len / 16;

  std::uint64_t h1 = seed;
  std::uint64_t h2 = seed;
  const std::uint64_t c1 = 0x87c37b91114253d5ULL;
  const std::uint64_t c2 = 0x4cf5ad432745937fULL;

  for (std::size_t i = 0; i < nblocks; i++) {
    std::uint64_t k1, k2;
    std::memcpy(&k1, data + i * 16, 8);
    std::memcpy(&k2, data + i * 16 + 8, 8);
    k1 *= c1; k1 = rotl64(k1, 31); k1 *= c2; h1 ^= k1;
    h1 = rotl64(h1, 27); h1 += h2; h1 = h1 * 5 + 0x52dce729;
    k2 *= c2; k2 = rotl64(k2, 33); k2 *= c1; h2 ^= k2;
    h2 = rotl64(h2, 31); h2 += h1; h2 = h2 * 5 + 0x38495ab5;
  }

  const std::uint8_t* tail = data + nblocks * 16;
  std::uint64_t k1 = 0, k2 = 0;
  switch (len & 15) {
    case 15: k2 ^= std::uint64_t(tail[14]) << 48; [[fallthrough]];
    case 14: k2 ^= std::uint64_t(tail[13]) << 40; [[fallthrough]];
    case 13: k2 ^= std::uint64_t(tail[12]) << 32; [[fallthrough]];
    case 12: k2 ^= std::uint64_t(tail[11]) << 24; [[fallthrough]];
    case 11: k2 ^= std::uint64_t(tail[10]) << 16; [[fallthrough]];
    case 10: k2 ^= std::uint64_t(tail[9]) << 8; [[fallthrough]];
    case 9:  k2 ^= std::uint64_t(tail[8]);
             k2 *= c2; k2 = rotl64(k2, 33); k2 *= c1; h2 ^= k2; [[fallthrough]];
    case 8:  k1 ^= std::uint64_t(tail[7]) << 56; [[fallthrough]];
    case 7:  k1 ^= std::uint64_t(tail[6]) << 48; [[fallthrough]];
    case 6:  k1 ^= std::uint64_t(tail[5]) << 40; [[fallthrough]];
    case 5:  k1 ^= std::uint64_t(tail[4]) << 32; [[fallthrough]];
    case 4:  k1 ^= std::uint64_t(tail[3]) << 24; [[fallthrough]];
    case 3:  k1 ^= std::uint64_t(tail[2]) << 16; [[fallthrough]];
    case 2:  k1 ^= std::uint64_t(tail[1]) << 8; [[fallthrough]];
    case 1:  k1 ^= std::uint64_t(tail[0]);
             k1 *= c1; k1 = rotl64(k1, 31); k1 *= c2; h1 ^= k1;
  }

  h1 ^= len; h2 ^= len;
  h1 += h2; h2 += h1;
  h1 = fmix64(h1); h2 = fmix64(h2);
  h1 += h2; h2 += h1;
  return Digest{h1, h2};
}

}  // namespace detail

inline Digest digest_bytes(const void* data, std::size_t len) {
  return detail::murmur3_128(data, len, 0x9e3779b97f4a7c15ULL);
}

/// Digest of a tagged list of digests. The list must already be in
/// deterministic (sorted) order when it represents a multiset.
inline Digest digest_list(std::uint32_t tag, const std::vector<Digest>& items) {
  std::vector<std::uint8_t> buf(4 + items.size() * 16);
  std::memcpy(buf.data(), &tag, 4);
  for (std::size_t i = 0; i < items.size(); i++) {
    std::memcpy(buf.data() + 4 + i * 16, &items[i].hi, 8);
    std::memcpy(buf.data() + 4 + i * 16 + 8, &items[i].lo, 8);
  }
  return digest_bytes(buf.data(), buf.size());
}

inline Digest digest_ints(std::uint32_t tag, const std::vector<std::int64_t>& items) {
  std::vector<std::uint8_t> buf(4 + items.size() * 8);
  std::memcpy(buf.data(), &tag, 4);
  for (std::size_t i = 0; i < items.size(); i++) {
    std::memcpy(buf.data() + 4 + i * 8, &items[i], 8);
  }
  return digest_bytes(buf.data(), buf.size());
}

inline std::string Digest::hex() const {
  static const char* k = "0123456789abcdef";
  std::string s(32, '0');
  for (int i = 0; i < 16; i++) {
    std::uint64_t w = i < 8 ? hi : lo;
    int shift = 56 - 8 * (i % 8);
    std::uint8_t b = std::uint8_t(w >> shift);
    s[2 * i] = k[b >> 4];
    s[2 * i + 1] = k[b & 15];
  }
  return s;
}

}  // namespace crlab

template <>
struct std::hash<crlab::Digest> {
  std::size_t operator()(const crlab::Digest& d) const noexcept {
    return d.hi ^ (d.lo * 0x9e3779b97f4a7c15ULL);
  }
};
