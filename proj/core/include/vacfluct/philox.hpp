#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace vacfluct {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).  A block of
// four 32-bit words is a pure function of (counter, key), so any sample can
// be regenerated from its index and streams split by key never overlap.
class Philox4x32 {
public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  constexpr explicit Philox4x32(Key key) : key_(key) {}
  constexpr explicit Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  constexpr Counter operator()(Counter ctr) const {
    Key k = key_;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        k[0] += kWeyl0;
        k[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ k[0], lo1, hi0 ^ ctr[3] ^ k[1], lo0};
    }
    return ctr;
  }

  // Independent generator for a sub-stream.
  constexpr Philox4x32 split(std::uint32_t stream) const {
    return Philox4x32(Key{key_[0], key_[1] ^ (stream * kWeyl0 + 1u)});
  }

  // Two uniforms in (0, 1] for the 64-bit block index `index`.
  std::array<double, 2> uniform_pair(std::uint64_t index) const {
    const Counter r = (*this)(Counter{static_cast<std::uint32_t>(index),
                                      static_cast<std::uint32_t>(index >> 32), 0u, 0u});
    const std::uint64_t a = (std::uint64_t{r[0]} << 32) | r[1];
    const std::uint64_t b = (std::uint64_t{r[2]} << 32) | r[3];
    constexpr double scale = 1.0 / 9007199254740992.0; // 2^-53
    return {static_cast<double>((a >> 11) + 1) * scale,
            static_cast<double>((b >> 11) + 1) * scale};
  }

  const Key &key() const { return key_; }

private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  Key key_;
};

} // namespace vacfluct
