#include "geepress/rng.hpp"

#include <boost/math/distributions/normal.hpp>

namespace geepress {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(prod >> 32);
  lo = static_cast<std::uint32_t>(prod);
}

inline void philox_round(Philox4x32::Counter& x, const Philox4x32::Key& k) {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kMul0, x[0], hi0, lo0);
  mulhilo(kMul1, x[2], hi1, lo1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter counter, Key key) {
  for (int round = 0; round < 10; ++round) {
    philox_round(counter, key);
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed),
           static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream) {}

void Philox4x32::refill() {
  const Counter ctr = {static_cast<std::uint32_t>(block_index_),
                       static_cast<std::uint32_t>(block_index_ >> 32),
                       static_cast<std::uint32_t>(stream_),
                       static_cast<std::uint32_t>(stream_ >> 32)};
  buffer_ = block(ctr, key_);
  ++block_index_;
  cursor_ = 0;
}

std::uint32_t Philox4x32::next_u32() {
  if (cursor_ >= 4) refill();
  return buffer_[cursor_++];
}

std::uint64_t Philox4x32::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double Philox4x32::uniform() {
  // 53 random mantissa bits, shifted off the ends of two 32-bit words, then
  // centered so the result lies strictly inside (0, 1).
  const std::uint64_t a = next_u32() >> 5;   // 27 bits
  const std::uint64_t b = next_u32() >> 6;   // 26 bits
  const double x = static_cast<double>((a << 26) | b);
  return (x + 0.5) * (1.0 / 9007199254740992.0);  // 2^-53
}

double Philox4x32::normal() {
  static const boost::math::normal_distribution<double> standard_normal;
  return boost::math::quantile(standard_normal, uniform());
}

}  // namespace geepress
