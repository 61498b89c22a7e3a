#ifndef GEEPRESS_RNG_HPP
#define GEEPRESS_RNG_HPP

#include <array>
#include <cstdint>

namespace geepress {

/// Philox4x32-10 counter-based generator.  Each (seed, stream) pair yields
/// an independent deterministic sequence, so parallel simulation replicates
/// can draw from their own streams and reproduce bit-identically regardless
/// of scheduling.  The 64-bit seed forms the key; the 64-bit stream id
/// occupies the high counter words and a running block index the low ones.
class Philox4x32 {
public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream);

  /// One 10-round Philox4x32 block: the core bijection, exposed for
  /// known-answer tests.
  static Counter block(Counter counter, Key key);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform draw on the open interval (0, 1) with 53-bit resolution.
  double uniform();

  /// Standard normal draw via the inverse CDF applied to uniform().
  double normal();

private:
  void refill();

  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  Counter buffer_{};
  int cursor_ = 4;  // buffer exhausted; refill on first use
};

}  // namespace geepress

#endif  // GEEPRESS_RNG_HPP
