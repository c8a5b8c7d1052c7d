#ifndef COXTEST_RNG_HPP_
#define COXTEST_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace coxtest {

/// 64-bit avalanche mix (Stafford variant 13 of the MurmurHash3 finalizer).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Folds a list of integers into one 64-bit seed. Used to derive per-trial
/// seeds from (master seed, grid index, trial index).
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

/// Counter-based random stream.
///
/// The k-th output is mix64(key + (k + 1) * gamma), where key and the odd
/// increment gamma are hashed from (master_seed, stream_index). Output
/// depends only on the pair and the draw position, so a stream can be
/// recreated anywhere and streams never share state. Satisfies
/// UniformRandomBitGenerator.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    ++counter_;
    return mix64(key_ + counter_ * gamma_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1).
  double uniform_open() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Unit-rate exponential, strictly positive.
  double exponential();

  /// Standard normal draw.
  double normal();

  /// Independent child stream, e.g. for a latent path driving a sampler.
  RngStream substream(std::uint64_t index) const;

  std::uint64_t draws() const { return counter_; }

 private:
  RngStream(std::uint64_t key, std::uint64_t gamma, int);

  std::uint64_t key_;
  std::uint64_t gamma_;
  std::uint64_t counter_ = 0;
};

}  // namespace coxtest

#endif  // COXTEST_RNG_HPP_
