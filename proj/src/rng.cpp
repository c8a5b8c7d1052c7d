#include "coxtest/rng.hpp"

#include <boost/random/normal_distribution.hpp>
#include <cmath>

namespace coxtest {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (std::uint64_t p : parts) h = mix64(h ^ mix64(p + kGolden));
  return h;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : key_(derive_seed({master_seed, stream_index})),
      gamma_(mix64(key_ ^ 0xd1b54a32d192ed03ULL) | 1ULL) {}

RngStream::RngStream(std::uint64_t key, std::uint64_t gamma, int)
    : key_(key), gamma_(gamma | 1ULL) {}

double RngStream::exponential() { return -std::log(uniform_open()); }

double RngStream::normal() {
  // Ziggurat; the distribution object is stateless between calls.
  boost::random::normal_distribution<double> dist;
  return dist(*this);
}

RngStream RngStream::substream(std::uint64_t index) const {
  const std::uint64_t key = derive_seed({key_, gamma_, index});
  return RngStream(key, mix64(key ^ 0xd1b54a32d192ed03ULL), 0);
}

}  // namespace coxtest
