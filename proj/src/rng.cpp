#include "rdisc/rng.hpp"

#include <stdexcept>

namespace rdisc {
namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::substream(std::uint64_t stream) const {
  return Rng(mix64(state_ + (stream + 1) * 0xD1342543DE82EF95ULL));
}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("index range must be positive");
  const std::uint64_t threshold = (0 - static_cast<std::uint64_t>(n)) % n;
  std::uint64_t v = next();
  while (v < threshold) v = next();
  return static_cast<std::size_t>(v % n);
}

Rat Rng::dyadic(unsigned bits) {
  if (bits == 0 || bits > 63) throw std::invalid_argument("dyadic bits out of range");
  const std::uint64_t k = next() >> (64 - bits);
  mpz_class den = mpz_class(1) << bits;
  Rat r(mpz_class(static_cast<unsigned long>(k)), den);
  r.canonicalize();
  return r;
}

Rat Rng::dyadic_between(const Rat& lo, const Rat& hi, unsigned bits) {
  Rat u = dyadic(bits);
  return Rat(lo + (hi - lo) * u);
}

}  // namespace rdisc
