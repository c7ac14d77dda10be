#include "rdisc/stream.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdisc {

PayoffStream::PayoffStream(std::vector<Rat> payoffs) : payoffs_(std::move(payoffs)) {
  if (payoffs_.empty()) throw std::invalid_argument("payoff stream must be nonempty");
  for (const Rat& v : payoffs_) {
    if (v < 0) throw std::invalid_argument("payoffs must be nonnegative");
  }
  while (payoffs_.size() > 1 && payoffs_.back() == 0) payoffs_.pop_back();
}

Rat PayoffStream::at_or_zero(std::size_t t) const {
  return t < payoffs_.size() ? payoffs_[t] : Rat(0);
}

PayoffStream blend(const Rat& alpha, const PayoffStream& x, const PayoffStream& y) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("blend weight must lie in [0,1]");
  const std::size_t n = std::max(x.length(), y.length());
  std::vector<Rat> out(n);
  const Rat beta = Rat(1) - alpha;
  for (std::size_t t = 0; t < n; ++t) {
    out[t] = alpha * x.at_or_zero(t) + beta * y.at_or_zero(t);
  }
  return PayoffStream(std::move(out));
}

PayoffStream scale(const Rat& factor, const PayoffStream& x) {
  if (factor < 0) throw std::invalid_argument("scale factor must be nonnegative");
  std::vector<Rat> out(x.length());
  for (std::size_t t = 0; t < x.length(); ++t) out[t] = factor * x[t];
  return PayoffStream(std::move(out));
}

}  // namespace rdisc
