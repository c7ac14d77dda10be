#include "rdisc/menu.hpp"

#include <stdexcept>

namespace rdisc {

Menu::Menu(std::vector<PayoffStream> projects) : projects_(std::move(projects)) {
  if (projects_.empty()) throw std::invalid_argument("menu must be nonempty");
  for (std::size_t i = 0; i < projects_.size(); ++i) {
    for (std::size_t j = i + 1; j < projects_.size(); ++j) {
      if (projects_[i] == projects_[j]) {
        throw std::invalid_argument("menu projects must be distinct");
      }
    }
  }
}

std::optional<std::size_t> Menu::index_of(const PayoffStream& p) const {
  for (std::size_t i = 0; i < projects_.size(); ++i) {
    if (projects_[i] == p) return i;
  }
  return std::nullopt;
}

Menu Menu::with(PayoffStream extra) const {
  std::vector<PayoffStream> out = projects_;
  out.push_back(std::move(extra));
  return Menu(std::move(out));
}

}  // namespace rdisc
