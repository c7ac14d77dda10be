#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rdisc/stream.hpp"

namespace rdisc {

/// Finite set of distinct projects; duplicates (after canonicalization) are
/// rejected at construction. Order is the given insertion order.
class Menu {
 public:
  explicit Menu(std::vector<PayoffStream> projects);

  std::size_t size() const { return projects_.size(); }
  const PayoffStream& project(std::size_t i) const { return projects_[i]; }
  const std::vector<PayoffStream>& projects() const { return projects_; }

  std::optional<std::size_t> index_of(const PayoffStream& p) const;

  /// Menu extended with one more project.
  Menu with(PayoffStream extra) const;

 private:
  std::vector<PayoffStream> projects_;
};

}  // namespace rdisc
