#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fjgraph/errors.hpp"
#include "fjgraph/limits.hpp"
#include "fjgraph/permutation.hpp"

namespace fj {

/// An explicit sequence of all n! permutations of [n]. Immutable; keeps a
/// lexicographic-rank -> position table so lookups are O(n).
class VertexOrdering {
 public:
  explicit VertexOrdering(std::vector<Permutation> perms) : perms_(std::move(perms)) {
    detail::require(!perms_.empty(), "empty vertex ordering");
    n_ = perms_.front().size();
    detail::require(perms_.size() == factorial(n_),
                    "ordering must contain exactly n! permutations");
    position_of_rank_.assign(perms_.size(), kUnset);
    for (std::size_t pos = 0; pos < perms_.size(); ++pos) {
      detail::require(perms_[pos].size() == n_, "ordering mixes permutation sizes");
      const auto r = lex_rank(perms_[pos]);
      detail::require(position_of_rank_[r] == kUnset,
                      "duplicate permutation in ordering: " + perms_[pos].to_string());
      position_of_rank_[r] = static_cast<std::uint32_t>(pos);
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  const Permutation& operator[](std::size_t pos) const { return perms_[pos]; }
  const std::vector<Permutation>& perms() const { return perms_; }
  auto begin() const { return perms_.begin(); }
  auto end() const { return perms_.end(); }

  std::uint32_t position_of(const Permutation& u) const {
    detail::require(u.size() == n_, "permutation size does not match ordering");
    return position_of_rank_[lex_rank(u)];
  }

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
    return a.perms_ == b.perms_;
  }

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffU;
  std::vector<Permutation> perms_;
  std::vector<std::uint32_t> position_of_rank_;
  int n_ = 0;
};

/// All permutations of [n] in lexicographic order.
inline VertexOrdering enumerate_permutations(int n, const Limits& limits = {}) {
  detail::require(n >= 1, "n must be positive");
  detail::require_cap(n, std::min(limits.enumeration_cap, kMaxPermutationSize), "enumeration n");
  std::vector<int> current(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) current[i] = i + 1;
  std::vector<Permutation> perms;
  perms.reserve(factorial(n));
  do {
    perms.emplace_back(std::span<const int>(current));
  } while (std::next_permutation(current.begin(), current.end()));
  return VertexOrdering(std::move(perms));
}

}  // namespace fj
