#pragma once

// Permutations of [n] in one-line notation, viewed as full flags of subsets.
//
// A permutation u = (u_1, ..., u_n) encodes the flag
//   {u_1} < {u_1, u_2} < ... < {u_1, ..., u_n} = [n]
// whose i-th member is the prefix set u(i). Positions and flag indices are
// 1-based throughout the public API; entries() exposes the raw 0-based storage.

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fjgraph/errors.hpp"

namespace fj {

/// Largest n accepted by permutation-level operations.
inline constexpr int kMaxPermutationSize = 12;

/// A subset of [n], bit v set iff v is a member.
using PrefixSet = std::bitset<64>;

inline constexpr std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline constexpr std::uint64_t binomial2(int n) {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

class Permutation {
 public:
  using value_type = std::uint8_t;

  /// The trivial permutation (1).
  Permutation() : size_(1) { values_[0] = 1; }

  explicit Permutation(std::span<const int> one_line) { assign(one_line); }
  Permutation(std::initializer_list<int> one_line)
      : Permutation(std::span<const int>(one_line.begin(), one_line.size())) {}

  static Permutation identity(int n) {
    detail::require(n >= 1 && n <= kMaxPermutationSize,
                    "permutation size out of range: " + std::to_string(n));
    Permutation p;
    p.size_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.values_[i] = static_cast<value_type>(i + 1);
    return p;
  }

  static Permutation reversal(int n) {
    Permutation p = identity(n);
    std::reverse(p.values_.begin(), p.values_.begin() + n);
    return p;
  }

  /// Accepts "2314" (one digit per entry) or "10,2,3,...".
  static Permutation parse(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') == std::string_view::npos) {
      for (char c : text) {
        detail::require(c >= '1' && c <= '9',
                        "invalid permutation digit in '" + std::string(text) + "'");
        values.push_back(c - '0');
      }
    } else {
      std::size_t start = 0;
      while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view field = text.substr(start, end - start);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        detail::require(ec == std::errc() && ptr == field.data() + field.size() && !field.empty(),
                        "invalid permutation entry in '" + std::string(text) + "'");
        values.push_back(v);
        start = end + 1;
      }
    }
    return Permutation(std::span<const int>(values));
  }

  int size() const { return size_; }

  /// u_i for 1 <= i <= n.
  int value(int position) const {
    detail::require(position >= 1 && position <= size_, "position out of range");
    return values_[position - 1];
  }

  std::span<const value_type> entries() const { return {values_.data(), size_}; }

  Permutation inverse() const {
    Permutation inv = *this;
    for (int i = 0; i < size_; ++i) inv.values_[values_[i] - 1] = static_cast<value_type>(i + 1);
    return inv;
  }

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const {
    std::string out;
    for (int i = 0; i < size_; ++i) {
      if (size_ > 9 && i > 0) out += ',';
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.size_ == b.size_ && std::equal(a.values_.begin(), a.values_.begin() + a.size_,
                                            b.values_.begin());
  }

  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.begin() + a.size_,
                                                  b.values_.begin(), b.values_.begin() + b.size_);
  }

 private:
  friend class PermutationBuilder;

  void assign(std::span<const int> one_line) {
    const auto n = static_cast<int>(one_line.size());
    detail::require(n >= 1 && n <= kMaxPermutationSize,
                    "permutation size out of range: " + std::to_string(n));
    std::uint64_t seen = 0;
    for (int i = 0; i < n; ++i) {
      const int v = one_line[i];
      detail::require(v >= 1 && v <= n && !(seen >> v & 1U),
                      "not a permutation of [" + std::to_string(n) + "]");
      seen |= std::uint64_t{1} << v;
      values_[i] = static_cast<value_type>(v);
    }
    size_ = static_cast<std::uint8_t>(n);
  }

  std::array<value_type, kMaxPermutationSize> values_{};
  std::uint8_t size_ = 0;
};

/// Unchecked construction for hot loops whose output is a permutation by
/// construction (composition, insertion, unranking).
class PermutationBuilder {
 public:
  explicit PermutationBuilder(int n) { p_.size_ = static_cast<std::uint8_t>(n); }
  void set(int index0, int value) { p_.values_[index0] = static_cast<Permutation::value_type>(value); }
  Permutation build() const { return p_; }

 private:
  Permutation p_;
};

namespace detail {
inline void require_same_size(const Permutation& u, const Permutation& v) {
  require(u.size() == v.size(), "permutation size mismatch: " + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()));
}
}  // namespace detail

/// u(i) = {u_1, ..., u_i}; u(0) is empty.
inline PrefixSet prefix_set(const Permutation& u, int i) {
  if (i < 0 || i > u.size()) throw std::out_of_range("prefix index out of range");
  PrefixSet s;
  for (int j = 0; j < i; ++j) s.set(u.entries()[j]);
  return s;
}

/// Number of flag indices i in [n] with u(i) != v(i).
inline int prefix_mismatch_count(const Permutation& u, const Permutation& v) {
  detail::require_same_size(u, v);
  std::uint64_t su = 0, sv = 0;
  int mismatches = 0;
  const auto a = u.entries();
  const auto b = v.entries();
  for (std::size_t i = 0; i < a.size(); ++i) {
    su |= std::uint64_t{1} << a[i];
    sv |= std::uint64_t{1} << b[i];
    mismatches += (su != sv);
  }
  return mismatches;
}

namespace detail {
// Inversion count by merge sort.
inline std::uint64_t count_inversions(std::span<int> values, std::span<int> scratch) {
  if (values.size() < 2) return 0;
  const std::size_t mid = values.size() / 2;
  std::uint64_t count = count_inversions(values.first(mid), scratch.first(mid)) +
                        count_inversions(values.subspan(mid), scratch.subspan(mid));
  std::size_t i = 0, j = mid, out = 0;
  while (i < mid && j < values.size()) {
    if (values[j] < values[i]) {
      count += mid - i;
      scratch[out++] = values[j++];
    } else {
      scratch[out++] = values[i++];
    }
  }
  while (i < mid) scratch[out++] = values[i++];
  while (j < values.size()) scratch[out++] = values[j++];
  std::copy(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(out), values.begin());
  return count;
}
}  // namespace detail

/// Disorder f(u): the number of index pairs i < j with u_i > u_j.
inline int disorder(const Permutation& u) {
  std::array<int, kMaxPermutationSize> values{}, scratch{};
  const int n = u.size();
  std::copy(u.entries().begin(), u.entries().end(), values.begin());
  return static_cast<int>(detail::count_inversions(std::span<int>(values.data(), n),
                                                   std::span<int>(scratch.data(), n)));
}

/// Right action: result_j = u_{g(j)}.
inline Permutation compose(const Permutation& u, const Permutation& g) {
  detail::require_same_size(u, g);
  PermutationBuilder out(u.size());
  const auto a = u.entries();
  const auto b = g.entries();
  for (std::size_t j = 0; j < a.size(); ++j) out.set(static_cast<int>(j), a[b[j] - 1]);
  return out.build();
}

/// Minimal number of neighboring transpositions turning u into v.
inline int kendall_distance(const Permutation& u, const Permutation& v) {
  detail::require_same_size(u, v);
  // w_j = position in u of v_j.
  return disorder(compose(u.inverse(), v));
}

/// phi_i: inserts n+1 at position i (1 <= i <= n+1).
inline Permutation insertion(const Permutation& u, int i) {
  const int n = u.size();
  if (i < 1 || i > n + 1) throw std::out_of_range("insertion index out of range");
  detail::require(n + 1 <= kMaxPermutationSize, "insertion exceeds permutation size cap");
  PermutationBuilder out(n + 1);
  const auto a = u.entries();
  int dst = 0;
  for (int src = 0; src < n; ++src) {
    if (dst == i - 1) out.set(dst++, n + 1);
    out.set(dst++, a[src]);
  }
  if (i == n + 1) out.set(n, n + 1);
  return out.build();
}

/// True iff no proper prefix {p_1..p_i}, 1 <= i < n, equals {1..i}.
inline bool is_irreducible(const Permutation& p) {
  int running_max = 0;
  const auto a = p.entries();
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    running_max = std::max<int>(running_max, a[i]);
    if (running_max == static_cast<int>(i + 1)) return false;
  }
  return true;
}

/// Ascending flag indices i in [n] with u(i) == v(i). The last is always n,
/// and consecutive indices delimit the irreducible blocks relating u to v.
struct BlockDecomposition {
  std::vector<int> boundaries;

  int block_count() const { return static_cast<int>(boundaries.size()); }

  /// 1-based inclusive [first, last] position range of each block.
  std::vector<std::pair<int, int>> windows() const {
    std::vector<std::pair<int, int>> out;
    int start = 1;
    for (int b : boundaries) {
      out.emplace_back(start, b);
      start = b + 1;
    }
    return out;
  }

  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

inline BlockDecomposition block_boundaries(const Permutation& u, const Permutation& v) {
  detail::require_same_size(u, v);
  BlockDecomposition out;
  std::uint64_t su = 0, sv = 0;
  const auto a = u.entries();
  const auto b = v.entries();
  for (std::size_t i = 0; i < a.size(); ++i) {
    su |= std::uint64_t{1} << a[i];
    sv |= std::uint64_t{1} << b[i];
    if (su == sv) out.boundaries.push_back(static_cast<int>(i + 1));
  }
  return out;
}

/// Pattern of v[first..last] relative to u[first..last]: entry t is the
/// position, within u's window, of v's t-th window element. Requires the two
/// windows to hold the same values.
inline Permutation relative_window(const Permutation& u, const Permutation& v, int first, int last) {
  std::vector<int> pattern;
  for (int t = first; t <= last; ++t) {
    const int value = v.value(t);
    int pos = 0;
    for (int s = first; s <= last; ++s) {
      if (u.value(s) == value) pos = s - first + 1;
    }
    detail::require(pos != 0, "windows do not hold the same values");
    pattern.push_back(pos);
  }
  return Permutation(std::span<const int>(pattern));
}

/// Lexicographic rank in [0, n!) via the Lehmer code.
inline std::uint64_t lex_rank(const Permutation& u) {
  const int n = u.size();
  std::uint64_t unused = (std::uint64_t{1} << (n + 1)) - 2;  // bits 1..n
  std::uint64_t rank = 0;
  const auto a = u.entries();
  for (int i = 0; i < n; ++i) {
    const std::uint64_t below = unused & ((std::uint64_t{1} << a[i]) - 1);
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(std::popcount(below));
    unused &= ~(std::uint64_t{1} << a[i]);
  }
  return rank;
}

inline Permutation lex_unrank(int n, std::uint64_t rank) {
  detail::require(n >= 1 && n <= kMaxPermutationSize, "permutation size out of range");
  detail::require(rank < factorial(n), "rank out of range");
  std::array<int, kMaxPermutationSize> digits{};
  for (int i = n - 1; i >= 0; --i) {
    const auto radix = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % radix);
    rank /= radix;
  }
  std::uint64_t unused = (std::uint64_t{1} << (n + 1)) - 2;
  PermutationBuilder out(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t bits = unused;
    for (int skip = 0; skip < digits[i]; ++skip) bits &= bits - 1;
    const int value = std::countr_zero(bits);
    out.set(i, value);
    unused &= ~(std::uint64_t{1} << value);
  }
  return out.build();
}

}  // namespace fj
