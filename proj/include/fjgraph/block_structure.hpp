#pragma once

// Adjacency matrices of FJ(n,k) with respect to explicit vertex orderings,
// the concatenated ordering S-bar = phi_1(S), ..., phi_{n+1}(S), and
// block-level verification of the recursive structure of A(FJ(n+1,k), S-bar).
//
// Block indices are 1-based, matching the [i,j] block notation; entries
// inside a matrix or block are 0-based.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "fjgraph/errors.hpp"
#include "fjgraph/flag_graph.hpp"
#include "fjgraph/limits.hpp"
#include "fjgraph/ordering.hpp"
#include "fjgraph/permutation.hpp"

namespace fj {

/// Anything indexable as a square 0/1 matrix.
template <class M>
concept BinaryMatrix = requires(const M& m, std::size_t r, std::size_t c) {
  { m.order() } -> std::convertible_to<std::size_t>;
  { m(r, c) } -> std::convertible_to<bool>;
};

/// Square 0/1 matrix stored as packed 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t order)
      : order_(order), words_(words_for(order)), bits_(order * words_for(order), 0) {}

  static BitMatrix identity(std::size_t order) {
    BitMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.set(i, i);
    return m;
  }

  template <BinaryMatrix M>
  static BitMatrix copy_of(const M& other) {
    BitMatrix m(other.order());
    for (std::size_t r = 0; r < m.order_; ++r)
      for (std::size_t c = 0; c < m.order_; ++c)
        if (other(r, c)) m.set(r, c);
    return m;
  }

  std::size_t order() const { return order_; }

  bool operator()(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    auto& word = bits_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    word = value ? (word | mask) : (word & ~mask);
  }

  std::size_t row_sum(std::size_t r) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(bits_[r * words_ + w]);
    return total;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  static std::size_t words_for(std::size_t order) { return (order + 63) / 64; }

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A(G, S): entry (i, j) is 1 iff S[i] and S[j] are adjacent.
struct AdjacencyMatrix {
  FlagGraphSpec spec;
  VertexOrdering ordering;
  BitMatrix bits;

  std::size_t order() const { return bits.order(); }
  bool operator()(std::size_t r, std::size_t c) const { return bits(r, c); }
};

/// Read-only (i, j) block of a matrix partitioned into equal square blocks.
template <BinaryMatrix Parent>
class BlockView {
 public:
  BlockView(const Parent& parent, std::size_t block_size, int i, int j)
      : parent_(&parent), block_size_(block_size), i_(i), j_(j) {
    detail::require(block_size > 0 && parent.order() % block_size == 0,
                    "block size does not divide matrix order");
    const auto blocks = static_cast<int>(parent.order() / block_size);
    if (i < 1 || j < 1 || i > blocks || j > blocks) {
      throw std::out_of_range("block index out of range");
    }
  }

  std::size_t order() const { return block_size_; }
  int row_block() const { return i_; }
  int col_block() const { return j_; }
  bool operator()(std::size_t r, std::size_t c) const {
    return (*parent_)((i_ - 1) * block_size_ + r, (j_ - 1) * block_size_ + c);
  }

 private:
  const Parent* parent_;
  std::size_t block_size_;
  int i_;
  int j_;
};

/// Transposed view; used to compare block(i,j) against block(j,i).
template <BinaryMatrix M>
struct Transposed {
  const M& inner;
  std::size_t order() const { return inner.order(); }
  bool operator()(std::size_t r, std::size_t c) const { return inner(c, r); }
};

struct Coordinate {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

/// First (row-major) entry where a and b differ, or nullopt if equal.
template <BinaryMatrix A, BinaryMatrix B>
std::optional<Coordinate> first_mismatch(const A& a, const B& b) {
  detail::require(a.order() == b.order(), "matrix orders differ");
  for (std::size_t r = 0; r < a.order(); ++r)
    for (std::size_t c = 0; c < a.order(); ++c)
      if (a(r, c) != b(r, c)) return Coordinate{r, c};
  return std::nullopt;
}

/// Common row/column sum if every row and every column has the same sum.
template <BinaryMatrix M>
std::optional<int> block_regularity(const M& m) {
  const std::size_t order = m.order();
  if (order == 0) return 0;
  std::vector<int> col_sums(order, 0);
  std::optional<int> common;
  for (std::size_t r = 0; r < order; ++r) {
    int row_sum = 0;
    for (std::size_t c = 0; c < order; ++c) {
      if (m(r, c)) {
        ++row_sum;
        ++col_sums[c];
      }
    }
    if (!common) common = row_sum;
    if (row_sum != *common) return std::nullopt;
  }
  for (int s : col_sums)
    if (s != *common) return std::nullopt;
  return common;
}

/// S-bar: phi_1(S), phi_2(S), ..., phi_{n+1}(S) concatenated.
inline VertexOrdering concatenated_ordering(const VertexOrdering& s) {
  const int n = s.n();
  std::vector<Permutation> out;
  out.reserve(s.size() * static_cast<std::size_t>(n + 1));
  for (int b = 1; b <= n + 1; ++b)
    for (const auto& u : s) out.push_back(insertion(u, b));
  return VertexOrdering(std::move(out));
}

enum class AdjacencyRoute {
  generators,  // right-multiplication by the Cayley generators
  predicate,   // prefix-mismatch test on every pair
};

/// Adjacency matrix w.r.t. S of the Cayley graph on S_n with the given
/// connection set. The set must be inverse-closed for the result to be
/// symmetric; the identity is skipped (no loops).
inline BitMatrix cayley_matrix(const VertexOrdering& s, const std::vector<Permutation>& connection) {
  BitMatrix m(s.size());
  const auto identity = Permutation::identity(s.n());
  for (std::size_t row = 0; row < s.size(); ++row) {
    for (const auto& g : connection) {
      if (g == identity) continue;
      m.set(row, s.position_of(compose(s[row], g)));
    }
  }
  return m;
}

/// The (i, i+1)-transposition of S_n, as a one-line permutation.
inline Permutation neighboring_transposition(int n, int i) {
  detail::require(i >= 1 && i < n, "transposition index out of range");
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) values[t] = t + 1;
  std::swap(values[i - 1], values[i]);
  return Permutation(std::span<const int>(values));
}

inline AdjacencyMatrix adjacency_matrix(const FlagGraphSpec& spec, const VertexOrdering& s,
                                        AdjacencyRoute route = AdjacencyRoute::generators,
                                        const Limits& limits = {}) {
  detail::require(s.n() == spec.n, "ordering is not over S_n for this spec");
  detail::require_cap(spec.n, limits.matrix_cap, "matrix n");
  AdjacencyMatrix a{spec, s, BitMatrix(s.size())};
  if (spec.k == 0) return a;
  if (route == AdjacencyRoute::generators) {
    a.bits = cayley_matrix(s, generators(spec.n, spec.k).generators);
  } else {
    for (std::size_t r = 0; r < s.size(); ++r)
      for (std::size_t c = r + 1; c < s.size(); ++c)
        if (adjacent(spec, s[r], s[c])) {
          a.bits.set(r, c);
          a.bits.set(c, r);
        }
  }
  return a;
}

/// The (i, j) block, i, j in [1, n+1], of a matrix built over S-bar from an
/// ordering of S_n.
template <BinaryMatrix M>
BlockView<M> block(const M& a, int n, int i, int j) {
  return BlockView<M>(a, factorial(n), i, j);
}

// --- verification reports -------------------------------------------------

struct BlockWitness {
  int block_i = 0;  // 1-based
  int block_j = 0;  // 1-based
  Coordinate entry;  // 0-based inside the block
};

struct AssertionResult {
  std::string id;
  std::string description;
  bool passed = true;
  int blocks_checked = 0;
  std::optional<BlockWitness> witness;
};

struct BlockReport {
  std::string check;  // "recursive" or "permutahedron"
  int n = 0;
  int k = 0;
  std::vector<AssertionResult> assertions;
  std::vector<std::string> notes;

  bool passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const AssertionResult& a) { return a.passed; });
  }
};

namespace detail {

template <BinaryMatrix Expected>
void expect_block(AssertionResult& result, const BitMatrix& parent, int n, int i, int j,
                  const Expected& expected) {
  ++result.blocks_checked;
  if (!result.passed) return;
  if (auto at = first_mismatch(block(parent, n, i, j), expected)) {
    result.passed = false;
    result.witness = BlockWitness{i, j, *at};
  }
}

inline BitMatrix flag_graph_matrix(int n, int k, const VertexOrdering& s, const Limits& limits) {
  return adjacency_matrix(FlagGraphSpec::make(n, k), s, AdjacencyRoute::generators, limits).bits;
}

}  // namespace detail

/// Checks the three block identities of A(FJ(n+1,k), S-bar):
///   far      [i,j] = 0 for |i-j| > k
///   corners  [1,1] = [n+1,n+1] = A(FJ(n,k), S)
///   flanks   [i,j] = A(FJ(n,k-1), S) for |i-j| = 1  (identity when k = 1)
/// The parent matrix is built by the pairwise predicate; references are built
/// from generators.
inline BlockReport verify_recursive_blocks(int n, int k, const VertexOrdering& s,
                                           const Limits& limits = {}) {
  FlagGraphSpec::make(n, k);
  detail::require(k >= 1, "recursive block check requires k >= 1");
  detail::require(s.n() == n, "ordering is not over S_n");
  detail::require_cap(n + 1, limits.matrix_cap, "matrix n");

  const auto parent = adjacency_matrix(FlagGraphSpec::make(n + 1, k), concatenated_ordering(s),
                                       AdjacencyRoute::predicate, limits);
  const auto corner = detail::flag_graph_matrix(n, k, s, limits);
  const auto flank = k == 1 ? BitMatrix::identity(s.size())
                            : detail::flag_graph_matrix(n, k - 1, s, limits);
  const BitMatrix zero(s.size());

  BlockReport report{"recursive", n, k, {}, {}};
  AssertionResult far{"zero_far_blocks", "[i,j] is zero for |i-j| > k", true, 0, {}};
  AssertionResult corners{"corner_blocks", "[1,1] = [n+1,n+1] = A(FJ(n,k),S)", true, 0, {}};
  AssertionResult flanks{"flank_blocks", "[i,j] = A(FJ(n,k-1),S) for |i-j| = 1", true, 0, {}};
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= n + 1; ++j) {
      const int gap = std::abs(i - j);
      if (gap > k) detail::expect_block(far, parent.bits, n, i, j, zero);
      if (gap == 1) detail::expect_block(flanks, parent.bits, n, i, j, flank);
    }
  }
  detail::expect_block(corners, parent.bits, n, 1, 1, corner);
  detail::expect_block(corners, parent.bits, n, n + 1, n + 1, corner);
  report.assertions = {far, corners, flanks};
  if (k == 1) report.notes.emplace_back(kTrivialGraphConvention);
  return report;
}

/// Checks A(FJ(n+1,1), S-bar):
///   block tri-diagonal with identity flanks,
///   corners equal A(FJ(n,1), S),
///   interior diagonal block i equals the Cayley graph on S_n generated by
///   all neighboring transpositions except the (i-1,i)-transposition,
///   corners have regularity n-1 and interior diagonal blocks n-2.
inline BlockReport verify_permutahedron_blocks(int n, const VertexOrdering& s,
                                               const Limits& limits = {}) {
  detail::require(n >= 2, "permutahedron block check requires n >= 2");
  detail::require(s.n() == n, "ordering is not over S_n");
  detail::require_cap(n + 1, limits.matrix_cap, "matrix n");

  const auto parent = adjacency_matrix(FlagGraphSpec::make(n + 1, 1), concatenated_ordering(s),
                                       AdjacencyRoute::predicate, limits);
  const auto corner = detail::flag_graph_matrix(n, 1, s, limits);
  const auto identity = BitMatrix::identity(s.size());
  const BitMatrix zero(s.size());

  BlockReport report{"permutahedron", n, 1, {}, {}};
  AssertionResult far{"tridiagonal", "[i,j] is zero for |i-j| > 1", true, 0, {}};
  AssertionResult flanks{"identity_flanks", "[i,j] is the identity for |i-j| = 1", true, 0, {}};
  AssertionResult corners{"corner_blocks", "[1,1] = [n+1,n+1] = A(FJ(n,1),S)", true, 0, {}};
  AssertionResult interior{"interior_blocks",
                           "[i,i] = Cayley graph without the (i-1,i)-transposition, 1 < i < n+1",
                           true, 0, {}};
  AssertionResult regularity{"diagonal_regularity",
                             "corner blocks have regularity n-1, interior blocks n-2", true, 0, {}};

  for (int i = 1; i <= n + 1; ++i) {
    for (int j = 1; j <= n + 1; ++j) {
      const int gap = std::abs(i - j);
      if (gap > 1) detail::expect_block(far, parent.bits, n, i, j, zero);
      if (gap == 1) detail::expect_block(flanks, parent.bits, n, i, j, identity);
    }
  }
  detail::expect_block(corners, parent.bits, n, 1, 1, corner);
  detail::expect_block(corners, parent.bits, n, n + 1, n + 1, corner);

  for (int i = 2; i <= n; ++i) {
    std::vector<Permutation> connection;
    for (int t = 1; t < n; ++t)
      if (t != i - 1) connection.push_back(neighboring_transposition(n, t));
    detail::expect_block(interior, parent.bits, n, i, i, cayley_matrix(s, connection));
  }

  for (int i = 1; i <= n + 1; ++i) {
    const int expected = (i == 1 || i == n + 1) ? n - 1 : n - 2;
    ++regularity.blocks_checked;
    const auto r = block_regularity(block(parent.bits, n, i, i));
    if (regularity.passed && r != expected) {
      regularity.passed = false;
      regularity.witness = BlockWitness{i, i, {}};
    }
  }

  report.assertions = {far, flanks, corners, interior, regularity};
  report.notes.emplace_back(kTrivialGraphConvention);
  if (n == 2) {
    report.notes.emplace_back(
        "n=2: the interior diagonal block is the 2x2 zero matrix (regularity 0)");
  }
  return report;
}

}  // namespace fj
