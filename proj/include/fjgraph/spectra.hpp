#pragma once

// Spectral analysis of permutahedra FJ(n,1).
//
// Under S-bar the adjacency matrix of FJ(n,1) splits into n x n blocks of
// size (n-1)!, each the adjacency matrix of a regular graph. The block
// regularities form the tridiagonal regularity matrix M(n); lifting a vector
// of R^n to R^{n!} by repeating coordinate i over block i intertwines M and A,
//   A * lift(v) = lift(M * v),
// so every eigenvalue of M(n) is an eigenvalue of FJ(n,1).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fjgraph/block_structure.hpp"
#include "fjgraph/errors.hpp"
#include "fjgraph/flag_graph.hpp"
#include "fjgraph/limits.hpp"
#include "fjgraph/ordering.hpp"

namespace fj {

struct Tolerances {
  double eig = 1e-12;    // eigensolver convergence (off-diagonal Frobenius norm)
  double match = 1e-8;   // eigenvalue matching in subset checks
  double merge = 1e-7;   // eigenvalues closer than this count as one distinct value
};

/// Dense square real matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  template <BinaryMatrix M>
  static DenseMatrix from_binary(const M& m) {
    DenseMatrix out(m.order());
    for (std::size_t r = 0; r < out.order_; ++r)
      for (std::size_t c = 0; c < out.order_; ++c) out(r, c) = m(r, c) ? 1.0 : 0.0;
    return out;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    DenseMatrix out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      detail::require(rows[r].size() == rows.size(), "matrix must be square");
      for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c];
    }
    return out;
  }

  std::size_t order() const { return order_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * order_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * order_ + c]; }

  double trace() const {
    double t = 0;
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
  }
  double frobenius_squared() const {
    double s = 0;
    for (double x : data_) s += x * x;
    return s;
  }

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

/// Distinct eigenvalues in descending order with multiplicities.
struct Spectrum {
  std::vector<double> values;
  std::vector<int> multiplicities;

  std::size_t distinct() const { return values.size(); }
  int order() const {
    int total = 0;
    for (int m : multiplicities) total += m;
    return total;
  }

  /// Merges sorted-descending eigenvalues whose consecutive gaps are within
  /// merge_tol; each cluster is represented by its mean.
  static Spectrum from_eigenvalues(std::vector<double> eigenvalues, double merge_tol) {
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());
    Spectrum s;
    std::size_t i = 0;
    while (i < eigenvalues.size()) {
      std::size_t j = i + 1;
      double sum = eigenvalues[i];
      while (j < eigenvalues.size() && eigenvalues[j - 1] - eigenvalues[j] <= merge_tol) {
        sum += eigenvalues[j];
        ++j;
      }
      s.values.push_back(sum / static_cast<double>(j - i));
      s.multiplicities.push_back(static_cast<int>(j - i));
      i = j;
    }
    return s;
  }
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// tol (scaled by the matrix norm when that exceeds 1). Returns all
/// eigenvalues, unsorted.
inline std::vector<double> jacobi_eigenvalues(DenseMatrix a, double tol, int max_sweeps = 100) {
  const std::size_t n = a.order();
  const double scale = std::max(1.0, std::sqrt(a.frobenius_squared()));
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
  };
  int sweep = 0;
  for (; sweep < max_sweeps && off_norm() >= tol * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          const double np = c * arp - s * arq;
          const double nq = s * arp + c * arq;
          a(r, p) = a(p, r) = np;
          a(r, q) = a(q, r) = nq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  if (off_norm() >= tol * scale) {
    throw std::runtime_error("Jacobi iteration did not converge in " + std::to_string(max_sweeps) +
                             " sweeps");
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
  return out;
}

inline Spectrum eig_symmetric(const DenseMatrix& a, const Tolerances& tol = {},
                              const Limits& limits = {}) {
  detail::require_cap(static_cast<long long>(a.order()), limits.eigen_cap, "eigensolver order");
  for (std::size_t r = 0; r < a.order(); ++r)
    for (std::size_t c = r + 1; c < a.order(); ++c)
      detail::require(std::abs(a(r, c) - a(c, r)) <= tol.match, "matrix is not symmetric");
  return Spectrum::from_eigenvalues(jacobi_eigenvalues(a, tol.eig), tol.merge);
}

/// The n x n block-regularity matrix of FJ(n,1): n-2 in the two corners,
/// n-3 on the interior diagonal, 1 on the off-diagonals. Entries are
/// addressed by 1-based block indices.
class RegularityMatrix {
 public:
  RegularityMatrix() = default;
  explicit RegularityMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {
    detail::require(n >= 2, "regularity matrix requires n >= 2");
  }

  int n() const { return n_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, int value) { entries_[index(i, j)] = value; }

  DenseMatrix dense() const {
    DenseMatrix d(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) d(i - 1, j - 1) = at(i, j);
    return d;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) out[i - 1].push_back(at(i, j));
    return out;
  }

  friend bool operator==(const RegularityMatrix&, const RegularityMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::out_of_range("regularity index");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_ = 0;
  std::vector<int> entries_;
};

inline RegularityMatrix regularity_matrix(int n) {
  RegularityMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    // n = 2 has no interior rows; its corners are n-2 = 0.
    m.set(i, i, (i == 1 || i == n) ? n - 2 : std::max(n - 3, 0));
    if (i < n) {
      m.set(i, i + 1, 1);
      m.set(i + 1, i, 1);
    }
  }
  return m;
}

/// Block regularities of A(FJ(n,1), S-bar) for an ordering S of S_{n-1}.
/// Throws TheoremViolation if any block is not regular.
inline RegularityMatrix regularity_matrix_from_blocks(int n, const VertexOrdering& s,
                                                      const Limits& limits = {}) {
  detail::require(n >= 2, "regularity matrix requires n >= 2");
  detail::require(s.n() == n - 1, "ordering must be over S_{n-1}");
  const auto a = adjacency_matrix(FlagGraphSpec::make(n, 1), concatenated_ordering(s),
                                  AdjacencyRoute::generators, limits);
  RegularityMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto r = block_regularity(block(a.bits, n - 1, i, j));
      if (!r) {
        throw TheoremViolation("block [" + std::to_string(i) + "," + std::to_string(j) +
                               "] of A(FJ(" + std::to_string(n) + ",1)) is not regular");
      }
      m.set(i, j, *r);
    }
  }
  return m;
}

/// Eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence bisection.
inline Spectrum eig_tridiagonal(const RegularityMatrix& m, const Tolerances& tol = {}) {
  const int n = m.n();
  std::vector<double> diag(static_cast<std::size_t>(n)), off(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i <= n; ++i) {
    diag[i - 1] = m.at(i, i);
    if (i < n) off[i - 1] = m.at(i, i + 1);
  }
  // Number of eigenvalues strictly less than x.
  auto count_below = [&](double x) {
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
      const double e2 = i > 0 ? off[i - 1] * off[i - 1] : 0.0;
      q = diag[i] - x - (i > 0 ? e2 / q : 0.0);
      if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(x) + 1.0);
      if (q < 0) ++count;
    }
    return count;
  };
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (int i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  lo -= 1.0;
  hi += 1.0;
  std::vector<double> eigenvalues;
  for (int idx = 0; idx < n; ++idx) {
    // The idx-th smallest eigenvalue lies where count_below crosses idx+1.
    double a = lo, b = hi;
    while (b - a > tol.eig * 1e-6 * std::max(1.0, std::abs(a) + std::abs(b))) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_below(mid) > idx) b = mid;
      else a = mid;
    }
    eigenvalues.push_back(0.5 * (a + b));
  }
  return Spectrum::from_eigenvalues(std::move(eigenvalues), tol.merge);
}

/// A vector of R^{n!} that is constant on each block of (n-1)! coordinates.
struct LiftedVector {
  int n = 0;
  std::vector<double> coords;
};

/// phi(v) = sum_i v_i s_i, where s_i indicates block i of (n-1)! coordinates.
inline LiftedVector lift_vector(const std::vector<double>& v, int n) {
  detail::require(n >= 1 && n <= kMaxPermutationSize, "n out of range");
  detail::require(v.size() == static_cast<std::size_t>(n), "vector length must equal n");
  const auto width = factorial(n - 1);
  LiftedVector out{n, std::vector<double>(factorial(n), 0.0)};
  for (int i = 0; i < n; ++i)
    for (std::uint64_t t = 0; t < width; ++t) out.coords[i * width + t] = v[i];
  return out;
}

namespace detail {

// Checks A * s_i = sum_j M(j,i) s_j over the integers, where s_i has ones at
// (i-1)*(n-1)! + t for t in [0, indicator_width). With indicator_width =
// (n-1)! the s_i are the block indicators.
inline bool intertwining_holds(const BitMatrix& a, const RegularityMatrix& m, int n,
                               std::uint64_t indicator_width) {
  const auto block_size = factorial(n - 1);
  auto indicator = [&](int i) {
    std::vector<std::int64_t> s(a.order(), 0);
    for (std::uint64_t t = 0; t < indicator_width; ++t) s[(i - 1) * block_size + t] = 1;
    return s;
  };
  for (int i = 1; i <= n; ++i) {
    const auto s = indicator(i);
    std::vector<std::int64_t> lhs(a.order(), 0);
    for (std::size_t r = 0; r < a.order(); ++r)
      for (std::size_t c = 0; c < a.order(); ++c)
        if (a(r, c)) lhs[r] += s[c];
    std::vector<std::int64_t> rhs(a.order(), 0);
    for (int j = 1; j <= n; ++j) {
      const auto sj = indicator(j);
      for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] += m.at(j, i) * sj[r];
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace detail

/// Exact check of A * lift(e_i) = lift(M e_i) for every i, with A built over
/// S-bar from an ordering S of S_{n-1}.
inline bool verify_intertwining(int n, const VertexOrdering& s, const Limits& limits = {}) {
  detail::require(n >= 2, "intertwining requires n >= 2");
  detail::require(s.n() == n - 1, "ordering must be over S_{n-1}");
  const auto a = adjacency_matrix(FlagGraphSpec::make(n, 1), concatenated_ordering(s),
                                  AdjacencyRoute::generators, limits);
  return detail::intertwining_holds(a.bits, regularity_matrix(n), n, factorial(n - 1));
}

struct SubsetMatch {
  bool ok = true;
  std::vector<std::pair<std::size_t, std::size_t>> matching;  // small index -> big index
  std::optional<double> unmatched;                             // first value with no partner
};

/// Every distinct value of `small` must lie within tol of some value of `big`.
inline SubsetMatch spectrum_subset_check(const Spectrum& small, const Spectrum& big, double tol) {
  SubsetMatch result;
  for (std::size_t i = 0; i < small.values.size(); ++i) {
    std::optional<std::size_t> best;
    double best_gap = tol;
    for (std::size_t j = 0; j < big.values.size(); ++j) {
      const double gap = std::abs(small.values[i] - big.values[j]);
      if (gap <= best_gap) {
        best_gap = gap;
        best = j;
      }
    }
    if (!best) {
      result.ok = false;
      result.unmatched = small.values[i];
      return result;
    }
    result.matching.emplace_back(i, *best);
  }
  return result;
}

/// Full spectrum of A(FJ(n,1)) under the lexicographic ordering.
inline Spectrum permutahedron_spectrum(int n, const Tolerances& tol = {}, const Limits& limits = {}) {
  detail::require_cap(static_cast<long long>(factorial(n)), limits.eigen_cap, "eigensolver order");
  const auto a = adjacency_matrix(FlagGraphSpec::make(n, 1), enumerate_permutations(n, limits),
                                  AdjacencyRoute::generators, limits);
  return eig_symmetric(DenseMatrix::from_binary(a.bits), tol, limits);
}

struct SecondLargestEvidence {
  int n = 0;
  bool holds = false;
  double second_largest = 0.0;            // second-largest distinct eigenvalue of FJ(n,1)
  std::optional<double> matching_m_value;  // eigenvalue of M(n) within tol, if any
};

/// Whether the second-largest distinct eigenvalue of FJ(n,1) is an
/// eigenvalue of M(n). Observational only.
inline SecondLargestEvidence conjecture_second_largest(int n, const Tolerances& tol = {},
                                                       const Limits& limits = {}) {
  detail::require(n >= 2, "conjecture check requires n >= 2");
  const auto full = permutahedron_spectrum(n, tol, limits);
  const auto m = eig_tridiagonal(regularity_matrix(n), tol);
  SecondLargestEvidence ev{n, false, full.values.size() > 1 ? full.values[1] : full.values[0], {}};
  for (double x : m.values) {
    if (std::abs(x - ev.second_largest) <= tol.match) {
      ev.holds = true;
      ev.matching_m_value = x;
      break;
    }
  }
  return ev;
}

}  // namespace fj
