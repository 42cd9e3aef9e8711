#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdham/errors.hpp"
#include "qdham/metric.hpp"

namespace qdham {

struct SpectralEstimate {
  double rho = 0.0;
  std::vector<double> vector;  ///< unit 2-norm Perron vector
  double residual = 0.0;       ///< max |(Q x - rho x)_i|
  std::size_t iterations = 0;
};

struct PowerOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 100000;
};

/// Power iteration ran out of iterations; carries the best estimate so far.
class NoConvergence : public Error {
 public:
  explicit NoConvergence(SpectralEstimate best)
      : Error("power iteration did not converge: rho~" + std::to_string(best.rho) +
              " residual " + std::to_string(best.residual) + " after " +
              std::to_string(best.iterations) + " iterations"),
        best_(std::move(best)) {}
  const SpectralEstimate& best() const { return best_; }

 private:
  SpectralEstimate best_;
};

/// Dominant eigenpair of a dense nonnegative irreducible n x n matrix
/// (row-major) by power iteration from the all-ones vector. The eigenvalue
/// estimate is (x . Ax) / (x . x); iteration stops once the max-norm
/// residual of A x - rho x is within tolerance.
inline SpectralEstimate power_iteration(std::span<const double> a, std::size_t n,
                                        const PowerOptions& opts = {}) {
  SpectralEstimate est;
  if (n == 0) throw InvalidParameter("power_iteration: empty matrix");
  if (a.size() != n * n) throw InvalidParameter("power_iteration: matrix size mismatch");

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      const double* row = a.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    double xy = 0.0;
    double xx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      xy += x[i] * y[i];
      xx += x[i] * x[i];
    }
    const double rho = xy / xx;
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(y[i] - rho * x[i]));

    est.rho = rho;
    est.residual = residual;
    est.iterations = it;
    est.vector = x;
    if (residual <= opts.tolerance) return est;

    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      // Zero matrix: every vector is an eigenvector for 0.
      est.rho = 0.0;
      est.residual = 0.0;
      return est;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw NoConvergence(std::move(est));
}

/// rho_D(G): largest eigenvalue of Q_D with its Perron vector.
inline SpectralEstimate spectral_radius(const QDMatrix& q, const PowerOptions& opts = {}) {
  if (q.n == 1) return SpectralEstimate{0.0, {1.0}, 0.0, 0};
  std::vector<double> a(q.q.begin(), q.q.end());
  return power_iteration(a, q.n, opts);
}

/// Lower bound on rho_D for a connected bipartite graph of the given order:
/// 3n-4 for even n, (5n-8+sqrt(n^2+8))/2 for odd n.
inline double lower_bound_bipartite(std::size_t order) {
  if (order < 2) throw InvalidParameter("lower_bound_bipartite: order must be at least 2");
  const auto n = static_cast<double>(order);
  if (order % 2 == 0) return 3.0 * n - 4.0;
  return (5.0 * n - 8.0 + std::sqrt(n * n + 8.0)) / 2.0;
}

/// 4 sigma / n, attained exactly by transmission-regular graphs.
inline double lower_bound_sigma(const DistanceData& d) {
  return 4.0 * static_cast<double>(d.sigma) / static_cast<double>(d.n);
}

// ---------------------------------------------------------------------------
// Quotient matrices of distance-equitable partitions.

struct PartitionQuotient {
  std::vector<std::vector<std::size_t>> classes;
  std::size_t k = 0;
  std::vector<std::int64_t> matrix;  ///< row-major k x k

  std::int64_t at(std::size_t i, std::size_t j) const { return matrix[i * k + j]; }
};

class NonEquitablePartition : public Error {
 public:
  NonEquitablePartition(std::size_t class_i, std::size_t class_j, std::size_t u, std::size_t w)
      : Error("partition is not distance-equitable for classes (" + std::to_string(class_i) +
              ", " + std::to_string(class_j) + "): vertices " + std::to_string(u) + " and " +
              std::to_string(w) + " differ"),
        class_i_(class_i),
        class_j_(class_j),
        u_(u),
        w_(w) {}
  std::size_t class_i() const { return class_i_; }
  std::size_t class_j() const { return class_j_; }
  std::size_t first_witness() const { return u_; }
  std::size_t second_witness() const { return w_; }

 private:
  std::size_t class_i_, class_j_, u_, w_;
};

/// Entry (i, j) is Tr(u) [i == j] + sum of dist(u, v) over v in class j, for
/// any u in class i. Every u in a class must give the same row.
inline PartitionQuotient quotient_matrix(const DistanceData& d,
                                         std::vector<std::vector<std::size_t>> classes) {
  std::vector<int> owner(d.n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InvalidParameter("quotient_matrix: empty class");
    for (std::size_t v : classes[c]) {
      if (v >= d.n || owner[v] >= 0) {
        throw InvalidParameter("quotient_matrix: classes must partition the vertex set");
      }
      owner[v] = static_cast<int>(c);
    }
  }
  for (int o : owner)
    if (o < 0) throw InvalidParameter("quotient_matrix: classes must partition the vertex set");

  const std::size_t k = classes.size();
  auto row_of = [&](std::size_t u, std::size_t i) {
    std::vector<std::int64_t> row(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t s = 0;
      for (std::size_t v : classes[j]) s += d.at(u, v);
      row[j] = s + (i == j ? static_cast<std::int64_t>(d.tr[u]) : 0);
    }
    return row;
  };

  PartitionQuotient pq;
  pq.k = k;
  pq.matrix.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t rep = classes[i][0];
    const auto reference = row_of(rep, i);
    for (std::size_t idx = 1; idx < classes[i].size(); ++idx) {
      const std::size_t u = classes[i][idx];
      const auto row = row_of(u, i);
      for (std::size_t j = 0; j < k; ++j)
        if (row[j] != reference[j]) throw NonEquitablePartition(i, j, rep, u);
    }
    std::copy(reference.begin(), reference.end(), pq.matrix.begin() + static_cast<long>(i * k));
  }
  pq.classes = std::move(classes);
  return pq;
}

/// Largest eigenvalue of a quotient matrix (nonnegative, irreducible for
/// connected graphs).
inline double quotient_spectral_radius(const PartitionQuotient& pq, const PowerOptions& opts = {}) {
  if (pq.k == 1) return static_cast<double>(pq.matrix[0]);
  std::vector<double> a(pq.matrix.begin(), pq.matrix.end());
  return power_iteration(a, pq.k, opts).rho;
}

// ---------------------------------------------------------------------------
// Monic cubics x^3 + c2 x^2 + c1 x + c0.

struct Cubic {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
  /// Real roots x1 <= x2 of the derivative, when they exist.
  std::optional<double> x1;
  std::optional<double> x2;

  long double operator()(long double x) const {
    return ((x + c2) * x + c1) * x + c0;
  }
  long double derivative(long double x) const { return (3 * x + 2 * c2) * x + c1; }
};

inline Cubic make_cubic(double c2, double c1, double c0) {
  Cubic c{c2, c1, c0, std::nullopt, std::nullopt};
  // 3x^2 + 2 c2 x + c1 = 0
  const double disc = 4.0 * c2 * c2 - 12.0 * c1;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    c.x1 = (-2.0 * c2 - s) / 6.0;
    c.x2 = (-2.0 * c2 + s) / 6.0;
  }
  return c;
}

/// The two exception families whose Perron roots are cubic roots:
/// T6 is K_3 v (K_{n-5} + 2K_1), T8 is K_2 v (K_{n-4} + 2K_1).
enum class CubicFamily { T6, T8 };

/// Characteristic polynomial of the 3x3 quotient matrix of the family member
/// at order n.
inline Cubic family_char_cubic(CubicFamily family, std::size_t order) {
  const auto n = static_cast<double>(order);
  if (family == CubicFamily::T6) {
    if (order < 7) throw InvalidParameter("family_char_cubic(T6): order must be at least 7");
    return make_cubic(-(5 * n - 7), 8 * n * n - 31 * n + 56, -4 * n * n * n + 26 * n * n - 82 * n + 80);
  }
  if (order < 6) throw InvalidParameter("family_char_cubic(T8): order must be at least 6");
  return make_cubic(-(5 * n - 6), 8 * n * n - 28 * n + 44, -4 * n * n * n + 24 * n * n - 68 * n + 64);
}

class BracketError : public Error {
 public:
  using Error::Error;
};

/// The unique root right of the larger critical point x2 (or the only real
/// root when the derivative has none), by Newton's method safeguarded with
/// bisection. Converges to |f(x)| <= 1e-12 or until the bracket collapses.
inline double largest_cubic_root(const Cubic& c) {
  const double cauchy = 1.0 + std::max({std::abs(c.c2), std::abs(c.c1), std::abs(c.c0)});
  double lo = c.x2 ? *c.x2 : -cauchy;
  double hi = std::abs(c.c2) + 1.0;
  if (hi <= lo || c(hi) <= 0) hi = cauchy;

  auto sign_table = [&] {
    std::string s;
    auto add = [&](const char* name, std::optional<double> x) {
      if (!x) return;
      s += std::string(" ") + name + "=" + std::to_string(*x) + ":" +
           (c(*x) < 0 ? "-" : (c(*x) > 0 ? "+" : "0"));
    };
    add("x1", c.x1);
    add("x2", c.x2);
    add("start", hi);
    return s;
  };
  if (c(lo) > 0 || c(hi) < 0) throw BracketError("largest_cubic_root: no sign change;" + sign_table());

  double x = hi;
  for (int it = 0; it < 200; ++it) {
    const long double fx = c(x);
    if (std::abs(fx) <= 1e-12L) return x;
    if (fx > 0) {
      hi = x;
    } else {
      lo = x;
    }
    const long double dfx = c.derivative(x);
    double next = dfx > 0 ? static_cast<double>(x - fx / dfx) : lo - 1.0;
    if (!(next > lo && next < hi)) next = lo + (hi - lo) / 2;
    if (next == x || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::abs(hi)) {
      return std::abs(c(lo)) < std::abs(c(hi)) ? lo : hi;
    }
    x = next;
  }
  return x;
}

}  // namespace qdham
