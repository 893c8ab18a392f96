#include "enriq/arith.hpp"

#include <stdexcept>
#include <utility>

namespace enriq {

TorsionVector::TorsionVector(Int n, IntVector c) : modulus(std::move(n)) {
  if (modulus < 1) throw std::invalid_argument("TorsionVector: modulus must be >= 1");
  if (c.size() < 1) throw std::invalid_argument("TorsionVector: empty coordinate vector");
  coords = std::move(c);
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    coords[i] = mod_reduce(coords[i], modulus);
}

bool TorsionVector::is_zero() const {
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) return false;
  return true;
}

Int TorsionVector::order() const {
  Int g = modulus;
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    g = gcd(g, coords[i]);
  return modulus / g;
}

bool TorsionVector::operator==(const TorsionVector& other) const {
  return modulus == other.modulus && coords == other.coords;
}

TorsionVector torsion_lift(const TorsionVector& t, const Int& n) {
  if (n % t.modulus != 0)
    throw std::invalid_argument("torsion_lift: target modulus not a multiple of current one");
  Int scale = n / t.modulus;
  IntVector c = t.coords * scale;
  return TorsionVector(n, std::move(c));
}

TorsionVector torsion_add(const TorsionVector& a, const TorsionVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("torsion_add: length mismatch");
  Int n = lcm(a.modulus, b.modulus);
  TorsionVector la = torsion_lift(a, n), lb = torsion_lift(b, n);
  return TorsionVector(n, la.coords + lb.coords);
}

TorsionVector torsion_scale(const Int& k, const TorsionVector& t) {
  return TorsionVector(t.modulus, k * t.coords);
}

TorsionVector torsion_apply(const IntMatrix& m, const TorsionVector& t) {
  if (m.cols() != t.size())
    throw std::invalid_argument("torsion_apply: dimension mismatch");
  return TorsionVector(t.modulus, m * t.coords);
}

namespace {

struct SNFWorker {
  IntMatrix u, d, v;
  Eigen::Index n;

  explicit SNFWorker(const IntMatrix& m)
      : u(int_identity(m.rows())), d(m), v(int_identity(m.cols())), n(m.rows()) {}

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    u.row(a).swap(u.row(b));
  }
  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    v.col(a).swap(v.col(b));
  }
  // row a -= q * row b
  void row_sub(Eigen::Index a, Eigen::Index b, const Int& q) {
    d.row(a) -= q * d.row(b);
    u.row(a) -= q * u.row(b);
  }
  // col a -= q * col b
  void col_sub(Eigen::Index a, Eigen::Index b, const Int& q) {
    d.col(a) -= q * d.col(b);
    v.col(a) -= q * v.col(b);
  }
  void col_add(Eigen::Index a, Eigen::Index b) {
    d.col(a) += d.col(b);
    v.col(a) += v.col(b);
  }
  void negate_row(Eigen::Index a) {
    d.row(a) = -d.row(a);
    u.row(a) = -u.row(a);
  }

  // Smallest |entry| != 0 in the trailing submatrix, ties row-major.
  bool find_pivot(Eigen::Index k, Eigen::Index& pi, Eigen::Index& pj) const {
    bool found = false;
    Int best = 0;
    for (Eigen::Index i = k; i < n; ++i)
      for (Eigen::Index j = k; j < n; ++j) {
        if (d(i, j) == 0) continue;
        Int a = abs(d(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  // Clear row k and column k off the diagonal. On exit either the trailing
  // submatrix from k is all zero, or d(k,k) != 0 with clean row/column k.
  void reduce_step(Eigen::Index k) {
    while (true) {
      Eigen::Index pi = k, pj = k;
      if (!find_pivot(k, pi, pj)) return;
      swap_rows(k, pi);
      swap_cols(k, pj);
      bool clean = true;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (d(i, k) == 0) continue;
        Int q = d(i, k) / d(k, k);  // truncated: remainder smaller than pivot
        if (q != 0) row_sub(i, k, q);
        if (d(i, k) != 0) clean = false;
      }
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (d(k, j) == 0) continue;
        Int q = d(k, j) / d(k, k);
        if (q != 0) col_sub(j, k, q);
        if (d(k, j) != 0) clean = false;
      }
      if (clean) return;
    }
  }

  void run() {
    for (Eigen::Index k = 0; k < n; ++k) reduce_step(k);

    // Enforce the divisibility chain; merging a bad adjacent pair only
    // perturbs the trailing block, which is re-reduced on the spot.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (d(k, k) == 0) break;  // zeros are trailing
        if (d(k + 1, k + 1) % d(k, k) == 0) continue;
        col_add(k, k + 1);
        for (Eigen::Index j = k; j < n; ++j) reduce_step(j);
        changed = true;
        break;
      }
    }
    for (Eigen::Index k = 0; k < n; ++k)
      if (d(k, k) < 0) negate_row(k);
  }
};

Int inverse_mod(const Int& a, const Int& n) {
  if (n == 1) return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
    throw std::logic_error("inverse_mod: not invertible");
  return r;
}

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& m) {
  if (!is_square(m)) throw std::invalid_argument("smith_normal_form: matrix must be square");
  SNFWorker w(m);
  w.run();
  return {std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::optional<TorsionVector> solve_linear_mod(const IntMatrix& m,
                                              const TorsionVector& t) {
  if (!is_square(m) || m.rows() != t.size())
    throw std::invalid_argument("solve_linear_mod: dimension mismatch");
  const Int& n = t.modulus;
  SNFDecomposition snf = smith_normal_form(m);

  IntVector rhs = snf.u * t.coords;
  IntVector y(t.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    Int di = mod_reduce(snf.d(i, i), n);
    Int ti = mod_reduce(rhs[i], n);
    Int g = gcd(di, n);  // gcd(0, n) = n
    if (ti % g != 0) return std::nullopt;
    if (g == n) {
      y[i] = 0;  // equation is 0 = 0 mod n
    } else {
      Int nn = n / g;
      y[i] = mod_reduce((ti / g) * inverse_mod(di / g, nn), nn);
    }
  }
  return TorsionVector(n, snf.v * y);
}

std::optional<std::int64_t> matrix_order(const IntMatrix& m, std::int64_t cap) {
  if (!is_square(m)) throw std::invalid_argument("matrix_order: matrix must be square");
  if (cap < 1) throw std::invalid_argument("matrix_order: cap must be >= 1");
  IntMatrix id = int_identity(m.rows());
  IntMatrix p = m;
  for (std::int64_t k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

Int determinant(const IntMatrix& m) {
  if (!is_square(m)) throw std::invalid_argument("determinant: matrix must be square");
  Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace enriq
