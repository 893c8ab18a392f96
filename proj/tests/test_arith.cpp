#include "enriq/arith.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace enriq;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix eisenstein_multiplier() { return from_rows({{0, -1}, {1, -1}}); }
IntMatrix gauss_multiplier() { return from_rows({{0, -1}, {1, 0}}); }

void check_snf_contract(const IntMatrix& m, const SNFDecomposition& snf) {
  CHECK(IntMatrix(snf.u * m * snf.v) == snf.d);
  CHECK(abs(determinant(snf.u)) == 1);
  CHECK(abs(determinant(snf.v)) == 1);
  CHECK(abs(determinant(snf.d)) == abs(determinant(m)));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) CHECK(snf.d(i, j) == 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) CHECK(snf.d(i, i) >= 0);
  for (Eigen::Index i = 0; i + 1 < m.rows(); ++i) {
    if (snf.d(i, i) == 0) {
      CHECK(snf.d(i + 1, i + 1) == 0);
    } else {
      CHECK(snf.d(i + 1, i + 1) % snf.d(i, i) == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form: identity") {
  IntMatrix id = int_identity(2);
  SNFDecomposition snf = smith_normal_form(id);
  CHECK(snf.d == id);
  CHECK(snf.u == id);
  CHECK(snf.v == id);
}

TEST_CASE("smith normal form: CM multipliers minus identity") {
  // row/column reduction by hand gives diag(1,3) and diag(1,2)
  IntMatrix mw = IntMatrix(eisenstein_multiplier() - int_identity(2));
  SNFDecomposition sw = smith_normal_form(mw);
  CHECK(sw.d(0, 0) == 1);
  CHECK(sw.d(1, 1) == 3);
  CHECK(determinant(mw) == 3);
  check_snf_contract(mw, sw);

  IntMatrix mi = IntMatrix(gauss_multiplier() - int_identity(2));
  SNFDecomposition si = smith_normal_form(mi);
  CHECK(si.d(0, 0) == 1);
  CHECK(si.d(1, 1) == 2);
  CHECK(determinant(mi) == 2);
  check_snf_contract(mi, si);
}

TEST_CASE("smith normal form: random matrices satisfy the full contract") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> dim_dist(1, 6);
  std::uniform_int_distribution<long> entry_dist(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::Index n = dim_dist(rng);
    IntMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entry_dist(rng);
    check_snf_contract(m, smith_normal_form(m));
  }
}

TEST_CASE("smith normal form is deterministic") {
  IntMatrix m = from_rows({{6, 4, 2}, {4, 8, 0}, {2, 0, 10}});
  SNFDecomposition a = smith_normal_form(m);
  SNFDecomposition b = smith_normal_form(m);
  CHECK(a.u == b.u);
  CHECK(a.d == b.d);
  CHECK(a.v == b.v);
}

TEST_CASE("solve_linear_mod: zero matrix") {
  IntMatrix z = IntMatrix::Zero(2, 2);
  IntVector zero2 = IntVector::Zero(2);
  auto sol = solve_linear_mod(z, TorsionVector(5, zero2));
  REQUIRE(sol.has_value());
  CHECK(sol->is_zero());

  IntVector t(2);
  t << 1, 0;
  CHECK_FALSE(solve_linear_mod(z, TorsionVector(5, t)).has_value());
}

TEST_CASE("solve_linear_mod: 2x = 1 mod 4 has no solution") {
  IntMatrix m = from_rows({{2, 0}, {0, 2}});
  IntVector t(2);
  t << 1, 0;
  CHECK_FALSE(solve_linear_mod(m, TorsionVector(4, t)).has_value());
}

TEST_CASE("solve_linear_mod: dimension mismatch") {
  IntMatrix m = int_identity(3);
  IntVector t(2);
  t << 0, 0;
  CHECK_THROWS_AS(solve_linear_mod(m, TorsionVector(4, t)), std::invalid_argument);
}

TEST_CASE("solve_linear_mod agrees with exhaustive search") {
  std::mt19937_64 rng(414243);
  std::uniform_int_distribution<long> entry_dist(-9, 9);
  for (int dim = 1; dim <= 3; ++dim) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      for (int trial = 0; trial < 25; ++trial) {
        IntMatrix m(dim, dim);
        std::vector<std::vector<std::int64_t>> m64(
            static_cast<std::size_t>(dim),
            std::vector<std::int64_t>(static_cast<std::size_t>(dim)));
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) {
            long e = entry_dist(rng);
            m(i, j) = e;
            m64[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ((e % n) + n) % n;
          }
        IntVector t(dim);
        std::vector<std::int64_t> t64(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
          auto v = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
          t(i) = static_cast<long>(v);
          t64[static_cast<std::size_t>(i)] = v;
        }
        auto fast = solve_linear_mod(m, TorsionVector(n, t));
        auto slow = oracle::exhaustive_solve(m64, t64, n);
        CAPTURE(dim);
        CAPTURE(n);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
          // verify the returned witness, not just solvability
          IntVector res = m * fast->coords;
          for (int i = 0; i < dim; ++i) CHECK(mod_reduce(res(i) - t(i), n) == 0);
        }
      }
    }
  }
}

TEST_CASE("matrix_order: identity and CM multipliers") {
  CHECK(matrix_order(int_identity(2), 5) == 1);
  CHECK(matrix_order(gauss_multiplier(), 10) == 4);       // direct powers
  CHECK(matrix_order(eisenstein_multiplier(), 10) == 3);  // direct powers
  CHECK_FALSE(matrix_order(from_rows({{2, 0}, {0, 1}}), 50).has_value());
}

TEST_CASE("matrix_order of the square") {
  // ord(M^2) = ord(M) / gcd(ord(M), 2) for finite-order M
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> entry_dist(-2, 2);
  std::vector<IntMatrix> seeds = {int_identity(2), IntMatrix(-int_identity(2)),
                                  gauss_multiplier(), eisenstein_multiplier(),
                                  IntMatrix(-eisenstein_multiplier())};
  for (const IntMatrix& seed : seeds) {
    for (int trial = 0; trial < 20; ++trial) {
      // conjugate by a random unimodular matrix to vary the presentation
      IntMatrix s = int_identity(2);
      s(0, 1) = entry_dist(rng);
      IntMatrix l = int_identity(2);
      l(1, 0) = entry_dist(rng);
      IntMatrix g = s * l;
      IntMatrix sinv = int_identity(2);
      sinv(0, 1) = -s(0, 1);
      IntMatrix linv = int_identity(2);
      linv(1, 0) = -l(1, 0);
      IntMatrix ginv = linv * sinv;
      REQUIRE(IntMatrix(g * ginv) == int_identity(2));
      IntMatrix m = g * seed * ginv;
      auto ord = matrix_order(m, 20);
      REQUIRE(ord.has_value());
      auto ord2 = matrix_order(IntMatrix(m * m), 20);
      REQUIRE(ord2.has_value());
      CHECK(*ord2 == *ord / gcd64(*ord, 2));
    }
  }
}

TEST_CASE("torsion vectors reduce, add and order") {
  IntVector c(2);
  c << 5, -1;
  TorsionVector t(4, c);
  CHECK(t.coords(0) == 1);
  CHECK(t.coords(1) == 3);
  CHECK(t.order() == 4);

  IntVector h(2);
  h << 1, 0;
  TorsionVector half(2, h);
  TorsionVector sum = torsion_add(t, half);
  CHECK(sum.modulus == 4);
  CHECK(sum.coords(0) == 3);
  CHECK(torsion_scale(4, t).is_zero());
}

TEST_CASE("determinant: small exact checks") {
  CHECK(determinant(int_identity(4)) == 1);
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IntMatrix::Zero(3, 3)) == 0);
  CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(from_rows({{2, 0, 1}, {0, 3, 0}, {1, 0, 2}})) == 9);
}
