#include "effbounds/geometry/linalg.hpp"

#include <algorithm>

namespace effbounds::geom {

Echelon bareiss(ZMat A) {
  Echelon e;
  const Eigen::Index m = A.rows(), n = A.cols();
  mpz_class prev = 1, t;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index p = r;
    while (p < m && A(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      A.row(p).swap(A.row(r));
      ++e.swaps;
    }
    for (Eigen::Index i = r + 1; i < m; ++i) {
      if (A(i, c) == 0) {
        // the update still rescales the row
        for (Eigen::Index j = c + 1; j < n; ++j) {
          mpz_mul(t.get_mpz_t(), A(r, c).get_mpz_t(), A(i, j).get_mpz_t());
          mpz_divexact(A(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (Eigen::Index j = c + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), A(r, c).get_mpz_t(), A(i, j).get_mpz_t());
        mpz_submul(t.get_mpz_t(), A(i, c).get_mpz_t(), A(r, j).get_mpz_t());
        mpz_divexact(A(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      A(i, c) = 0;
    }
    prev = A(r, c);
    e.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  e.R = std::move(A);
  return e;
}

mpz_class determinant(const ZMat& A) {
  if (A.rows() != A.cols()) return 0;
  if (A.rows() == 0) return 1;
  Echelon e = bareiss(A);
  if (e.rank() < A.rows()) return 0;
  mpz_class d = e.R(A.rows() - 1, A.cols() - 1);
  return (e.swaps % 2) ? mpz_class(-d) : d;
}

namespace {

std::vector<ZVec> nullspace_of_echelon(const Echelon& e, Eigen::Index n) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<ZVec> basis;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    QVec x = QVec::Constant(n, mpq_class(0));
    x(f) = 1;
    for (int i = e.rank() - 1; i >= 0; --i) {
      const Eigen::Index pc = e.pivots[static_cast<std::size_t>(i)];
      mpq_class s = 0;
      for (Eigen::Index j = pc + 1; j < n; ++j)
        if (x(j) != 0 && e.R(i, j) != 0) s += mpq_class(e.R(i, j)) * x(j);
      x(pc) = -s / mpq_class(e.R(i, pc));
    }
    basis.push_back(primitive(x));
  }
  return basis;
}

ZMat select_rows(const ZMat& A, const std::vector<Eigen::Index>& rows) {
  ZMat S(static_cast<Eigen::Index>(rows.size()), A.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) S.row(static_cast<Eigen::Index>(i)) = A.row(rows[i]);
  return S;
}

}  // namespace

mpz_class dot(const ZMat& A, Eigen::Index row, const ZVec& v) {
  mpz_class s = 0;
  for (Eigen::Index j = 0; j < A.cols(); ++j) mpz_addmul(s.get_mpz_t(), A(row, j).get_mpz_t(), v(j).get_mpz_t());
  return s;
}

std::vector<ZVec> nullspace(const ZMat& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  const Eigen::Index lead = std::min(m, n + 2);
  if (lead == m) return nullspace_of_echelon(bareiss(A), n);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  std::vector<Eigen::Index> rows;
  for (Eigen::Index i = 0; i < lead; ++i) {
    rows.push_back(i);
    used[static_cast<std::size_t>(i)] = true;
  }
  for (int round = 0; round < 4; ++round) {
    std::vector<ZVec> basis = nullspace_of_echelon(bareiss(select_rows(A, rows)), n);
    if (basis.empty()) return basis;
    bool clean = true;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      for (const ZVec& b : basis)
        if (dot(A, i, b) != 0) {
          rows.push_back(i);
          used[static_cast<std::size_t>(i)] = true;
          clean = false;
          break;
        }
    }
    if (clean) return basis;
  }
  return nullspace_of_echelon(bareiss(A), n);
}

namespace {

constexpr std::uint64_t kPrime = 18446744073709551557ULL;  // 2^64 - 59

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& v) {
  static const mpz_class p(std::to_string(kPrime));
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

int rank_mod_p(const ZMat& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  std::vector<std::vector<std::uint64_t>> a(static_cast<std::size_t>(m), std::vector<std::uint64_t>(n));
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = reduce(A(i, j));
  int r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const std::uint64_t inv = powmod(a[r][c], kPrime - 2);
    for (Eigen::Index i = r + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mulmod(a[i][c], inv);
      for (Eigen::Index j = c; j < n; ++j) {
        const std::uint64_t sub = mulmod(f, a[r][j]);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + (kPrime - sub);
      }
    }
    ++r;
  }
  return r;
}

ZMat integer_rows(const QMat& A) {
  ZMat Z(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    mpz_class den = 1;
    for (Eigen::Index j = 0; j < A.cols(); ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), A(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < A.cols(); ++j) Z(i, j) = A(i, j).get_num() * (den / A(i, j).get_den());
  }
  return Z;
}

}  // namespace effbounds::geom
