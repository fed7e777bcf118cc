#include "rankwb/elimination.hpp"

#include "rankwb/primes.hpp"

namespace rankwb {

namespace {

using IntRow = std::vector<BigInt>;

// Row scaled by the lcm of its denominators.
IntRow integer_row(const Matrix<Rational>& m, Index i, BigInt* scale = nullptr) {
  BigInt l = 1;
  for (Index j = 0; j < m.cols(); ++j) {
    const auto& q = m(i, j).gmp();
    if (q.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow row(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) {
    const auto& q = m(i, j).gmp();
    if (sgn(q) == 0) continue;
    if (l == 1) {
      row[static_cast<std::size_t>(j)] = q.get_num();
    } else {
      BigInt f;
      mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      row[static_cast<std::size_t>(j)] = q.get_num() * f;
    }
  }
  if (scale) *scale = l;
  return row;
}

void make_primitive(IntRow& row) {
  BigInt g = 0;
  for (const auto& x : row) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& x : row)
    if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::uint64_t common_modulus(const Matrix<Zp>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j).bound()) return m(i, j).modulus();
  return 0;
}

std::vector<std::vector<std::uint64_t>> residues(const Matrix<Zp>& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(static_cast<std::size_t>(m.rows()),
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).bind(p).residue();
  return a;
}

}  // namespace

std::vector<Pivot> pivots(const Matrix<Rational>& m) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<IntRow> a;
  a.reserve(static_cast<std::size_t>(rows));
  for (Index i = 0; i < rows; ++i) {
    a.push_back(integer_row(m, i));
    make_primitive(a.back());
  }
  std::vector<Pivot> out;
  BigInt s, t, g;
  for (Index i = 0; i < rows; ++i) {
    auto& ri = a[static_cast<std::size_t>(i)];
    Index c = 0;
    while (c < cols && sgn(ri[static_cast<std::size_t>(c)]) == 0) ++c;
    if (c == cols) continue;
    out.push_back({i, c});
    const auto uc = static_cast<std::size_t>(c);
    for (Index j = i + 1; j < rows; ++j) {
      auto& rj = a[static_cast<std::size_t>(j)];
      if (sgn(rj[uc]) == 0) continue;
      // rj <- (ri[c]/g) * rj - (rj[c]/g) * ri
      mpz_gcd(g.get_mpz_t(), ri[uc].get_mpz_t(), rj[uc].get_mpz_t());
      mpz_divexact(s.get_mpz_t(), ri[uc].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(t.get_mpz_t(), rj[uc].get_mpz_t(), g.get_mpz_t());
      for (std::size_t k = 0; k < static_cast<std::size_t>(cols); ++k) {
        auto& x = rj[k];
        if (s != 1 && sgn(x) != 0) x *= s;
        if (k >= uc && sgn(ri[k]) != 0) mpz_submul(x.get_mpz_t(), t.get_mpz_t(), ri[k].get_mpz_t());
      }
      make_primitive(rj);
    }
  }
  return out;
}

std::vector<Pivot> pivots(const Matrix<Zp>& m) {
  const std::uint64_t p = common_modulus(m);
  if (p == 0) return pivots<Zp>(m);
  auto a = residues(m, p);
  const Index rows = m.rows(), cols = m.cols();
  const bool small = p < (std::uint64_t{1} << 32);
  std::vector<Pivot> out;
  for (Index i = 0; i < rows; ++i) {
    auto& ri = a[static_cast<std::size_t>(i)];
    std::size_t c = 0;
    while (c < ri.size() && ri[c] == 0) ++c;
    if (c == ri.size()) continue;
    out.push_back({i, static_cast<Index>(c)});
    const std::uint64_t inv = pow_mod(ri[c], p - 2, p);
    for (std::size_t k = c; k < ri.size(); ++k)
      if (ri[k]) ri[k] = small ? ri[k] * inv % p : mul_mod(ri[k], inv, p);
    for (Index j = i + 1; j < rows; ++j) {
      auto& rj = a[static_cast<std::size_t>(j)];
      const std::uint64_t f = rj[c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t k = c; k < static_cast<std::size_t>(cols); ++k) {
        if (ri[k] == 0) continue;
        const std::uint64_t prod = small ? nf * ri[k] % p : mul_mod(nf, ri[k], p);
        const std::uint64_t sum = rj[k] + prod;
        rj[k] = sum >= p ? sum - p : sum;
      }
    }
  }
  return out;
}

Rational determinant(const Matrix<Rational>& m) {
  require_square(m, "determinant");
  const Index n = m.rows();
  std::vector<IntRow> a;
  BigInt denom = 1;
  for (Index i = 0; i < n; ++i) {
    BigInt scale;
    a.push_back(integer_row(m, i, &scale));
    denom *= scale;
  }
  // Bareiss: after step k every entry is a (k+1) x (k+1) minor.
  BigInt prev = 1;
  int sign = 1;
  for (Index k = 0; k < n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    Index p = k;
    while (p < n && sgn(a[static_cast<std::size_t>(p)][uk]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(a[static_cast<std::size_t>(p)], a[uk]);
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      auto& ri = a[static_cast<std::size_t>(i)];
      for (std::size_t j = uk + 1; j < static_cast<std::size_t>(n); ++j) {
        BigInt v = a[uk][uk] * ri[j];
        mpz_submul(v.get_mpz_t(), ri[uk].get_mpz_t(), a[uk][j].get_mpz_t());
        mpz_divexact(ri[j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      ri[uk] = 0;
    }
    prev = a[uk][uk];
  }
  BigInt det = n == 0 ? BigInt(1) : prev;
  if (sign < 0) det = -det;
  return Rational(det, denom);
}

Zp determinant(const Matrix<Zp>& m) {
  require_square(m, "determinant");
  const std::uint64_t p = common_modulus(m);
  if (p == 0) return determinant<Zp>(m);
  auto a = residues(m, p);
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a[r][c] == 0) ++r;
    if (r == n) return Zp::from_residue(0, p);
    if (r != c) {
      std::swap(a[r], a[c]);
      det = det == 0 ? 0 : p - det;
    }
    det = mul_mod(det, a[c][c], p);
    const std::uint64_t inv = pow_mod(a[c][c], p - 2, p);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mul_mod(a[i][c], inv, p);
      for (std::size_t k = c; k < n; ++k) {
        const std::uint64_t sub = mul_mod(f, a[c][k], p);
        a[i][k] = a[i][k] >= sub ? a[i][k] - sub : a[i][k] + p - sub;
      }
    }
  }
  return Zp::from_residue(det, p);
}

namespace detail {

Matrix<Zp> mul_zp(const Matrix<Zp>& a, const Matrix<Zp>& b) {
  std::uint64_t p = common_modulus(a);
  if (p == 0) p = common_modulus(b);
  const Index rows = a.rows(), inner = a.cols(), cols = b.cols();
  Matrix<Zp> c(rows, cols);
  if (p == 0) {
    for (Index j = 0; j < cols; ++j)
      for (Index k = 0; k < inner; ++k)
        if (!b(k, j).is_zero())
          for (Index i = 0; i < rows; ++i)
            if (!a(i, k).is_zero()) c(i, j) += a(i, k) * b(k, j);
    return c;
  }
  // Column-major residue copies.
  std::vector<std::uint64_t> ra(static_cast<std::size_t>(rows * inner)), rb(static_cast<std::size_t>(inner * cols));
  for (Index k = 0; k < inner; ++k)
    for (Index i = 0; i < rows; ++i) ra[static_cast<std::size_t>(k * rows + i)] = a(i, k).bind(p).residue();
  for (Index j = 0; j < cols; ++j)
    for (Index k = 0; k < inner; ++k) rb[static_cast<std::size_t>(j * inner + k)] = b(k, j).bind(p).residue();
  const bool small = p < (std::uint64_t{1} << 32);
  std::vector<unsigned __int128> acc(static_cast<std::size_t>(rows));
  std::vector<std::uint64_t> acc_big(static_cast<std::size_t>(rows));
  for (Index j = 0; j < cols; ++j) {
    if (small) {
      std::fill(acc.begin(), acc.end(), 0);
    } else {
      std::fill(acc_big.begin(), acc_big.end(), 0);
    }
    for (Index k = 0; k < inner; ++k) {
      const std::uint64_t bkj = rb[static_cast<std::size_t>(j * inner + k)];
      if (bkj == 0) continue;
      const std::uint64_t* col = &ra[static_cast<std::size_t>(k * rows)];
      if (small) {
        for (Index i = 0; i < rows; ++i) acc[static_cast<std::size_t>(i)] += col[i] * bkj;
      } else {
        for (Index i = 0; i < rows; ++i) {
          if (col[i] == 0) continue;
          const std::uint64_t s = acc_big[static_cast<std::size_t>(i)] + mul_mod(col[i], bkj, p);
          acc_big[static_cast<std::size_t>(i)] = s >= p ? s - p : s;
        }
      }
    }
    for (Index i = 0; i < rows; ++i) {
      const std::uint64_t r = small ? static_cast<std::uint64_t>(acc[static_cast<std::size_t>(i)] % p)
                                    : acc_big[static_cast<std::size_t>(i)];
      c(i, j) = Zp::from_residue(r, p);
    }
  }
  return c;
}

}  // namespace detail

}  // namespace rankwb
