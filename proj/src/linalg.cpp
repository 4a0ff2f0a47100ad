#include "homlie/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "homlie/errors.hpp"

namespace homlie {

namespace {

using IntRow = std::vector<mpz_class>;

// Scales a rational row to a primitive integer row with a positive leading entry.
IntRow primitive_row(std::span<const Rational> row) {
  mpz_class l = 1;
  for (const auto& q : row) {
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  IntRow out(row.size());
  mpz_class g = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    out[j] = row[j].get_num() * (l / row[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[j].get_mpz_t());
  }
  if (g == 0) return out;
  auto lead = std::find_if(out.begin(), out.end(), [](const mpz_class& z) { return z != 0; });
  if (*lead < 0) g = -g;
  for (auto& z : out) {
    if (z != 0) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

bool is_zero_row(const IntRow& r) {
  return std::all_of(r.begin(), r.end(), [](const mpz_class& z) { return z == 0; });
}

}  // namespace

Echelon row_reduce(const QMatrix& m) {
  const std::size_t cols = m.cols();

  // Zero and repeated rows carry no information; structure-constant systems have many of both.
  std::vector<IntRow> a;
  std::set<IntRow> seen;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow r = primitive_row(m.row(i));
    if (is_zero_row(r) || !seen.insert(r).second) continue;
    a.push_back(std::move(r));
  }

  Echelon out;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const mpz_class& piv = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const mpz_class f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = piv * a[i][j];
        if (f != 0 && a[r][j] != 0) t -= f * a[r][j];
        if (t != 0) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }

  // Back substitution over the rationals on the rank() nonzero rows.
  const std::size_t rk = out.pivots.size();
  out.rref = QMatrix(rk, cols);
  for (std::size_t k = 0; k < rk; ++k) {
    const mpz_class& piv = a[k][out.pivots[k]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[k][j] == 0) continue;
      Rational q(a[k][j], piv);
      q.canonicalize();
      out.rref(k, j) = q;
    }
  }
  for (std::size_t k = rk; k-- > 0;) {
    const std::size_t pc = out.pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = out.rref(i, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < cols; ++j) {
        if (out.rref(k, j) != 0) out.rref(i, j) -= f * out.rref(k, j);
      }
    }
  }
  return out;
}

namespace {

SubspaceBasis kernel_from(const Echelon& e, std::size_t cols) {
  SubspaceBasis out;
  out.ambient_dim = cols;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) {
    if (p < cols) is_pivot[p] = true;
  }
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < e.rank(); ++k) {
      if (e.pivots[k] < cols) v[e.pivots[k]] = -e.rref(k, f);
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace

SubspaceBasis nullspace_basis(const QMatrix& m) { return kernel_from(row_reduce(m), m.cols()); }

std::size_t rank(const QMatrix& m) { return row_reduce(m).rank(); }

std::vector<double> singular_values(const CMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

std::size_t rank(const CMatrix& m, double eps) {
  const auto s = singular_values(m);
  if (s.empty() || s.front() == 0.0) return 0;
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x > eps * s.front(); }));
}

AffineSolution solve_affine(const QMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length != rows");
  const std::size_t n = m.cols();
  QMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = rhs[i];
  }
  const Echelon e = row_reduce(aug);
  AffineSolution out;
  out.homogeneous = kernel_from(e, n);
  if (!e.pivots.empty() && e.pivots.back() == n) return out;
  QVector x(n, Rational(0));
  for (std::size_t k = 0; k < e.rank(); ++k) x[e.pivots[k]] = e.rref(k, n);
  out.particular = std::move(x);
  return out;
}

SubspaceBasis span_of(std::size_t ambient_dim, const std::vector<QVector>& vectors) {
  QMatrix rows(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw std::invalid_argument("span_of: vector length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) rows(i, j) = vectors[i][j];
  }
  const Echelon e = row_reduce(rows);
  SubspaceBasis out;
  out.ambient_dim = ambient_dim;
  for (std::size_t k = 0; k < e.rank(); ++k) {
    auto r = e.rref.row(k);
    out.vectors.emplace_back(r.begin(), r.end());
  }
  return out;
}

QMatrix SubspaceBasis::as_rows() const {
  QMatrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  return m;
}

std::optional<QVector> SubspaceBasis::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_dim) throw std::invalid_argument("SubspaceBasis: vector length mismatch");
  return solve_affine(as_rows().transpose(), v).particular;
}

bool SubspaceBasis::contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  if (other.ambient_dim != ambient_dim) return false;
  return std::all_of(other.vectors.begin(), other.vectors.end(), [&](const QVector& v) { return contains(v); });
}

bool SubspaceBasis::same_span(const SubspaceBasis& other) const {
  return other.ambient_dim == ambient_dim && rank(as_rows()) == rank(other.as_rows()) && contains(other);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("intersect: ambient dimensions differ");
  const std::size_t n = a.ambient_dim;
  // Columns [A | -B]; a kernel vector (x, y) gives the common vector A x.
  QMatrix sys(n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) sys(r, i) = a.vectors[i][r];
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) sys(r, a.dim() + j) = -b.vectors[j][r];
  std::vector<QVector> common;
  for (const auto& k : nullspace_basis(sys).vectors) {
    QVector v(n, Rational(0));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (k[i] == 0) continue;
      for (std::size_t r = 0; r < n; ++r) v[r] += k[i] * a.vectors[i][r];
    }
    common.push_back(std::move(v));
  }
  return span_of(n, common);
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = row_reduce(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix();
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

CMatrix inverse(const CMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  if (rank(m) < n) throw SingularMatrix();
  Eigen::MatrixXcd e(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e(r, c) = m(r, c);
  const Eigen::MatrixXcd inv = e.fullPivLu().inverse();
  CMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = inv(r, c);
  return out;
}

std::vector<Rational> charpoly(const QMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return {Rational(1)};

  // Berkowitz: v holds det(xI - A_r) in descending order for the leading r x r block.
  std::vector<Rational> v{Rational(1), Rational(-a(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column entries t_0 = 1, t_1 = -a_rr, t_k = -R M^{k-2} C.
    std::vector<Rational> t(r + 2);
    t[0] = 1;
    t[1] = -a(r, r);
    std::vector<Rational> w(r);
    for (std::size_t i = 0; i < r; ++i) w[i] = a(i, r);
    for (std::size_t k = 2; k <= r + 1; ++k) {
      if (k > 2) {
        std::vector<Rational> nw(r, Rational(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) nw[i] += a(i, j) * w[j];
        w = std::move(nw);
      }
      Rational s = 0;
      for (std::size_t j = 0; j < r; ++j) s += a(r, j) * w[j];
      t[k] = -s;
    }
    std::vector<Rational> nv(r + 2, Rational(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nv[i] += t[i - j] * v[j];
    v = std::move(nv);
  }
  std::reverse(v.begin(), v.end());
  return v;
}

Rational determinant(const QMatrix& m) {
  const auto c = charpoly(m);
  return m.rows() % 2 == 0 ? c[0] : Rational(-c[0]);
}

}  // namespace homlie
