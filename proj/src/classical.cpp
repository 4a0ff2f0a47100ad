#include <stdexcept>

#include "homlie/lie_algebra.hpp"

namespace homlie {

namespace {

QMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

QVector flatten(const QMatrix& m) { return m.flat(); }

QMatrix unflatten(std::size_t n, const QVector& v) { return QMatrix(n, n, v); }

bool is_diagonal(const QMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r != c && m(r, c) != 0) return false;
    }
  return true;
}

// Kernel of X -> X^T B + B X, as matrices.
std::vector<QMatrix> form_algebra(const QMatrix& b) {
  const std::size_t n = b.rows();
  QMatrix sys(n * n, n * n);
  for (std::size_t u = 0; u < n * n; ++u) {
    const QMatrix x = elementary(n, u / n, u % n);
    const QMatrix img = x.transpose() * b + b * x;
    for (std::size_t r = 0; r < n * n; ++r) sys(r, u) = img.flat()[r];
  }
  std::vector<QMatrix> out;
  for (const auto& v : nullspace_basis(sys).vectors) out.push_back(unflatten(n, v));
  return out;
}

std::string entry_name(const char* prefix, std::size_t i, std::size_t j) {
  return std::string(prefix) + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

LieAlgebra sl2() { return classical(Series::sl, 2); }

LieAlgebra matrix_lie_algebra(std::string name, std::vector<std::string> basis_names, const std::vector<QMatrix>& basis,
                              std::vector<std::size_t> cartan) {
  const std::size_t d = basis.size();
  if (d == 0) throw std::invalid_argument("matrix_lie_algebra: empty basis");
  const std::size_t n = basis.front().rows();
  std::vector<QVector> flat;
  for (const auto& m : basis) {
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix_lie_algebra: basis matrices differ in shape");
    flat.push_back(flatten(m));
  }
  SubspaceBasis span{n * n, flat};
  if (rank(span.as_rows()) != d) throw std::invalid_argument("matrix_lie_algebra: basis is linearly dependent");

  BracketTable t(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto coords = span.coordinates(flatten(commutator(basis[i], basis[j])));
      if (!coords) throw MathError("matrix_lie_algebra: span is not closed under the commutator");
      t.set_skew(i, j, *coords);
    }
  return make_lie_algebra(std::move(name), std::move(basis_names), std::move(t), std::move(cartan));
}

LieAlgebra classical(Series series, std::size_t n) {
  std::vector<QMatrix> basis;
  std::vector<std::string> names;
  std::string name;
  switch (series) {
    case Series::sl: {
      if (n < 2) throw std::invalid_argument("classical: sl(n) needs n >= 2");
      name = "sl" + std::to_string(n);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        basis.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));
        names.push_back(n == 2 ? "H" : "H" + std::to_string(i + 1));
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          basis.push_back(elementary(n, i, j));
          names.push_back(n == 2 ? "E" : entry_name("E", i, j));
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          basis.push_back(elementary(n, i, j));
          names.push_back(n == 2 ? "F" : entry_name("E", i, j));
        }
      break;
    }
    case Series::sp: {
      if (n < 4 || n % 2 != 0) throw std::invalid_argument("classical: sp(n) needs even n >= 4");
      name = "sp" + std::to_string(n);
      const std::size_t k = n / 2;
      QMatrix j(n, n);
      for (std::size_t i = 0; i < k; ++i) {
        j(i, k + i) = 1;
        j(k + i, i) = -1;
      }
      basis = form_algebra(j);
      break;
    }
    case Series::so: {
      if (n < 5) throw std::invalid_argument("classical: so(n) needs n >= 5");
      name = "so" + std::to_string(n);
      const std::size_t k = n / 2;
      const std::size_t off = n % 2;
      QMatrix b(n, n);
      if (off == 1) b(0, 0) = 1;
      for (std::size_t i = 0; i < k; ++i) {
        b(off + i, off + k + i) = 1;
        b(off + k + i, off + i) = 1;
      }
      basis = form_algebra(b);
      break;
    }
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < basis.size(); ++i) names.push_back("X" + std::to_string(i + 1));
  }
  std::vector<std::size_t> cartan;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (is_diagonal(basis[i])) cartan.push_back(i);
  }
  return matrix_lie_algebra(std::move(name), std::move(names), basis, std::move(cartan));
}

std::optional<std::pair<Series, std::size_t>> parse_classical_name(std::string_view text) {
  if (text.size() < 3) return std::nullopt;
  Series s;
  const auto prefix = text.substr(0, 2);
  if (prefix == "sl") s = Series::sl;
  else if (prefix == "sp") s = Series::sp;
  else if (prefix == "so") s = Series::so;
  else return std::nullopt;
  std::size_t n = 0;
  for (char ch : text.substr(2)) {
    if (ch < '0' || ch > '9' || n > 1000) return std::nullopt;
    n = n * 10 + static_cast<std::size_t>(ch - '0');
  }
  return std::pair{s, n};
}

}  // namespace homlie
