#include "homlie/deriv_spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace homlie {

QMatrix as_square(const QVector& flat) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
  if (n * n != flat.size()) throw std::invalid_argument("as_square: length is not a perfect square");
  return QMatrix(n, n, flat);
}

namespace {

// Unknown D(r, c) sits at column r * n + c.
std::size_t unknown(std::size_t n, std::size_t r, std::size_t c) { return r * n + c; }

}  // namespace

SubspaceBasis gen_derivations(const LieAlgebra& g, const DerivationType& t) {
  const std::size_t n = g.dim();
  const auto& c = g.table();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j || t.b != t.c) pairs.emplace_back(i, j);
    }
  QMatrix sys(pairs.size() * n, n * n);
  std::size_t row = 0;
  for (auto [i, j] : pairs) {
    for (std::size_t m = 0; m < n; ++m, ++row) {
      // a D([e_i,e_j])_m = a sum_k c(i,j,k) D(m,k)
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j, k) != 0) sys(row, unknown(n, m, k)) += t.a * c(i, j, k);
      }
      // - b [D e_i, e_j]_m = - b sum_l D(l,i) c(l,j,m)
      // - c [e_i, D e_j]_m = - c sum_l D(l,j) c(i,l,m)
      for (std::size_t l = 0; l < n; ++l) {
        if (c(l, j, m) != 0) sys(row, unknown(n, l, i)) -= t.b * c(l, j, m);
        if (c(i, l, m) != 0) sys(row, unknown(n, l, j)) -= t.c * c(i, l, m);
      }
    }
  }
  return nullspace_basis(sys);
}

SubspaceBasis homlie_space(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const auto& c = g.table();
  std::size_t triples = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) triples += n - j - 1;
  QMatrix sys(triples * n, n * n);
  std::size_t row = 0;
  // [T e_a, [e_b, e_c]]_m = sum_l T(l,a) sum_p c(b,c,p) c(l,p,m)
  auto add = [&](std::size_t a, std::size_t b, std::size_t cc, std::size_t m, std::size_t r) {
    for (std::size_t p = 0; p < n; ++p) {
      if (c(b, cc, p) == 0) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (c(l, p, m) != 0) sys(r, unknown(n, l, a)) += c(b, cc, p) * c(l, p, m);
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m, ++row) {
          add(i, j, k, m, row);
          add(j, k, i, m, row);
          add(k, i, j, m, row);
        }
  return nullspace_basis(sys);
}

TracelessSplit traceless_split(const SubspaceBasis& space) {
  const std::size_t n2 = space.ambient_dim;
  const QMatrix id = QMatrix::identity(as_square(QVector(n2, Rational(0))).rows());
  if (!space.contains(id.flat())) throw std::invalid_argument("traceless_split: identity is not in the space");
  QMatrix traces(1, space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) traces(0, i) = as_square(space.vectors[i]).trace();
  std::vector<QVector> combos;
  for (const auto& coeffs : nullspace_basis(traces).vectors) {
    QVector v(n2, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      for (std::size_t k = 0; k < n2; ++k) v[k] += coeffs[i] * space.vectors[i][k];
    }
    combos.push_back(std::move(v));
  }
  return {SubspaceBasis{n2, std::move(combos)}, true};
}

WeightDecomposition ad_h_weight_decomposition(const SubspaceBasis& space, const LieAlgebra& g) {
  if (g.dim() == 0) throw std::invalid_argument("ad_h_weight_decomposition: empty algebra");
  if (space.ambient_dim != g.dim() * g.dim()) throw std::invalid_argument("ad_h_weight_decomposition: ambient dimension mismatch");
  const QMatrix adh = g.ad_basis(0);
  const std::size_t k = space.dim();

  // Matrix of T -> [ad h, T] in the basis of the space (column i = image of vector i).
  QMatrix op(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const QMatrix img = commutator(adh, as_square(space.vectors[i]));
    const auto coords = space.coordinates(img.flat());
    if (!coords) throw NotInvariant("ad_h_weight_decomposition: space is not invariant under [ad H, .]");
    for (std::size_t r = 0; r < k; ++r) op(r, i) = (*coords)[r];
  }

  // Integer eigenvalues lie in the Gershgorin disc radius bound.
  double bound = 0.0;
  for (std::size_t r = 0; r < k; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < k; ++c) s += magnitude(op(r, c));
    bound = std::max(bound, s);
  }
  const int limit = static_cast<int>(std::ceil(bound));

  WeightDecomposition out;
  std::size_t total = 0;
  for (int w = limit; w >= -limit && total < k; --w) {
    const QMatrix shifted = op - QMatrix::identity(k) * Rational(w);
    const auto eig = nullspace_basis(shifted);
    if (eig.empty()) continue;
    std::vector<QVector> vecs;
    for (const auto& coeffs : eig.vectors) {
      QVector v(space.ambient_dim, Rational(0));
      for (std::size_t i = 0; i < k; ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t a = 0; a < v.size(); ++a) v[a] += coeffs[i] * space.vectors[i][a];
      }
      vecs.push_back(std::move(v));
    }
    total += vecs.size();
    out.emplace(w, SubspaceBasis{space.ambient_dim, std::move(vecs)});
  }
  if (total != k) throw MathError("ad_h_weight_decomposition: restriction is not diagonalizable over the integers");
  return out;
}

bool satisfies_gen_derivation(const LieAlgebra& g, const DerivationType& t, const QMatrix& d) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const QVector ei = g.unit(i), ej = g.unit(j);
      const QVector lhs = d.apply(g.bracket(ei, ej));
      const QVector r1 = g.bracket(d.apply(ei), ej);
      const QVector r2 = g.bracket(ei, d.apply(ej));
      for (std::size_t m = 0; m < n; ++m) {
        if (t.a * lhs[m] != t.b * r1[m] + t.c * r2[m]) return false;
      }
    }
  return true;
}

bool satisfies_homlie_identity(const LieAlgebra& g, const QMatrix& t) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const QVector ei = g.unit(i), ej = g.unit(j), ek = g.unit(k);
        QVector s = g.bracket(t.apply(ei), g.bracket(ej, ek));
        const QVector s2 = g.bracket(t.apply(ej), g.bracket(ek, ei));
        const QVector s3 = g.bracket(t.apply(ek), g.bracket(ei, ej));
        for (std::size_t m = 0; m < n; ++m) {
          if (s[m] + s2[m] + s3[m] != 0) return false;
        }
      }
  return true;
}

}  // namespace homlie
