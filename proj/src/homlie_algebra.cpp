#include "homlie/homlie_algebra.hpp"

#include <stdexcept>

namespace homlie {

HomLieAlgebra make_homlie_algebra(std::vector<std::string> names, BracketTable table, QMatrix twist) {
  const std::size_t n = table.dim();
  if (twist.rows() != n || twist.cols() != n) throw std::invalid_argument("make_homlie_algebra: twist shape != dim");
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != n) throw std::invalid_argument("make_homlie_algebra: basis name count != dim");
  if (auto bad = table.first_skew_violation()) throw SkewViolation(*bad);
  return {std::move(names), std::move(table), std::move(twist)};
}

QVector homlie_jacobiator(const HomLieAlgebra& h, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = h.dim();
  QVector out(n, Rational(0));
  auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
    const QVector inner = h.table.basis_bracket(b, c);
    const QVector t = h.twist.col(a);
    const QVector term = h.table.bracket(t, inner);
    for (std::size_t m = 0; m < n; ++m) out[m] += term[m];
  };
  add(i, j, k);
  add(j, k, i);
  add(k, i, j);
  return out;
}

HomLieJacobiReport check_homlie_jacobi(const HomLieAlgebra& h) {
  const std::size_t n = h.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        QVector r = homlie_jacobiator(h, i, j, k);
        for (const auto& x : r) {
          if (x != 0) return {false, Triple{i, j, k}, std::move(r)};
        }
      }
  return {};
}

HomLieAlgebra extend_sl2(const GenDer5& d) {
  const LieAlgebra g = sl2();
  const QMatrix dm = tuple_to_matrix(d);
  BracketTable t(4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) t(i, j, k) = g.table()(i, j, k);
  for (std::size_t j = 0; j < 3; ++j) {
    QVector img(4, Rational(0));
    for (std::size_t k = 0; k < 3; ++k) img[k] = dm(k, j);
    t.set_skew(3, j, img);  // [D, e_j] = D(e_j)
  }
  QMatrix twist = QMatrix::identity(4);
  twist(3, 3) = -1;
  HomLieAlgebra h = make_homlie_algebra({"H", "E", "F", "D"}, std::move(t), std::move(twist));
  const auto report = check_homlie_jacobi(h);
  if (!report.pass) throw JacobiViolation(*report.witness);
  return h;
}

HomLieAlgebra with_twist(HomLieAlgebra h, QMatrix twist) {
  if (twist.rows() != h.dim() || twist.cols() != h.dim()) throw std::invalid_argument("with_twist: twist shape != dim");
  h.twist = std::move(twist);
  return h;
}

}  // namespace homlie
