#include "homlie/lie_algebra.hpp"

#include <stdexcept>

#include <json.hpp>

namespace homlie {

void BracketTable::set_skew(std::size_t i, std::size_t j, std::span<const Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("set_skew: vector length != dim");
  for (std::size_t k = 0; k < dim_; ++k) {
    (*this)(i, j, k) = v[k];
    (*this)(j, i, k) = -v[k];
  }
}

QVector BracketTable::basis_bracket(std::size_t i, std::size_t j) const {
  QVector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = (*this)(i, j, k);
  return out;
}

QVector BracketTable::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: vector length != dim");
  QVector out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((*this)(i, j, k) != 0) out[k] += w * (*this)(i, j, k);
      }
    }
  }
  return out;
}

QMatrix BracketTable::ad(std::span<const Rational> x) const {
  if (x.size() != dim_) throw std::invalid_argument("ad: vector length != dim");
  QMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((*this)(i, j, k) != 0) m(k, j) += x[i] * (*this)(i, j, k);
      }
  }
  return m;
}

std::optional<Triple> BracketTable::first_skew_violation() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((*this)(i, j, k) != -(*this)(j, i, k)) return Triple{i, j, k};
      }
  return std::nullopt;
}

QVector jacobiator(const BracketTable& t, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = t.dim();
  QVector out(n, Rational(0));
  auto add = [&](std::size_t a, std::size_t b, std::size_t c) {
    // [e_a, [e_b, e_c]]
    for (std::size_t l = 0; l < n; ++l) {
      const Rational& inner = t(b, c, l);
      if (inner == 0) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (t(a, l, m) != 0) out[m] += inner * t(a, l, m);
      }
    }
  };
  add(i, j, k);
  add(j, k, i);
  add(k, i, j);
  return out;
}

LieAlgebra make_lie_algebra(std::string name, std::vector<std::string> basis_names, BracketTable constants,
                            std::vector<std::size_t> cartan) {
  const std::size_t n = constants.dim();
  if (basis_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) basis_names.push_back("e" + std::to_string(i));
  }
  if (basis_names.size() != n) throw std::invalid_argument("make_lie_algebra: basis name count != dim");
  for (auto c : cartan) {
    if (c >= n) throw std::invalid_argument("make_lie_algebra: Cartan index out of range");
  }
  if (auto bad = constants.first_skew_violation()) throw SkewViolation(*bad);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const QVector jac = jacobiator(constants, i, j, k);
        for (const auto& x : jac) {
          if (x != 0) throw JacobiViolation(Triple{i, j, k});
        }
      }
  LieAlgebra g;
  g.name_ = std::move(name);
  g.names_ = std::move(basis_names);
  g.table_ = std::move(constants);
  g.cartan_ = std::move(cartan);
  return g;
}

QVector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  return table_.bracket(x, y);
}

QVector LieAlgebra::unit(std::size_t i) const {
  QVector v(dim(), Rational(0));
  v.at(i) = 1;
  return v;
}

QMatrix LieAlgebra::ad_basis(std::size_t i) const { return table_.ad(unit(i)); }

QMatrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<QMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
  QMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ads[i] * ads[j]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

std::string to_json_text(const LieAlgebra& g) {
  nlohmann::ordered_json doc;
  doc["dim"] = g.dim();
  doc["basis"] = g.basis_names();
  auto c = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) {
        const Rational& x = g.table()(i, j, k);
        if (x != 0) c.push_back({i, j, k, to_string(x)});
      }
  doc["c"] = std::move(c);
  return doc.dump();
}

LieAlgebra parse_lie_algebra_json(std::string_view text, std::string name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("structure constants: ") + e.what());
  }
  try {
    const auto n = doc.at("dim").get<std::size_t>();
    if (n == 0 || n > 64) throw std::invalid_argument("structure constants: dim must be in 1..64");
    std::vector<std::string> names;
    if (doc.contains("basis")) names = doc.at("basis").get<std::vector<std::string>>();
    BracketTable t(n);
    for (const auto& entry : doc.at("c")) {
      if (!entry.is_array() || entry.size() != 4) throw std::invalid_argument("structure constants: entry must be [i, j, k, \"p/q\"]");
      const auto i = entry[0].get<std::size_t>(), j = entry[1].get<std::size_t>(), k = entry[2].get<std::size_t>();
      if (i >= j || j >= n || k >= n) throw std::invalid_argument("structure constants: need i < j < dim and k < dim");
      const Rational q = entry[3].is_string() ? parse_rational(entry[3].get<std::string>())
                                              : Rational(entry[3].get<long>());
      t(i, j, k) = q;
      t(j, i, k) = -q;
    }
    return make_lie_algebra(std::move(name), std::move(names), std::move(t));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("structure constants: ") + e.what());
  }
}

}  // namespace homlie
