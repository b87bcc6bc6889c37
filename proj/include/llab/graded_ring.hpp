#pragma once

// The graded ring S = k[x,y,z]. A degree-d form is a coefficient vector over
// the monomials of degree d, ordered lexicographically descending on the
// exponents of (x, y):
//
//   x^d, x^(d-1)y, x^(d-1)z, x^(d-2)y^2, x^(d-2)yz, x^(d-2)z^2, ..., z^d
//
// so the monomial x^a y^b z^c sits at index t(t+1)/2 + (t-b) with t = d-a.
// Every RREF in the project is taken relative to this order.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "llab/errors.hpp"
#include "llab/field.hpp"
#include "llab/matrix.hpp"

namespace llab {

struct Exponent {
  int x = 0, y = 0, z = 0;
  int degree() const { return x + y + z; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

constexpr std::size_t monomial_count(int d) {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

constexpr std::size_t monomial_index(const Exponent& e) {
  const auto t = static_cast<std::size_t>(e.y + e.z);
  return t * (t + 1) / 2 + (t - static_cast<std::size_t>(e.y));
}

/// The ordered monomials of one degree.
class MonomialBasis {
 public:
  explicit MonomialBasis(int degree) : degree_(degree) {
    if (degree < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative degree " + std::to_string(degree));
    exps_.reserve(monomial_count(degree));
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b) exps_.push_back({a, b, degree - a - b});
  }

  int degree() const { return degree_; }
  std::size_t size() const { return exps_.size(); }
  const Exponent& operator[](std::size_t i) const { return exps_[i]; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

 private:
  int degree_;
  std::vector<Exponent> exps_;
};

template <ExactField F>
class Form {
 public:
  using value_type = typename F::value_type;

  Form() : Form(0) {}
  explicit Form(int degree) : degree_(degree), coeffs_(monomial_count(degree)) {
    if (degree < 0) throw Error(ErrorCode::DegreeOutOfRange, "form of negative degree");
  }
  Form(int degree, std::vector<value_type> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree < 0) throw Error(ErrorCode::DegreeOutOfRange, "form of negative degree");
    if (coeffs_.size() != monomial_count(degree))
      throw Error(ErrorCode::InvalidArgument, "coefficient vector does not match the degree");
  }

  static Form constant(const value_type& c) { return Form(0, {c}); }

  static Form monomial(const F& field, Exponent e, long coeff = 1) {
    Form f(e.degree());
    f.coeffs_[monomial_index(e)] = field.from_int(coeff);
    return f;
  }

  static Form random(const F& field, int degree, Rng& rng) {
    Form f(degree);
    for (auto& c : f.coeffs_) c = field.random(rng);
    return f;
  }

  int degree() const { return degree_; }
  std::span<const value_type> coeffs() const { return coeffs_; }
  std::span<value_type> coeffs() { return coeffs_; }
  const value_type& coeff(const Exponent& e) const { return coeffs_[monomial_index(e)]; }
  value_type& coeff(const Exponent& e) { return coeffs_[monomial_index(e)]; }

  bool is_zero(const F& field) const {
    for (const auto& c : coeffs_)
      if (!field.is_zero(c)) return false;
    return true;
  }

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int degree_;
  std::vector<value_type> coeffs_;
};

template <ExactField F>
Form<F> add(const F& field, const Form<F>& a, const Form<F>& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::InconsistentDegrees, "sum of forms of different degrees");
  Form<F> out(a.degree());
  for (std::size_t i = 0; i < out.coeffs().size(); ++i) out.coeffs()[i] = field.add(a.coeffs()[i], b.coeffs()[i]);
  return out;
}

template <ExactField F>
Form<F> sub(const F& field, const Form<F>& a, const Form<F>& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::InconsistentDegrees, "difference of forms of different degrees");
  Form<F> out(a.degree());
  for (std::size_t i = 0; i < out.coeffs().size(); ++i) out.coeffs()[i] = field.sub(a.coeffs()[i], b.coeffs()[i]);
  return out;
}

template <ExactField F>
Form<F> scale(const F& field, const typename F::value_type& s, const Form<F>& a) {
  Form<F> out(a.degree());
  for (std::size_t i = 0; i < out.coeffs().size(); ++i) out.coeffs()[i] = field.mul(s, a.coeffs()[i]);
  return out;
}

template <ExactField F>
Form<F> multiply(const F& field, const Form<F>& f, const Form<F>& g) {
  const int d = f.degree() + g.degree();
  Form<F> out(d);
  const MonomialBasis bf(f.degree()), bg(g.degree());
  for (std::size_t i = 0; i < bf.size(); ++i) {
    const auto& fi = f.coeffs()[i];
    if (field.is_zero(fi)) continue;
    for (std::size_t j = 0; j < bg.size(); ++j) {
      const auto& gj = g.coeffs()[j];
      if (field.is_zero(gj)) continue;
      const Exponent e{bf[i].x + bg[j].x, bf[i].y + bg[j].y, bf[i].z + bg[j].z};
      auto& c = out.coeff(e);
      c = field.add(c, field.mul(fi, gj));
    }
  }
  return out;
}

/// Matrix of S_d → S_{d+deg f}, h ↦ h·f. Row i holds the coefficients of
/// (i-th monomial of degree d)·f.
template <ExactField F>
Matrix<F> multiplication_matrix(const F& field, const Form<F>& f, int d) {
  const MonomialBasis src(d), bf(f.degree());
  Matrix<F> m(src.size(), monomial_count(d + f.degree()));
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < bf.size(); ++j) {
      const auto& c = f.coeffs()[j];
      if (field.is_zero(c)) continue;
      const Exponent e{src[i].x + bf[j].x, src[i].y + bf[j].y, src[i].z + bf[j].z};
      m(i, monomial_index(e)) = c;
    }
  return m;
}

/// A point of the projective plane, normalized so that its last nonzero
/// coordinate is 1.
template <ExactField F>
class ProjPoint {
 public:
  using value_type = typename F::value_type;

  static ProjPoint make(const F& field, value_type x, value_type y, value_type z) {
    std::array<value_type, 3> c{std::move(x), std::move(y), std::move(z)};
    int last = 2;
    while (last >= 0 && field.is_zero(c[static_cast<std::size_t>(last)])) --last;
    if (last < 0) throw Error(ErrorCode::InvalidArgument, "the zero vector is not a projective point");
    const auto inv = field.inv(c[static_cast<std::size_t>(last)]);
    for (auto& v : c) v = field.mul(v, inv);
    ProjPoint p;
    p.coords_ = std::move(c);
    return p;
  }

  static ProjPoint from_ints(const F& field, long x, long y, long z) {
    return make(field, field.from_int(x), field.from_int(y), field.from_int(z));
  }

  const std::array<value_type, 3>& coords() const { return coords_; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

 private:
  std::array<value_type, 3> coords_;
};

/// Value of f at an affine representative (no normalization).
template <ExactField F>
typename F::value_type evaluate_at(const F& field, const Form<F>& f,
                                   const std::array<typename F::value_type, 3>& v) {
  const int d = f.degree();
  std::vector<typename F::value_type> px(static_cast<std::size_t>(d) + 1), py(px.size()), pz(px.size());
  px[0] = py[0] = pz[0] = field.one();
  for (std::size_t k = 1; k < px.size(); ++k) {
    px[k] = field.mul(px[k - 1], v[0]);
    py[k] = field.mul(py[k - 1], v[1]);
    pz[k] = field.mul(pz[k - 1], v[2]);
  }
  auto acc = field.zero();
  const MonomialBasis basis(d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& c = f.coeffs()[i];
    if (field.is_zero(c)) continue;
    const auto& e = basis[i];
    auto term = field.mul(c, field.mul(px[static_cast<std::size_t>(e.x)],
                                       field.mul(py[static_cast<std::size_t>(e.y)], pz[static_cast<std::size_t>(e.z)])));
    acc = field.add(acc, term);
  }
  return acc;
}

template <ExactField F>
typename F::value_type evaluate(const F& field, const Form<F>& f, const ProjPoint<F>& pt) {
  return evaluate_at(field, f, pt.coords());
}

/// Rows = points, columns = monomials of degree d; its kernel is the space
/// of degree-d forms through the points.
template <ExactField F>
Matrix<F> evaluation_matrix(const F& field, std::span<const ProjPoint<F>> points, int d) {
  const MonomialBasis basis(d);
  Matrix<F> m(points.size(), basis.size());
  const auto len = static_cast<std::size_t>(d) + 1;
  std::vector<typename F::value_type> px(len), py(len), pz(len);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& c = points[i].coords();
    px[0] = py[0] = pz[0] = field.one();
    for (std::size_t k = 1; k < len; ++k) {
      px[k] = field.mul(px[k - 1], c[0]);
      py[k] = field.mul(py[k - 1], c[1]);
      pz[k] = field.mul(pz[k - 1], c[2]);
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto& e = basis[j];
      m(i, j) = field.mul(px[static_cast<std::size_t>(e.x)],
                          field.mul(py[static_cast<std::size_t>(e.y)], pz[static_cast<std::size_t>(e.z)]));
    }
  }
  return m;
}

/// Determinant of a square matrix of forms whose entry degrees split as
/// u_i + v_j (so the result is homogeneous). Entries of negative prescribed
/// degree must be zero. Exact cofactor expansion, memoized on the set of
/// used columns.
template <ExactField F>
Form<F> poly_matrix_det(const F& field, const std::vector<std::vector<Form<F>>>& m,
                        const std::vector<std::vector<int>>& degrees) {
  const std::size_t n = m.size();
  if (n == 0) return Form<F>::constant(field.one());
  if (degrees.size() != n) throw Error(ErrorCode::InconsistentDegrees, "degree grid shape mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (m[i].size() != n || degrees[i].size() != n)
      throw Error(ErrorCode::InconsistentDegrees, "matrix of forms is not square");
  if (n > 16) throw Error(ErrorCode::InvalidArgument, "cofactor expansion limited to 16x16");

  std::vector<int> u(n), v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = degrees[0][j];
  for (std::size_t i = 0; i < n; ++i) u[i] = degrees[i][0] - degrees[0][0];
  int total = 0;
  for (std::size_t i = 0; i < n; ++i) total += u[i] + v[i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (degrees[i][j] != u[i] + v[j])
        throw Error(ErrorCode::InconsistentDegrees, "entry degrees are not of the form u_i + v_j");
      const bool zero = m[i][j].is_zero(field);
      if (degrees[i][j] < 0 && !zero)
        throw Error(ErrorCode::InconsistentDegrees, "nonzero entry with negative prescribed degree");
      if (!zero && m[i][j].degree() != degrees[i][j])
        throw Error(ErrorCode::InconsistentDegrees, "entry degree differs from the prescribed degree");
    }
  if (total < 0) throw Error(ErrorCode::InconsistentDegrees, "determinant would have negative degree");

  // memo[mask] = determinant of rows [popcount(mask), n) against the unused
  // columns; nullopt stands for the zero form.
  std::map<unsigned, std::optional<Form<F>>> memo;
  auto rec = [&](auto&& self, std::size_t row, unsigned used) -> std::optional<Form<F>> {
    if (row == n) return Form<F>::constant(field.one());
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    std::optional<Form<F>> acc;
    std::size_t position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (used & (1u << j)) continue;
      const bool negative = position++ % 2 == 1;
      if (degrees[row][j] < 0 || m[row][j].is_zero(field)) continue;
      auto minor = self(self, row + 1, used | (1u << j));
      if (!minor) continue;
      auto term = multiply(field, m[row][j], *minor);
      if (negative) term = scale(field, field.neg(field.one()), term);
      acc = acc ? add(field, *acc, term) : term;
    }
    memo[used] = acc;
    return acc;
  };
  auto det = rec(rec, 0, 0u);
  return det ? *det : Form<F>(total);
}

/// Human-readable rendering, e.g. "x^2 + 3*y*z".
template <ExactField F>
std::string to_string(const F& field, const Form<F>& f) {
  std::string out;
  const MonomialBasis basis(f.degree());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& c = f.coeffs()[i];
    if (field.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    const auto& e = basis[i];
    auto put = [&](char var, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    put('x', e.x);
    put('y', e.y);
    put('z', e.z);
    if (mono.empty()) {
      out += field.to_string(c);
    } else if (field.eq(c, field.one())) {
      out += mono;
    } else {
      out += field.to_string(c) + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace llab
