#include "bqroot/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bqroot/error.hpp"

namespace bqroot {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix4C from_rows(const std::array<std::array<Complex, 4>, 4>& rows) {
  Matrix4C m;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

const char* subcase_name(Subcase s) {
  switch (s) {
    case Subcase::A: return "a2^2+a3^2";
    case Subcase::B: return "a1^2+a3^2";
    case Subcase::C: return "a1^2+a2^2";
    case Subcase::NotApplicable: break;
  }
  return "n/a";
}

// U and Uinv for the diagonalizable kind. Columns of U are eigenvectors taken
// from C(a0 + i s) (first pair) and C(a0 - i s) (second pair); Uinv is the
// adjugate over the determinant 4 q s^2, reduced with s^2 = a^2.
void diagonalizable_transform(const CVector3& v, Complex s, Subcase sub, Complex q,
                              Matrix4C& u, Matrix4C& uinv) {
  const Complex a1 = v.c1, a2 = v.c2, a3 = v.c3;
  const Complex is = kI * s;
  const Complex iq = kI * q;
  switch (sub) {
    case Subcase::A:
      u = from_rows({{{is, -a1, -a2, -a3},
                      {a1, is, -a3, a2},
                      {a2, a3, -is, -a1},
                      {a3, -a2, a1, -is}}});
      uinv = from_rows({{{-iq, 0.0, a2 * s - kI * a1 * a3, a3 * s + kI * a1 * a2},
                         {0.0, -iq, a3 * s + kI * a1 * a2, -a2 * s + kI * a1 * a3},
                         {-a2 * s - kI * a1 * a3, -a3 * s + kI * a1 * a2, iq, 0.0},
                         {-a3 * s + kI * a1 * a2, a2 * s + kI * a1 * a3, 0.0, iq}}});
      break;
    case Subcase::B:
      u = from_rows({{{is, -a2, -a1, -a3},
                      {a1, -a3, -is, a2},
                      {a2, is, a3, -a1},
                      {a3, a1, -a2, -is}}});
      uinv = from_rows({{{-iq, a1 * s + kI * a2 * a3, 0.0, a3 * s - kI * a1 * a2},
                         {0.0, -a3 * s + kI * a1 * a2, -iq, a1 * s + kI * a2 * a3},
                         {-a1 * s + kI * a2 * a3, iq, a3 * s + kI * a1 * a2, 0.0},
                         {-a3 * s - kI * a1 * a2, 0.0, -a1 * s + kI * a2 * a3, iq}}});
      break;
    case Subcase::C:
      u = from_rows({{{is, -a3, -a1, -a2},
                      {a1, a2, -is, -a3},
                      {a2, -a1, a3, -is},
                      {a3, is, -a2, a1}}});
      uinv = from_rows({{{-iq, a1 * s - kI * a2 * a3, a2 * s + kI * a1 * a3, 0.0},
                         {0.0, a2 * s + kI * a1 * a3, -a1 * s + kI * a2 * a3, -iq},
                         {-a1 * s - kI * a2 * a3, iq, 0.0, -a2 * s + kI * a1 * a3},
                         {-a2 * s + kI * a1 * a3, 0.0, iq, a1 * s + kI * a2 * a3}}});
      break;
    case Subcase::NotApplicable:
      throw DomainError("diagonalizable transform needs a subcase");
  }
  uinv = (1.0 / (2.0 * q * s)) * uinv;
}

// U and Uinv for the nilpotent kind: columns are C(a0) e_j, e_j for the two
// selected basis vectors. det U = q, independent of a^2.
void nilpotent_transform(const CVector3& v, Subcase sub, Complex q, Matrix4C& u, Matrix4C& uinv) {
  const Complex a1 = v.c1, a2 = v.c2, a3 = v.c3;
  switch (sub) {
    case Subcase::A:
      u = from_rows({{{0.0, 1.0, -a1, 0.0},
                      {a1, 0.0, 0.0, 1.0},
                      {a2, 0.0, a3, 0.0},
                      {a3, 0.0, -a2, 0.0}}});
      uinv = from_rows({{{0.0, 0.0, a2, a3},
                         {q, 0.0, a1 * a3, -a1 * a2},
                         {0.0, 0.0, a3, -a2},
                         {0.0, q, -a1 * a2, -a1 * a3}}});
      break;
    case Subcase::B:
      u = from_rows({{{0.0, 1.0, -a2, 0.0},
                      {a1, 0.0, -a3, 0.0},
                      {a2, 0.0, 0.0, 1.0},
                      {a3, 0.0, a1, 0.0}}});
      uinv = from_rows({{{0.0, a1, 0.0, a3},
                         {q, -a2 * a3, 0.0, a1 * a2},
                         {0.0, -a3, 0.0, a1},
                         {0.0, -a1 * a2, q, -a2 * a3}}});
      break;
    case Subcase::C:
      u = from_rows({{{0.0, 1.0, -a3, 0.0},
                      {a1, 0.0, a2, 0.0},
                      {a2, 0.0, -a1, 0.0},
                      {a3, 0.0, 0.0, 1.0}}});
      uinv = from_rows({{{0.0, a1, a2, 0.0},
                         {q, a2 * a3, -a1 * a3, 0.0},
                         {0.0, a2, -a1, 0.0},
                         {0.0, -a1 * a3, -a2 * a3, q}}});
      break;
    case Subcase::NotApplicable:
      throw DomainError("nilpotent transform needs a subcase");
  }
  uinv = (1.0 / q) * uinv;
}

JordanDecomposition decompose(const Biquaternion& a, Subcase sub, double tol, Branch branch) {
  const Complex q = subcase_discriminants(a.v)[static_cast<std::size_t>(sub)];
  if (std::abs(q) <= quadratic_threshold(a, tol)) {
    throw DegenerateSubcase(std::string("jordan_form: ") + subcase_name(sub) +
                            " vanishes for a nonzero vector part");
  }
  JordanDecomposition d;
  d.subcase = sub;
  const Complex a0 = a.s;
  if (std::abs(vec_square(a.v)) <= quadratic_threshold(a, tol)) {
    d.kind = JordanKind::Nilpotent2;
    d.eigenvalues = {a0, a0};
    d.J = Matrix4C::diagonal(a0, a0, a0, a0);
    d.J(0, 1) = 1.0;
    d.J(2, 3) = 1.0;
    nilpotent_transform(a.v, sub, q, d.U, d.Uinv);
  } else {
    const Complex s = complex_sqrt(vec_square(a.v), branch);
    d.kind = JordanKind::Diagonalizable;
    d.eigenvalues = {a0 + kI * s, a0 - kI * s};
    d.J = Matrix4C::diagonal(d.eigenvalues[0], d.eigenvalues[0], d.eigenvalues[1], d.eigenvalues[1]);
    diagonalizable_transform(a.v, s, sub, q, d.U, d.Uinv);
  }
  return d;
}

}  // namespace

Matrix4C Matrix4C::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

Matrix4C Matrix4C::diagonal(Complex d0, Complex d1, Complex d2, Complex d3) {
  Matrix4C m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

double Matrix4C::max_abs() const {
  double out = 0.0;
  for (const Complex& z : data_) out = std::max(out, bqroot::max_abs(z));
  return out;
}

Matrix4C operator+(const Matrix4C& a, const Matrix4C& b) {
  Matrix4C m;
  for (std::size_t k = 0; k < 16; ++k) m.data_[k] = a.data_[k] + b.data_[k];
  return m;
}

Matrix4C operator-(const Matrix4C& a, const Matrix4C& b) {
  Matrix4C m;
  for (std::size_t k = 0; k < 16; ++k) m.data_[k] = a.data_[k] - b.data_[k];
  return m;
}

Matrix4C operator*(const Matrix4C& a, const Matrix4C& b) {
  Matrix4C m;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      Complex acc{};
      for (std::size_t k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
      m(r, c) = acc;
    }
  }
  return m;
}

Matrix4C operator*(Complex k, const Matrix4C& a) {
  Matrix4C m;
  for (std::size_t i = 0; i < 16; ++i) m.data_[i] = k * a.data_[i];
  return m;
}

std::array<Complex, 4> operator*(const Matrix4C& m, const std::array<Complex, 4>& col) {
  std::array<Complex, 4> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t k = 0; k < 4; ++k) out[r] += m(r, k) * col[k];
  }
  return out;
}

Complex PolyCoeffs::operator()(Complex y) const {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * y + *it;
  return acc;
}

Matrix4C to_qmatrix(const Biquaternion& a) {
  const Complex a0 = a.s, a1 = a.v.c1, a2 = a.v.c2, a3 = a.v.c3;
  return from_rows({{{a0, -a1, -a2, -a3},
                     {a1, a0, -a3, a2},
                     {a2, a3, a0, -a1},
                     {a3, -a2, a1, a0}}});
}

Biquaternion from_qmatrix(const Matrix4C& m, double tol) {
  const Biquaternion a{m(0, 0), m(1, 0), m(2, 0), m(3, 0)};
  const double mismatch = (to_qmatrix(a) - m).max_abs();
  if (!(mismatch <= tol * (1.0 + m.max_abs()))) {
    throw NotAQMatrix("from_qmatrix: entries deviate from the q-matrix pattern by " +
                      std::to_string(mismatch));
  }
  return a;
}

PolyCoeffs char_poly(const Biquaternion& a) {
  const Complex a0 = a.s;
  const Complex nf = norm_form(a);
  return {{nf * nf, -4.0 * a0 * nf, 4.0 * a0 * a0 + 2.0 * nf, -4.0 * a0, 1.0}};
}

PolyCoeffs min_poly(const Biquaternion& a, double tol) {
  if (max_abs(a.v) <= linear_threshold(a, tol)) return {{-a.s, 1.0}};
  return {{norm_form(a), -2.0 * a.s, 1.0}};
}

Matrix4C reduced_adjugate(const Biquaternion& a, Complex y) {
  return (y - 2.0 * a.s) * Matrix4C::identity() + to_qmatrix(a);
}

std::array<Complex, 2> eigenvalues(const Biquaternion& a, Branch branch) {
  const Complex is = kI * complex_sqrt(vec_square(a.v), branch);
  return {a.s + is, a.s - is};
}

std::array<Complex, 3> subcase_discriminants(const CVector3& v) {
  const Complex s1 = v.c1 * v.c1, s2 = v.c2 * v.c2, s3 = v.c3 * v.c3;
  return {s2 + s3, s1 + s3, s1 + s2};
}

double linear_threshold(const Biquaternion& a, double tol) { return tol * (1.0 + max_abs(a)); }

double quadratic_threshold(const Biquaternion& a, double tol) {
  const double scale = 1.0 + max_abs(a);
  return tol * scale * scale;
}

JordanDecomposition jordan_form(const Biquaternion& a, double tol, Branch branch) {
  if (max_abs(a.v) <= linear_threshold(a, tol)) {
    JordanDecomposition d;
    d.kind = JordanKind::Scalar;
    d.J = Matrix4C::diagonal(a.s, a.s, a.s, a.s);
    d.U = Matrix4C::identity();
    d.Uinv = Matrix4C::identity();
    d.eigenvalues = {a.s, a.s};
    return d;
  }
  const auto q = subcase_discriminants(a.v);
  std::size_t best = 0;
  for (std::size_t k = 1; k < 3; ++k) {
    if (std::abs(q[k]) > std::abs(q[best])) best = k;
  }
  return decompose(a, static_cast<Subcase>(best), tol, branch);
}

JordanDecomposition jordan_form_for_subcase(const Biquaternion& a, Subcase subcase, double tol,
                                            Branch branch) {
  if (subcase == Subcase::NotApplicable) {
    throw DomainError("jordan_form_for_subcase: a subcase must be given");
  }
  if (max_abs(a.v) <= linear_threshold(a, tol)) {
    throw DomainError("jordan_form_for_subcase: vector part is zero, no subcase applies");
  }
  return decompose(a, subcase, tol, branch);
}

}  // namespace bqroot
