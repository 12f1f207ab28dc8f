#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bqroot/biquaternion.hpp"

namespace bqroot {

/// Dense 4x4 complex matrix, row-major.
class Matrix4C {
 public:
  constexpr Matrix4C() = default;

  static Matrix4C identity();
  static Matrix4C diagonal(Complex d0, Complex d1, Complex d2, Complex d3);

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * 4 + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * 4 + col]; }

  const std::array<Complex, 16>& data() const { return data_; }

  // Largest |re| or |im| over all entries.
  double max_abs() const;

  friend Matrix4C operator+(const Matrix4C& a, const Matrix4C& b);
  friend Matrix4C operator-(const Matrix4C& a, const Matrix4C& b);
  friend Matrix4C operator*(const Matrix4C& a, const Matrix4C& b);
  friend Matrix4C operator*(Complex k, const Matrix4C& a);
  friend std::array<Complex, 4> operator*(const Matrix4C& m, const std::array<Complex, 4>& col);
  friend bool operator==(const Matrix4C&, const Matrix4C&) = default;

 private:
  std::array<Complex, 16> data_{};
};

// Polynomial coefficients in ascending degree: coeffs[k] multiplies y^k.
struct PolyCoeffs {
  std::vector<Complex> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Complex operator()(Complex y) const;
};

enum class JordanKind { Scalar, Diagonalizable, Nilpotent2 };

// Which pair of components drives the transformation matrix:
// A: a2^2 + a3^2, B: a1^2 + a3^2, C: a1^2 + a2^2.
enum class Subcase { A, B, C, NotApplicable };

struct JordanDecomposition {
  JordanKind kind = JordanKind::Scalar;
  Matrix4C J;
  Matrix4C U;
  Matrix4C Uinv;
  // Each of multiplicity two; equal for Scalar and Nilpotent2.
  std::array<Complex, 2> eigenvalues{};
  Subcase subcase = Subcase::NotApplicable;
};

inline constexpr double kDefaultTol = 1e-9;

/// Left-multiplication matrix of `a`: to_qmatrix(a) * col(b) == col(a * b).
Matrix4C to_qmatrix(const Biquaternion& a);

/// Inverse of to_qmatrix. Reads column 1 and checks every entry against the
/// q-matrix pattern within tol * (1 + max_abs(m)); throws NotAQMatrix if the
/// pattern is violated.
Biquaternion from_qmatrix(const Matrix4C& m, double tol = kDefaultTol);

/// (y^2 - 2 a0 y + a0^2 + a^2)^2, five coefficients.
PolyCoeffs char_poly(const Biquaternion& a);

/// y - a0 when the vector part vanishes (within tol), otherwise
/// y^2 - 2 a0 y + a0^2 + a^2.
PolyCoeffs min_poly(const Biquaternion& a, double tol = kDefaultTol);

/// C(y) = (y - 2 a0) E + to_qmatrix(a); satisfies
/// (y E - A) C(y) = m(y) E with m the quadratic minimal polynomial.
Matrix4C reduced_adjugate(const Biquaternion& a, Complex y);

/// (a0 + i s, a0 - i s) with s = complex_sqrt(a^2, branch).
std::array<Complex, 2> eigenvalues(const Biquaternion& a, Branch branch = Branch::Principal);

/// Closed-form Jordan decomposition to_qmatrix(a) = U J Uinv.
///
/// Kind is chosen from the vector part: zero gives Scalar, nonzero with
/// a^2 != 0 gives Diagonalizable (J = diag(l+, l+, l-, l-)), nonzero with
/// a^2 == 0 gives Nilpotent2 (two 2x2 Jordan blocks at a0). For the last two
/// the subcase with the largest |a_j^2 + a_k^2| is used. Throws
/// DegenerateSubcase when all three of those sums vanish within tolerance.
JordanDecomposition jordan_form(const Biquaternion& a, double tol = kDefaultTol,
                                Branch branch = Branch::Principal);

// Same as jordan_form but with the subcase fixed by the caller. Throws
// DegenerateSubcase if the chosen pair sum vanishes, DomainError if the
// vector part is zero.
JordanDecomposition jordan_form_for_subcase(const Biquaternion& a, Subcase subcase,
                                            double tol = kDefaultTol,
                                            Branch branch = Branch::Principal);

// The three pair sums (a2^2+a3^2, a1^2+a3^2, a1^2+a2^2) indexed by Subcase.
std::array<Complex, 3> subcase_discriminants(const CVector3& v);

// Tolerance scales shared with the solver: linear quantities are compared
// against tol * (1 + |A|), quadratic ones against tol * (1 + |A|)^2.
double linear_threshold(const Biquaternion& a, double tol);
double quadratic_threshold(const Biquaternion& a, double tol);

}  // namespace bqroot
