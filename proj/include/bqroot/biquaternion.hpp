#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace bqroot {

using Complex = std::complex<double>;

// Which square root of a complex number to use.
enum class Branch {
  Principal,  // nonnegative real part; +i*sqrt|z| on the negative real axis
  Negated,    // minus the principal root
};

// Complex 3-vector. Over C the square c1^2 + c2^2 + c3^2 may vanish for a
// nonzero vector (null / isotropic vectors).
struct CVector3 {
  Complex c1{}, c2{}, c3{};

  constexpr Complex& operator[](std::size_t i) { return i == 0 ? c1 : (i == 1 ? c2 : c3); }
  constexpr const Complex& operator[](std::size_t i) const {
    return i == 0 ? c1 : (i == 1 ? c2 : c3);
  }

  friend constexpr bool operator==(const CVector3&, const CVector3&) = default;
};

CVector3 operator+(const CVector3& a, const CVector3& b);
CVector3 operator-(const CVector3& a, const CVector3& b);
CVector3 operator-(const CVector3& a);
CVector3 operator*(Complex k, const CVector3& a);
CVector3 operator*(const CVector3& a, Complex k);
CVector3 operator/(const CVector3& a, Complex k);

// Bilinear dot product (no conjugation).
Complex dot(const CVector3& a, const CVector3& b);
CVector3 cross(const CVector3& a, const CVector3& b);

/// A quaternion with complex coefficients: scalar part `s` and vector part
/// `v`. The complex unit commutes with the quaternion units.
struct Biquaternion {
  Complex s{};
  CVector3 v{};

  constexpr Biquaternion() = default;
  constexpr Biquaternion(Complex scalar, CVector3 vec) : s(scalar), v(vec) {}
  constexpr Biquaternion(Complex a0, Complex a1, Complex a2, Complex a3) : s(a0), v{a1, a2, a3} {}

  static constexpr Biquaternion identity() { return {Complex{1.0}, CVector3{}}; }
  static constexpr Biquaternion zero() { return {}; }

  // Components in the order (a0, a1, a2, a3).
  constexpr Complex& operator[](std::size_t i) { return i == 0 ? s : v[i - 1]; }
  constexpr const Complex& operator[](std::size_t i) const { return i == 0 ? s : v[i - 1]; }

  std::array<Complex, 4> components() const { return {s, v.c1, v.c2, v.c3}; }

  friend constexpr bool operator==(const Biquaternion&, const Biquaternion&) = default;
};

Biquaternion operator+(const Biquaternion& a, const Biquaternion& b);
Biquaternion operator-(const Biquaternion& a, const Biquaternion& b);
Biquaternion operator-(const Biquaternion& a);
Biquaternion operator*(Complex k, const Biquaternion& a);
Biquaternion operator*(const Biquaternion& a, const Biquaternion& b);

/// Quaternion product: (a0 b0 - a.b, a0 b + b0 a + a x b).
Biquaternion quat_mul(const Biquaternion& a, const Biquaternion& b);

/// X multiplied with itself n times. Throws DomainError for n < 1.
Biquaternion quat_pow(const Biquaternion& x, int n);

// c1^2 + c2^2 + c3^2
Complex vec_square(const CVector3& v);

/// a0^2 + a^2. Zero exactly when the biquaternion has no inverse; it is the
/// constant term of the minimal polynomial and multiplicative under quat_mul.
Complex norm_form(const Biquaternion& a);

Complex complex_sqrt(Complex z, Branch branch = Branch::Principal);

// All n-th roots of z. For z != 0 there are n distinct values, ordered by
// increasing argument starting at the principal root |z|^(1/n) e^(i arg(z)/n).
// For z == 0 the list collapses to a single 0 and `zero_collapsed` is set.
struct NthRoots {
  std::vector<Complex> values;
  bool zero_collapsed = false;
};

NthRoots complex_nth_roots(Complex z, int n);

// Largest |re| or |im| over all components.
double max_abs(Complex z);
double max_abs(const CVector3& v);
double max_abs(const Biquaternion& a);

// max_abs(a - b): the componentwise distance used for every set comparison.
double distance(const Biquaternion& a, const Biquaternion& b);

bool is_finite(const Biquaternion& a);

}  // namespace bqroot
