#include "bqroot/biquaternion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bqroot/error.hpp"

namespace bqroot {

CVector3 operator+(const CVector3& a, const CVector3& b) { return {a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3}; }
CVector3 operator-(const CVector3& a, const CVector3& b) { return {a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3}; }
CVector3 operator-(const CVector3& a) { return {-a.c1, -a.c2, -a.c3}; }
CVector3 operator*(Complex k, const CVector3& a) { return {k * a.c1, k * a.c2, k * a.c3}; }
CVector3 operator*(const CVector3& a, Complex k) { return k * a; }
CVector3 operator/(const CVector3& a, Complex k) { return {a.c1 / k, a.c2 / k, a.c3 / k}; }

Complex dot(const CVector3& a, const CVector3& b) { return a.c1 * b.c1 + a.c2 * b.c2 + a.c3 * b.c3; }

CVector3 cross(const CVector3& a, const CVector3& b) {
  return {a.c2 * b.c3 - a.c3 * b.c2, a.c3 * b.c1 - a.c1 * b.c3, a.c1 * b.c2 - a.c2 * b.c1};
}

Biquaternion operator+(const Biquaternion& a, const Biquaternion& b) { return {a.s + b.s, a.v + b.v}; }
Biquaternion operator-(const Biquaternion& a, const Biquaternion& b) { return {a.s - b.s, a.v - b.v}; }
Biquaternion operator-(const Biquaternion& a) { return {-a.s, -a.v}; }
Biquaternion operator*(Complex k, const Biquaternion& a) { return {k * a.s, k * a.v}; }
Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) { return quat_mul(a, b); }

Biquaternion quat_mul(const Biquaternion& a, const Biquaternion& b) {
  return {a.s * b.s - dot(a.v, b.v), a.s * b.v + b.s * a.v + cross(a.v, b.v)};
}

Biquaternion quat_pow(const Biquaternion& x, int n) {
  if (n < 1) {
    throw DomainError("quat_pow: exponent must be >= 1, got " + std::to_string(n));
  }
  Biquaternion result = x;
  for (int k = 1; k < n; ++k) {
    result = quat_mul(result, x);
  }
  return result;
}

Complex vec_square(const CVector3& v) { return dot(v, v); }

Complex norm_form(const Biquaternion& a) { return a.s * a.s + vec_square(a.v); }

Complex complex_sqrt(Complex z, Branch branch) {
  // Normalize -0 imaginary parts so the negative real axis maps to +i.
  const Complex principal = std::sqrt(Complex{z.real(), z.imag() == 0.0 ? 0.0 : z.imag()});
  return branch == Branch::Principal ? principal : -principal;
}

NthRoots complex_nth_roots(Complex z, int n) {
  if (n < 1) {
    throw DomainError("complex_nth_roots: n must be >= 1, got " + std::to_string(n));
  }
  NthRoots out;
  if (z == Complex{}) {
    out.values.push_back(Complex{});
    out.zero_collapsed = true;
    return out;
  }
  const double modulus = std::pow(std::abs(z), 1.0 / n);
  const double base = std::arg(Complex{z.real(), z.imag() == 0.0 ? 0.0 : z.imag()}) / n;
  out.values.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    out.values.push_back(std::polar(modulus, base + 2.0 * std::numbers::pi * k / n));
  }
  // Snap exact axis hits (1, i, -1, -i scaled) produced by cos/sin rounding.
  for (auto& w : out.values) {
    const double eps = 4.0 * std::numeric_limits<double>::epsilon() * modulus;
    if (std::abs(w.real()) < eps) w.real(0.0);
    if (std::abs(w.imag()) < eps) w.imag(0.0);
  }
  return out;
}

double max_abs(Complex z) { return std::max(std::abs(z.real()), std::abs(z.imag())); }

double max_abs(const CVector3& v) { return std::max({max_abs(v.c1), max_abs(v.c2), max_abs(v.c3)}); }

double max_abs(const Biquaternion& a) { return std::max(max_abs(a.s), max_abs(a.v)); }

double distance(const Biquaternion& a, const Biquaternion& b) { return max_abs(a - b); }

bool is_finite(const Biquaternion& a) {
  for (const Complex& c : a.components()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

}  // namespace bqroot
