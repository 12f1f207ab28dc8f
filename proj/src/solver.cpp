#include "bqroot/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bqroot/error.hpp"
#include "bqroot/verify.hpp"

namespace bqroot {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr std::size_t kSelfCheckSamples = 3;

SolutionSet empty_set(CaseLabel label, int n) {
  SolutionSet out;
  out.label = label;
  out.metadata.n = n;
  return out;
}

void require_root_degree(int n) {
  if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
}

}  // namespace

std::string_view case_code(CaseLabel label) {
  switch (label) {
    case CaseLabel::ScalarInvertible: return "1a";
    case CaseLabel::ZeroQuaternion: return "1b";
    case CaseLabel::GenericInvertible: return "2a";
    case CaseLabel::GenericSingular: return "2b";
    case CaseLabel::NilpotentInvertible: return "3a";
    case CaseLabel::NilpotentSingular: return "3b";
  }
  return "?";
}

std::string_view case_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::ScalarInvertible: return "ScalarInvertible";
    case CaseLabel::ZeroQuaternion: return "ZeroQuaternion";
    case CaseLabel::GenericInvertible: return "GenericInvertible";
    case CaseLabel::GenericSingular: return "GenericSingular";
    case CaseLabel::NilpotentInvertible: return "NilpotentInvertible";
    case CaseLabel::NilpotentSingular: return "NilpotentSingular";
  }
  return "?";
}

Classification classify_detailed(const Biquaternion& a, double tol) {
  const double lin = linear_threshold(a, tol);
  const double quad = quadratic_threshold(a, tol);
  Classification out{CaseLabel::ZeroQuaternion};

  auto nonzero = [&](double magnitude, double threshold, BoundaryFlag flag) {
    if (magnitude <= threshold) return false;
    if (magnitude <= kBoundaryMargin * threshold) out.boundary_flags |= flag;
    return true;
  };

  if (!nonzero(max_abs(a.v), lin, kBoundaryVectorPart)) {
    out.label = nonzero(max_abs(a.s), lin, kBoundaryScalarPart) ? CaseLabel::ScalarInvertible
                                                                 : CaseLabel::ZeroQuaternion;
    return out;
  }
  if (!nonzero(std::abs(vec_square(a.v)), quad, kBoundaryVectorSquare)) {
    out.label = nonzero(max_abs(a.s), lin, kBoundaryScalarPart) ? CaseLabel::NilpotentInvertible
                                                                 : CaseLabel::NilpotentSingular;
    return out;
  }
  out.label = nonzero(std::abs(norm_form(a)), quad, kBoundaryNormForm) ? CaseLabel::GenericInvertible
                                                                        : CaseLabel::GenericSingular;
  return out;
}

SolutionSet solve_case_1a(Complex a0, int n) {
  SolutionSet out = empty_set(CaseLabel::ScalarInvertible, n);
  const auto roots = complex_nth_roots(a0, n).values;
  for (const Complex& w : roots) out.isolated.push_back(w * Biquaternion::identity());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Complex w1 = roots[i], w2 = roots[j];
      const Complex diff = w1 - w2;
      out.families.push_back({(w1 + w2) / 2.0, -diff * diff / 4.0, FamilyOrigin::PairOfRoots, w1, w2});
    }
  }
  return out;
}

SolutionSet solve_case_1b(int n) {
  SolutionSet out = empty_set(CaseLabel::ZeroQuaternion, n);
  out.isolated.push_back(Biquaternion::zero());
  out.families.push_back({Complex{}, Complex{}, FamilyOrigin::NullCone, Complex{}, Complex{}});
  return out;
}

SolutionSet solve_case_2a(const Biquaternion& a, int n, Branch branch) {
  SolutionSet out = empty_set(CaseLabel::GenericInvertible, n);
  const Complex s = complex_sqrt(vec_square(a.v), branch);
  const auto plus_roots = complex_nth_roots(a.s + kI * s, n).values;
  const auto minus_roots = complex_nth_roots(a.s - kI * s, n).values;
  // X = r1 (1/2, a/(2is)) + r2 (1/2, -a/(2is))
  const CVector3 direction = a.v / (2.0 * kI * s);
  out.isolated.reserve(plus_roots.size() * minus_roots.size());
  for (const Complex& r1 : plus_roots) {
    for (const Complex& r2 : minus_roots) {
      out.isolated.push_back({(r1 + r2) / 2.0, (r1 - r2) * direction});
    }
  }
  return out;
}

SolutionSet solve_case_2b(const Biquaternion& a, int n) {
  SolutionSet out = empty_set(CaseLabel::GenericSingular, n);
  const CVector3 direction = a.v / a.s;
  for (const Complex& r : complex_nth_roots(2.0 * a.s, n).values) {
    out.isolated.push_back((r / 2.0) * Biquaternion{1.0, direction});
  }
  return out;
}

SolutionSet solve_case_3a(const Biquaternion& a, int n) {
  SolutionSet out = empty_set(CaseLabel::NilpotentInvertible, n);
  const CVector3 direction = a.v / (static_cast<double>(n) * a.s);
  for (const Complex& w : complex_nth_roots(a.s, n).values) {
    out.isolated.push_back(w * Biquaternion{1.0, direction});
  }
  return out;
}

SolutionSet solve_case_3b(int n) {
  SolutionSet out = empty_set(CaseLabel::NilpotentSingular, n);
  // A is nilpotent of index 2, so any root would be nilpotent of index > n >= 2,
  // which no q-matrix is.
  out.insoluble = "insoluble: nilpotent with zero scalar part";
  return out;
}

SolutionSet solve_nth_root(const Biquaternion& a, int n, double tol, Branch branch) {
  require_root_degree(n);
  if (!is_finite(a)) throw DomainError("solve_nth_root: input has non-finite components");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("solve_nth_root: tol must be positive");

  const Classification cls = classify_detailed(a, tol);
  SolutionSet out;
  switch (cls.label) {
    case CaseLabel::ScalarInvertible: out = solve_case_1a(a.s, n); break;
    case CaseLabel::ZeroQuaternion: out = solve_case_1b(n); break;
    case CaseLabel::GenericInvertible: out = solve_case_2a(a, n, branch); break;
    case CaseLabel::GenericSingular: out = solve_case_2b(a, n); break;
    case CaseLabel::NilpotentInvertible: out = solve_case_3a(a, n); break;
    case CaseLabel::NilpotentSingular: out = solve_case_3b(n); break;
  }
  out.metadata.n = n;
  out.metadata.branch = branch;
  out.metadata.tol = tol;
  out.metadata.boundary_flags = cls.boundary_flags;

  double worst = 0.0;
  for (const Biquaternion& x : out.isolated) worst = std::max(worst, residual(x, n, a));
  for (const SolutionFamily& f : out.families) {
    for (std::size_t k = 0; k < kSelfCheckSamples; ++k) {
      worst = std::max(worst, residual(sample_family_deterministic(f, k), n, a));
    }
  }
  out.metadata.self_check_max_residual = worst;
  out.metadata.self_check_passed = worst <= tol;
  return out;
}

Biquaternion sample_family(const SolutionFamily& f, Complex p1, Complex p2, Branch branch) {
  return {f.x0, CVector3{p1, p2, complex_sqrt(f.c - p1 * p1 - p2 * p2, branch)}};
}

Biquaternion sample_family_deterministic(const SolutionFamily& f, std::size_t k, Branch branch) {
  // Golden-angle walk; magnitudes follow sqrt|c| so samples stay well scaled.
  constexpr double kGoldenAngle = 2.399963229728653;
  const double scale = 0.5 * (1.0 + std::sqrt(std::abs(f.c)));
  const double theta = kGoldenAngle * static_cast<double>(k + 1);
  const Complex p1 = std::polar(1.2 * scale, theta);
  const Complex p2 = std::polar(0.8 * scale, 2.1 * theta + 1.0);
  return sample_family(f, p1, p2, branch);
}

std::size_t family_count_for(int n) {
  if (n < 2) return 0;
  const auto m = static_cast<std::size_t>(n);
  return m * (m - 1) / 2;
}

}  // namespace bqroot
