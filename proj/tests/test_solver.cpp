#include <doctest.h>

#include <cmath>

#include "bqroot/error.hpp"
#include "bqroot/solver.hpp"
#include "bqroot/verify.hpp"
#include "oracles.hpp"
#include "reference_roots.hpp"

using namespace bqroot;
using bqroot::test::kI;
using bqroot::test::kSqrt3;
using bqroot::test::Rng;

namespace {

bool contains(const SolutionSet& set, const Biquaternion& x, double tol) {
  for (const Biquaternion& r : set.isolated) {
    if (distance(r, x) <= tol) return true;
  }
  return false;
}

Biquaternion random_generic_input(Rng& rng) {
  while (true) {
    const Biquaternion a = rng.quat();
    const Classification c = classify_detailed(a);
    if (c.label == CaseLabel::GenericInvertible && c.boundary_flags == kBoundaryNone &&
        std::abs(vec_square(a.v)) > 1e-3) {
      return a;
    }
  }
}

}  // namespace

TEST_CASE("classify examples") {
  CHECK(classify(test::generic_input()) == CaseLabel::GenericInvertible);
  CHECK(classify(test::insoluble_input()) == CaseLabel::NilpotentSingular);
  CHECK(classify({7.0, 0.0, 0.0, 0.0}) == CaseLabel::ScalarInvertible);
  CHECK(classify(Biquaternion::zero()) == CaseLabel::ZeroQuaternion);
  CHECK(classify(test::singular_input()) == CaseLabel::GenericSingular);
  CHECK(classify(test::nilpotent_input()) == CaseLabel::NilpotentInvertible);

  CHECK(case_code(CaseLabel::GenericSingular) == "2b");
  CHECK(case_name(CaseLabel::NilpotentSingular) == "NilpotentSingular");
}

TEST_CASE("classify respects the scale-aware tolerance") {
  // a^2 of size 1e-12 on a unit-scale input counts as zero at tol 1e-9 ...
  const Biquaternion tiny{1.0, 1.0, Complex{0.0, 1.0} * std::sqrt(1.0 + 1e-12), 0.0};
  CHECK(classify(tiny) == CaseLabel::NilpotentInvertible);
  // ... and as nonzero at a much tighter tolerance.
  CHECK(classify(tiny, 1e-14) == CaseLabel::GenericInvertible);

  // A vector part of 1e-8 is nonzero, but its square is below the quadratic
  // threshold: numerically a Jordan block.
  const Classification block = classify_detailed({1.0, 1e-8, 0.0, 0.0});
  CHECK(block.label == CaseLabel::NilpotentInvertible);
  CHECK((block.boundary_flags & kBoundaryVectorPart) != 0);

  const Classification near = classify_detailed({1.0, 1e-4, 0.0, 0.0});
  CHECK(near.label == CaseLabel::GenericInvertible);
  CHECK((near.boundary_flags & kBoundaryVectorSquare) != 0);
  CHECK((near.boundary_flags & kBoundaryVectorPart) == 0);

  CHECK(classify_detailed(test::generic_input()).boundary_flags == kBoundaryNone);
  CHECK(classify({1e-12, 0.0, 0.0, 0.0}) == CaseLabel::ZeroQuaternion);
}

TEST_CASE("solve_nth_root: generic invertible worked example") {
  const SolutionSet set = solve_nth_root(test::generic_input(), 3);
  CHECK(set.label == CaseLabel::GenericInvertible);
  REQUIRE(set.isolated.size() == 9);
  CHECK(set.families.empty());
  CHECK(set.metadata.self_check_passed);
  const auto listed = test::generic_cube_roots_reference();
  for (std::size_t k : {0u, 1u, 2u, 4u, 5u, 7u, 8u}) CHECK(contains(set, listed[k], 1e-12));
  CHECK_FALSE(contains(set, listed[3], 1e-3));
  CHECK_FALSE(contains(set, listed[6], 1e-3));
  // The corrected fourth root: second component (-30 sqrt3 - 66i) / 49.
  const Biquaternion x4{(1.0 + 5.0 * kI * kSqrt3) / 4.0, (-30.0 * kSqrt3 - 66.0 * kI) / 49.0,
                        (-15.0 * kSqrt3 - 33.0 * kI) / 49.0, (205.0 * kSqrt3 + 451.0 * kI) / 196.0};
  CHECK(contains(set, x4, 1e-12));
  for (const auto& x : set.isolated) CHECK(residual(x, 3, test::generic_input()) <= 1e-12);
}

TEST_CASE("solve_nth_root: nilpotent invertible worked example") {
  const SolutionSet set = solve_nth_root(test::nilpotent_input(), 4);
  CHECK(set.label == CaseLabel::NilpotentInvertible);
  REQUIRE(set.isolated.size() == 4);
  const auto want = test::nilpotent_fourth_roots();
  const SetMatch m = match_sets(set.isolated, want, 1e-12);
  CHECK(m.matched);
  // Principal root first, then increasing argument: 1, i, -1, -i.
  CHECK(distance(set.isolated[0], want[0]) <= 1e-12);
  CHECK(distance(set.isolated[1], want[2]) <= 1e-12);
}

TEST_CASE("solve_nth_root: insoluble") {
  for (int n : {2, 3, 4, 7}) {
    const SolutionSet set = solve_nth_root(test::insoluble_input(), n);
    CHECK(set.label == CaseLabel::NilpotentSingular);
    CHECK(set.is_insoluble());
    CHECK(set.isolated.empty());
    CHECK(set.families.empty());
  }
}

TEST_CASE("insoluble input has no root within reach of a random search") {
  const Biquaternion a = test::insoluble_input();
  Rng rng(41);
  for (int n : {2, 3}) {
    double best = 1e300;
    for (int k = 0; k < 20000; ++k) {
      const Biquaternion x = rng.quat(3.0);
      best = std::min(best, residual(x, n, a));
    }
    CHECK(best > 1e-3);
  }
  // A root would have both eigenvalues 0, i.e. x0 = 0 and x^2 = 0, but those
  // square to zero.
  for (int k = 0; k < 100; ++k) {
    const Biquaternion x{0.0, rng.null_vector()};
    CHECK(max_abs(quat_pow(x, 2)) <= 1e-14);
  }
}

TEST_CASE("solve_nth_root: singular worked example") {
  const SolutionSet set = solve_nth_root(test::singular_input(), 3);
  CHECK(set.label == CaseLabel::GenericSingular);
  REQUIRE(set.isolated.size() == 3);
  const auto listed = test::singular_cube_roots_reference();
  CHECK(contains(set, listed[0], 1e-12));
  // The listed second and third roots agree with ours except for the last
  // component's real part.
  for (std::size_t k = 1; k < 3; ++k) {
    bool found = false;
    for (const auto& x : set.isolated) {
      const bool first_three = std::abs(x.s - listed[k].s) <= 1e-12 && std::abs(x.v.c1 - listed[k].v.c1) <= 1e-12 &&
                               std::abs(x.v.c2 - listed[k].v.c2) <= 1e-12;
      if (first_three) {
        found = true;
        CHECK(std::abs(x.v.c3.imag() - listed[k].v.c3.imag()) <= 1e-12);
        CHECK(std::abs(std::abs(x.v.c3.real() - listed[k].v.c3.real()) - 0.5) <= 1e-12);
      }
    }
    CHECK(found);
    CHECK(residual(listed[k], 3, test::singular_input()) > 1e-3);
  }
  for (const auto& x : set.isolated) CHECK(residual(x, 3, test::singular_input()) <= 1e-12);
}

TEST_CASE("solve_case_1a") {
  const Complex a0{7.0, 0.0};
  const SolutionSet two = solve_case_1a(a0, 2);
  REQUIRE(two.isolated.size() == 2);
  CHECK(contains(two, std::sqrt(7.0) * Biquaternion::identity(), 1e-14));
  CHECK(contains(two, -std::sqrt(7.0) * Biquaternion::identity(), 1e-14));
  REQUIRE(two.families.size() == 1);
  CHECK(std::abs(two.families[0].x0) <= 1e-15);
  CHECK(std::abs(two.families[0].c - (-a0)) <= 1e-14);
  CHECK(two.families[0].origin == FamilyOrigin::PairOfRoots);

  const Complex b0{-3.0, 2.0};
  const SolutionSet three = solve_case_1a(b0, 3);
  REQUIRE(three.families.size() == 3);
  const Complex w1 = complex_nth_roots(b0, 3).values[0];
  const Complex omega{-0.5, 0.5 * kSqrt3};
  // Pairs in lexicographic order: (w1, w2), (w1, w3), (w2, w3).
  CHECK(std::abs(three.families[0].x0 - w1 * Complex{0.25, 0.25 * kSqrt3}) <= 1e-14);
  CHECK(std::abs(three.families[0].c - 0.75 * w1 * w1 * omega) <= 1e-14);
  CHECK(std::abs(three.families[1].x0 - w1 * Complex{0.25, -0.25 * kSqrt3}) <= 1e-14);
  CHECK(std::abs(three.families[1].c - 0.75 * w1 * w1 * std::conj(omega)) <= 1e-14);
  CHECK(std::abs(three.families[2].x0 - (-0.5 * w1)) <= 1e-14);
  CHECK(std::abs(three.families[2].c - 0.75 * w1 * w1) <= 1e-14);

  for (int n = 2; n <= 6; ++n) {
    const SolutionSet s = solve_case_1a(b0, n);
    CHECK(s.isolated.size() == static_cast<std::size_t>(n));
    CHECK(s.families.size() == family_count_for(n));
    for (const SolutionFamily& f : s.families) {
      CHECK(std::abs(f.x0 - (f.w1 + f.w2) / 2.0) <= 1e-14);
      CHECK(std::abs(f.c + (f.w1 - f.w2) * (f.w1 - f.w2) / 4.0) <= 1e-14);
      CHECK(std::abs(f.w1 - f.w2) > 1e-6);
    }
  }
}

TEST_CASE("solve_case_1b members") {
  const SolutionSet set = solve_case_1b(3);
  REQUIRE(set.isolated.size() == 1);
  CHECK(set.isolated[0] == Biquaternion::zero());
  REQUIRE(set.families.size() == 1);
  CHECK(set.families[0].origin == FamilyOrigin::NullCone);
  CHECK(max_abs(quat_pow({0.0, 1.0, kI, 0.0}, 2)) == 0.0);
  for (int n = 2; n <= 6; ++n) CHECK(max_abs(quat_pow(test::insoluble_input(), n)) == 0.0);
}

TEST_CASE("solve_case_2a") {
  const SolutionSet set = solve_case_2a({0.0, 1.0, 0.0, 0.0}, 2);
  REQUIRE(set.isolated.size() == 4);
  const Biquaternion want = (1.0 / std::sqrt(2.0)) * Biquaternion{1.0, 1.0, 0.0, 0.0};
  CHECK(distance(quat_mul(want, want), Biquaternion{0.0, 1.0, 0.0, 0.0}) <= 1e-15);
  CHECK(contains(set, want, 1e-14));

  Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    const Biquaternion a = random_generic_input(rng);
    for (int n : {2, 3, 4}) {
      const SolutionSet s = solve_case_2a(a, n);
      REQUIRE(s.isolated.size() == static_cast<std::size_t>(n * n));
      double closest = 1e300;
      for (std::size_t i = 0; i < s.isolated.size(); ++i) {
        CHECK(residual(s.isolated[i], n, a) <= 1e-9);
        for (std::size_t j = i + 1; j < s.isolated.size(); ++j) {
          closest = std::min(closest, distance(s.isolated[i], s.isolated[j]));
        }
      }
      CHECK(closest > kDefaultTol);
    }
  }
}

TEST_CASE("case 2a roots agree with the matrix route") {
  Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    const Biquaternion a = random_generic_input(rng);
    const int n = 2 + k % 3;
    const SolutionSet s = solve_case_2a(a, n);
    const Matrix4C target = to_qmatrix(a);

    // Power of the q-matrix equals the q-matrix of A.
    for (const Biquaternion& x : s.isolated) {
      const Matrix4C m = to_qmatrix(x);
      Matrix4C p = m;
      for (int j = 1; j < n; ++j) p = p * m;
      CHECK((p - target).max_abs() <= 1e-9 * (1.0 + target.max_abs()));
    }

    // Rebuilding each root as U diag(r1, r1, r2, r2) Uinv gives a q-matrix
    // whose quaternion is the closed-form root.
    const JordanDecomposition d = jordan_form(a);
    const auto plus = complex_nth_roots(d.eigenvalues[0], n).values;
    const auto minus = complex_nth_roots(d.eigenvalues[1], n).values;
    std::vector<Biquaternion> rebuilt;
    for (const Complex& r1 : plus) {
      for (const Complex& r2 : minus) {
        rebuilt.push_back(from_qmatrix(d.U * Matrix4C::diagonal(r1, r1, r2, r2) * d.Uinv, 1e-9));
      }
    }
    CHECK(match_sets(rebuilt, s.isolated, 1e-9).matched);
  }
}

TEST_CASE("solve_case_2b and 3a residuals") {
  Rng rng(44);
  for (int k = 0; k < 100; ++k) {
    const CVector3 v = rng.vector();
    // a0^2 = -a^2 makes A singular.
    const Biquaternion singular{kI * complex_sqrt(vec_square(v)), v};
    const Biquaternion nil{rng.complex() + 0.5, rng.null_vector()};
    for (int n : {2, 3, 5}) {
      const SolutionSet s2 = solve_case_2b(singular, n);
      CHECK(s2.isolated.size() == static_cast<std::size_t>(n));
      for (const auto& x : s2.isolated) CHECK(residual(x, n, singular) <= 1e-9);
      const SolutionSet s3 = solve_case_3a(nil, n);
      CHECK(s3.isolated.size() == static_cast<std::size_t>(n));
      for (const auto& x : s3.isolated) CHECK(residual(x, n, nil) <= 1e-9);
    }
  }
}

TEST_CASE("sample_family") {
  const Complex a0{7.0, 0.0};
  const SolutionFamily f{0.0, -a0, FamilyOrigin::PairOfRoots, std::sqrt(a0), -std::sqrt(a0)};
  const Biquaternion x = sample_family(f, 2.0 * kI, 0.0);
  CHECK(distance(x, Biquaternion{0.0, 2.0 * kI, 0.0, std::sqrt(Complex{-3.0, 0.0})}) <= 1e-15);
  CHECK(distance(quat_pow(x, 2), a0 * Biquaternion::identity()) <= 1e-14);

  const SolutionFamily cone{};
  CHECK(sample_family(cone, 1.0, kI) == Biquaternion{0.0, 1.0, kI, 0.0});
  CHECK(sample_family(cone, 0.0, 0.0) == Biquaternion::zero());

  Rng rng(45);
  for (int k = 0; k < 100; ++k) {
    const SolutionFamily g{rng.complex(), rng.complex(3.0), FamilyOrigin::PairOfRoots, 0.0, 0.0};
    const Biquaternion y = sample_family(g, rng.complex(), rng.complex());
    CHECK(std::abs(vec_square(y.v) - g.c) <= 1e-13);
    CHECK(sample_family_deterministic(g, 4) == sample_family_deterministic(g, 4));
  }
}

TEST_CASE("random family members are roots") {
  Rng rng(46);
  for (int n = 2; n <= 5; ++n) {
    const Complex a0 = rng.complex(4.0);
    const Biquaternion a{a0, CVector3{}};
    const SolutionSet set = solve_nth_root(a, n);
    for (const SolutionFamily& f : set.families) {
      for (int k = 0; k < 50; ++k) {
        const Biquaternion x = sample_family(f, rng.complex(), rng.complex());
        CHECK(residual(x, n, a) <= 1e-9);
      }
    }
  }
  const SolutionSet zero = solve_nth_root(Biquaternion::zero(), 4);
  for (int k = 0; k < 50; ++k) {
    CHECK(residual(sample_family(zero.families[0], rng.complex(), rng.complex()), 4, Biquaternion::zero()) <= 1e-9);
  }
}

TEST_CASE("branch choice does not change the root set") {
  Rng rng(47);
  for (int k = 0; k < 100; ++k) {
    const Biquaternion a = random_generic_input(rng);
    for (int n : {2, 3}) {
      const SolutionSet p = solve_nth_root(a, n, kDefaultTol, Branch::Principal);
      const SolutionSet q = solve_nth_root(a, n, kDefaultTol, Branch::Negated);
      CHECK(q.metadata.branch == Branch::Negated);
      CHECK(match_sets(p.isolated, q.isolated, 1e-9).matched);
    }
  }
}

TEST_CASE("counts per case on random inputs") {
  Rng rng(48);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 4;
    const std::array<Biquaternion, 6> inputs = {
        Biquaternion{rng.complex() + 2.0, CVector3{}},
        Biquaternion::zero(),
        random_generic_input(rng),
        [&] {
          const CVector3 v = rng.vector();
          return Biquaternion{kI * complex_sqrt(vec_square(v)), v};
        }(),
        Biquaternion{rng.complex() + 2.0, rng.null_vector()},
        Biquaternion{0.0, rng.null_vector()},
    };
    for (const Biquaternion& a : inputs) CHECK_NOTHROW(check_counts(solve_nth_root(a, n), n));
  }
}

TEST_CASE("solve_nth_root argument checks and metadata") {
  CHECK_THROWS_AS(solve_nth_root(test::generic_input(), 1), DomainError);
  CHECK_THROWS_AS(solve_nth_root({std::nan(""), 0.0, 0.0, 0.0}, 2), DomainError);
  CHECK_THROWS_AS(solve_nth_root(test::generic_input(), 2, -1.0), DomainError);

  const SolutionSet s = solve_nth_root(test::generic_input(), 3, 1e-10, Branch::Negated);
  CHECK(s.metadata.n == 3);
  CHECK(s.metadata.tol == 1e-10);
  CHECK(s.metadata.branch == Branch::Negated);
  CHECK(s.metadata.self_check_max_residual <= 1e-10);

  const SolutionSet boundary = solve_nth_root({1.0, 1e-8, 0.0, 0.0}, 2);
  CHECK(boundary.metadata.boundary_flags != kBoundaryNone);
}
