#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bqroot/biquaternion.hpp"
#include "bqroot/qmatrix.hpp"

namespace bqroot {

// The six shapes of X^n = A.
enum class CaseLabel {
  ScalarInvertible,     // 1a: A = a0 E, a0 != 0
  ZeroQuaternion,       // 1b: A = 0
  GenericInvertible,    // 2a: a != 0, a^2 != 0, a0^2 + a^2 != 0
  GenericSingular,      // 2b: a != 0, a^2 != 0, a0^2 + a^2 == 0
  NilpotentInvertible,  // 3a: a != 0, a^2 == 0, a0 != 0
  NilpotentSingular,    // 3b: a != 0, a^2 == 0, a0 == 0 (no roots)
};

// "1a", "1b", ...
std::string_view case_code(CaseLabel label);
// "ScalarInvertible", ...
std::string_view case_name(CaseLabel label);

enum class FamilyOrigin {
  PairOfRoots,  // two distinct n-th roots w1 != w2 of a0
  NullCone,     // A = 0: pure null vectors
};

/// A continuous set of roots {X | scalar part == x0, vec_square(x) == c}.
struct SolutionFamily {
  Complex x0{};
  Complex c{};
  FamilyOrigin origin = FamilyOrigin::NullCone;
  // The generating root pair for PairOfRoots; zero for NullCone.
  Complex w1{}, w2{};
};

// Bit flags for classification tests that came out "nonzero" while sitting
// within a few decades of their threshold.
enum BoundaryFlag : unsigned {
  kBoundaryNone = 0,
  kBoundaryScalarPart = 1u << 0,
  kBoundaryVectorPart = 1u << 1,
  kBoundaryVectorSquare = 1u << 2,
  kBoundaryNormForm = 1u << 3,
};

struct SolveMetadata {
  int n = 0;
  Branch branch = Branch::Principal;
  double tol = kDefaultTol;
  unsigned boundary_flags = kBoundaryNone;
  // Outcome of the built-in residual pass over isolated roots and a few
  // deterministic samples per family.
  double self_check_max_residual = 0.0;
  bool self_check_passed = true;
};

struct SolutionSet {
  CaseLabel label = CaseLabel::ZeroQuaternion;
  std::vector<Biquaternion> isolated;
  std::vector<SolutionFamily> families;
  std::optional<std::string> insoluble;
  SolveMetadata metadata;

  bool is_insoluble() const { return insoluble.has_value(); }
};

struct Classification {
  CaseLabel label;
  unsigned boundary_flags = kBoundaryNone;
};

// Threshold multiple below which a "nonzero" verdict is flagged.
inline constexpr double kBoundaryMargin = 1e3;

Classification classify_detailed(const Biquaternion& a, double tol = kDefaultTol);

inline CaseLabel classify(const Biquaternion& a, double tol = kDefaultTol) {
  return classify_detailed(a, tol).label;
}

/// All solutions of X^n = A.
///
/// Dispatches on classify(a, tol) to the case solvers below, then residual
/// checks every isolated root and a few samples of every family; the outcome
/// lands in metadata. Throws DomainError for n < 2 or non-finite input.
SolutionSet solve_nth_root(const Biquaternion& a, int n, double tol = kDefaultTol,
                           Branch branch = Branch::Principal);

// Case solvers. They trust the caller's classification.
SolutionSet solve_case_1a(Complex a0, int n);
SolutionSet solve_case_1b(int n);
SolutionSet solve_case_2a(const Biquaternion& a, int n, Branch branch = Branch::Principal);
SolutionSet solve_case_2b(const Biquaternion& a, int n);
SolutionSet solve_case_3a(const Biquaternion& a, int n);
SolutionSet solve_case_3b(int n);

// X = (f.x0, (p1, p2, x3)) with x3 = complex_sqrt(f.c - p1^2 - p2^2, branch),
// so vec_square(X.v) == f.c by construction.
Biquaternion sample_family(const SolutionFamily& f, Complex p1, Complex p2,
                           Branch branch = Branch::Principal);

// k-th member of a fixed parameter sequence, scaled to the family. Identical
// (f, k, branch) always give the identical member.
Biquaternion sample_family_deterministic(const SolutionFamily& f, std::size_t k,
                                         Branch branch = Branch::Principal);

// Number of distinct unordered root pairs, n choose 2.
std::size_t family_count_for(int n);

}  // namespace bqroot
