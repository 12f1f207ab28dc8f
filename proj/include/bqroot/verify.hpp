#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bqroot/biquaternion.hpp"
#include "bqroot/solver.hpp"

namespace bqroot {

/// |X^n - A|_inf / (1 + |A|_inf), max over the eight real components.
double residual(const Biquaternion& x, int n, const Biquaternion& a);

// Extra bookkeeping filled in by oracle_roundtrip.
struct RoundtripStats {
  std::size_t trials = 0;
  std::size_t recovered = 0;
  std::size_t skipped = 0;  // insoluble inputs: nothing to recover
  std::size_t rejected = 0;  // generator draws thrown away as near-degenerate
  std::vector<std::size_t> isolated_counts;
};

struct VerificationReport {
  std::vector<double> residuals;                      // per isolated root (or per trial)
  std::vector<std::vector<double>> family_residuals;  // per family, per sample
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;  // max_residual <= tolerance
  std::optional<RoundtripStats> roundtrip;
};

/// Residual-checks every isolated root and `family_samples` deterministic
/// samples of every family. Throws CountMismatch when the root or family
/// counts break the contract for the set's case label.
VerificationReport check_solution_set(const Biquaternion& a, int n, const SolutionSet& set,
                                      double tol = kDefaultTol, std::size_t family_samples = 3);

// Throws CountMismatch if |isolated| / |families| do not fit set.label.
void check_counts(const SolutionSet& set, int n);

// Which kind of X the round-trip generator draws.
enum class OracleStream {
  Generic,    // X^n lands in 2a
  Scalar,     // X^n lands in 1a (scalar X or X from a root-pair family)
  NullCone,   // X^n == 0 (1b)
  Singular,   // X^n lands in 2b
  Nilpotent,  // X^n lands in 3a
  Insoluble,  // A drawn directly from 3b; expects an insoluble verdict
};

/// Brute-force oracle: draw X, form A = X^n, solve, and require X among the
/// isolated roots or inside a returned family. A trial's entry in
/// `residuals` is its recovery error (relative componentwise distance, or
/// the family membership error); tolerance is `recovery_tol`.
VerificationReport oracle_roundtrip(std::uint64_t seed, int n, std::size_t count,
                                    OracleStream stream = OracleStream::Generic,
                                    double recovery_tol = 1e-6, double tol = kDefaultTol);

// Relative distance from X to the solution set: min over isolated roots of
// |X - R|_inf / (1 + |X|_inf) and over families of family_membership_error.
double recovery_error(const Biquaternion& x, const SolutionSet& set);

// max(|x0 - f.x0| / (1 + |X|), |x^2 - f.c| / (1 + |f.c|))
double family_membership_error(const Biquaternion& x, const SolutionFamily& f);

// Perfect matching between two root lists using only pairs within `tol`
// (componentwise). `assignment[i]` is the index in rhs matched to lhs[i].
struct SetMatch {
  bool matched = false;
  std::vector<std::size_t> assignment;
  double max_distance = 0.0;  // over the matched pairs
};

SetMatch match_sets(std::span<const Biquaternion> lhs, std::span<const Biquaternion> rhs,
                    double tol);

}  // namespace bqroot
