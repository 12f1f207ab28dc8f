#include "bqroot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "bqroot/error.hpp"

namespace bqroot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Kuhn's augmenting-path bipartite matching restricted to edges within `limit`.
class BoundedMatcher {
 public:
  BoundedMatcher(const std::vector<std::vector<double>>& dist, double limit)
      : dist_(dist), limit_(limit), owner_(dist.size(), kNone) {}

  bool run(std::vector<std::size_t>& assignment) {
    const std::size_t n = dist_.size();
    for (std::size_t i = 0; i < n; ++i) {
      visited_.assign(n, false);
      if (!augment(i)) return false;
    }
    assignment.assign(n, kNone);
    for (std::size_t j = 0; j < n; ++j) assignment[owner_[j]] = j;
    return true;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool augment(std::size_t i) {
    for (std::size_t j = 0; j < dist_.size(); ++j) {
      if (visited_[j] || !(dist_[i][j] <= limit_)) continue;
      visited_[j] = true;
      if (owner_[j] == kNone || augment(owner_[j])) {
        owner_[j] = i;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<double>>& dist_;
  double limit_;
  std::vector<std::size_t> owner_;
  std::vector<bool> visited_;
};

struct Draw {
  std::mt19937_64 engine;
  std::uniform_real_distribution<double> unit{-1.0, 1.0};

  Complex complex() {
    const double re = unit(engine);
    const double im = unit(engine);
    return {re, im};
  }
  CVector3 vector() {
    const Complex c1 = complex();
    const Complex c2 = complex();
    const Complex c3 = complex();
    return {c1, c2, c3};
  }
  CVector3 null_vector() {
    const Complex c1 = complex();
    const Complex c2 = complex();
    return {c1, c2, complex_sqrt(-(c1 * c1 + c2 * c2))};
  }
  int index(int lo, int hi) { return std::uniform_int_distribution<int>{lo, hi}(engine); }
};

// Draws one X for the stream, or nothing if the draw is near-degenerate.
std::optional<Biquaternion> draw_root(Draw& d, OracleStream stream, int n, double tol) {
  constexpr double kMargin = 1e-3;
  switch (stream) {
    case OracleStream::Generic: {
      const Biquaternion x{d.complex(), d.vector()};
      if (std::abs(vec_square(x.v)) < kMargin || std::abs(norm_form(x)) < kMargin) return {};
      const Biquaternion a = quat_pow(x, n);
      const Classification cls = classify_detailed(a, tol);
      const double scale = 1.0 + max_abs(a);
      if (cls.label != CaseLabel::GenericInvertible || cls.boundary_flags != kBoundaryNone ||
          std::abs(vec_square(a.v)) < kMargin * scale * scale ||
          std::abs(norm_form(a)) < kMargin * scale * scale) {
        return {};
      }
      return x;
    }
    case OracleStream::Scalar: {
      const Complex w = d.complex();
      if (std::abs(w) < 0.2) return {};
      if (d.index(0, 1) == 0) return w * Biquaternion::identity();
      const Complex w2 = w * std::polar(1.0, 2.0 * std::numbers::pi * d.index(1, n - 1) / n);
      const Complex diff = w - w2;
      const SolutionFamily f{(w + w2) / 2.0, -diff * diff / 4.0, FamilyOrigin::PairOfRoots, w, w2};
      const Complex p1 = d.complex();
      const Complex p2 = d.complex();
      return sample_family(f, p1, p2);
    }
    case OracleStream::NullCone:
      return Biquaternion{Complex{}, d.null_vector()};
    case OracleStream::Singular: {
      const CVector3 v = d.vector();
      const Complex sq = vec_square(v);
      if (std::abs(sq) < 0.1) return {};
      return Biquaternion{Complex{0.0, 1.0} * complex_sqrt(sq), v};
    }
    case OracleStream::Nilpotent: {
      const Complex x0 = d.complex();
      const CVector3 v = d.null_vector();
      if (std::abs(x0) < 0.2 || max_abs(v) < 0.1) return {};
      return Biquaternion{x0, v};
    }
    case OracleStream::Insoluble:
      break;
  }
  return {};
}

CaseLabel expected_label(OracleStream stream) {
  switch (stream) {
    case OracleStream::Generic: return CaseLabel::GenericInvertible;
    case OracleStream::Scalar: return CaseLabel::ScalarInvertible;
    case OracleStream::NullCone: return CaseLabel::ZeroQuaternion;
    case OracleStream::Singular: return CaseLabel::GenericSingular;
    case OracleStream::Nilpotent: return CaseLabel::NilpotentInvertible;
    case OracleStream::Insoluble: break;
  }
  return CaseLabel::NilpotentSingular;
}

}  // namespace

double residual(const Biquaternion& x, int n, const Biquaternion& a) {
  return max_abs(quat_pow(x, n) - a) / (1.0 + max_abs(a));
}

void check_counts(const SolutionSet& set, int n) {
  const std::size_t m = static_cast<std::size_t>(n);
  std::size_t isolated = 0;
  std::size_t families = 0;
  switch (set.label) {
    case CaseLabel::ScalarInvertible: isolated = m; families = family_count_for(n); break;
    case CaseLabel::ZeroQuaternion: isolated = 1; families = 1; break;
    case CaseLabel::GenericInvertible: isolated = m * m; break;
    case CaseLabel::GenericSingular:
    case CaseLabel::NilpotentInvertible: isolated = m; break;
    case CaseLabel::NilpotentSingular: break;
  }
  const bool insoluble_ok = (set.label == CaseLabel::NilpotentSingular) == set.is_insoluble();
  if (set.isolated.size() != isolated || set.families.size() != families || !insoluble_ok) {
    throw CountMismatch("case " + std::string(case_code(set.label)) + " with n = " +
                        std::to_string(n) + " expects " + std::to_string(isolated) +
                        " isolated roots and " + std::to_string(families) + " families, got " +
                        std::to_string(set.isolated.size()) + " and " +
                        std::to_string(set.families.size()));
  }
}

VerificationReport check_solution_set(const Biquaternion& a, int n, const SolutionSet& set,
                                      double tol, std::size_t family_samples) {
  check_counts(set, n);
  VerificationReport report;
  report.tolerance = tol;
  for (const Biquaternion& x : set.isolated) {
    report.residuals.push_back(residual(x, n, a));
    report.max_residual = std::max(report.max_residual, report.residuals.back());
  }
  for (const SolutionFamily& f : set.families) {
    auto& samples = report.family_residuals.emplace_back();
    for (std::size_t k = 0; k < family_samples; ++k) {
      samples.push_back(residual(sample_family_deterministic(f, k), n, a));
      report.max_residual = std::max(report.max_residual, samples.back());
    }
  }
  report.pass = report.max_residual <= tol;
  return report;
}

double family_membership_error(const Biquaternion& x, const SolutionFamily& f) {
  const double scalar_err = max_abs(x.s - f.x0) / (1.0 + max_abs(x));
  const double square_err = std::abs(vec_square(x.v) - f.c) / (1.0 + std::abs(f.c));
  return std::max(scalar_err, square_err);
}

double recovery_error(const Biquaternion& x, const SolutionSet& set) {
  double best = kInf;
  for (const Biquaternion& r : set.isolated) best = std::min(best, distance(x, r) / (1.0 + max_abs(x)));
  for (const SolutionFamily& f : set.families) best = std::min(best, family_membership_error(x, f));
  return best;
}

VerificationReport oracle_roundtrip(std::uint64_t seed, int n, std::size_t count,
                                    OracleStream stream, double recovery_tol, double tol) {
  if (n < 2) throw DomainError("oracle_roundtrip: n must be >= 2, got " + std::to_string(n));
  VerificationReport report;
  report.tolerance = recovery_tol;
  RoundtripStats stats;
  Draw draw{std::mt19937_64{seed}};
  const std::size_t max_draws = 1000 * std::max<std::size_t>(count, 1);

  for (std::size_t draws = 0; stats.trials < count && draws < max_draws; ++draws) {
    Biquaternion a;
    std::optional<Biquaternion> x;
    if (stream == OracleStream::Insoluble) {
      a = Biquaternion{Complex{}, draw.null_vector()};
      if (max_abs(a.v) < 0.1) {
        ++stats.rejected;
        continue;
      }
    } else {
      x = draw_root(draw, stream, n, tol);
      if (!x) {
        ++stats.rejected;
        continue;
      }
      a = quat_pow(*x, n);
      if (classify(a, tol) != expected_label(stream)) {
        ++stats.rejected;
        continue;
      }
    }

    ++stats.trials;
    const SolutionSet set = solve_nth_root(a, n, tol);
    stats.isolated_counts.push_back(set.isolated.size());
    double err = kInf;
    try {
      check_counts(set, n);
      if (stream == OracleStream::Insoluble) {
        err = set.is_insoluble() ? 0.0 : kInf;
        ++stats.skipped;
      } else {
        err = recovery_error(*x, set);
      }
    } catch (const CountMismatch&) {
      err = kInf;
    }
    if (err <= recovery_tol && stream != OracleStream::Insoluble) ++stats.recovered;
    report.residuals.push_back(err);
    report.max_residual = std::max(report.max_residual, err);
  }

  report.pass = report.max_residual <= recovery_tol && stats.trials == count;
  report.roundtrip = std::move(stats);
  return report;
}

SetMatch match_sets(std::span<const Biquaternion> lhs, std::span<const Biquaternion> rhs, double tol) {
  SetMatch out;
  if (lhs.size() != rhs.size()) return out;
  const std::size_t n = lhs.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  std::vector<double> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = distance(lhs[i], rhs[j]);
      if (dist[i][j] <= tol) candidates.push_back(dist[i][j]);
    }
  }
  if (n == 0) {
    out.matched = true;
    return out;
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Smallest bottleneck value that still admits a perfect matching.
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  std::vector<std::size_t> best;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<std::size_t> assignment;
    if (BoundedMatcher{dist, candidates[mid]}.run(assignment)) {
      best = std::move(assignment);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (best.empty()) return out;
  out.matched = true;
  out.assignment = std::move(best);
  for (std::size_t i = 0; i < n; ++i) out.max_distance = std::max(out.max_distance, dist[i][out.assignment[i]]);
  return out;
}

}  // namespace bqroot
