#include "bqroot.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "bqroot/biquaternion.hpp"
#include "bqroot/error.hpp"
#include "bqroot/qmatrix.hpp"
#include "bqroot/solver.hpp"
#include "bqroot/verify.hpp"

struct bqr_solution_set {
  bqroot::SolutionSet set;
};

struct bqr_report {
  bqroot::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

bqr_status fail(bqr_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <typename F>
bqr_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return BQR_OK;
  } catch (const bqroot::DomainError& e) {
    return fail(BQR_ERR_DOMAIN, e.what());
  } catch (const bqroot::NotAQMatrix& e) {
    return fail(BQR_ERR_NOT_QMATRIX, e.what());
  } catch (const bqroot::DegenerateSubcase& e) {
    return fail(BQR_ERR_DEGENERATE_SUBCASE, e.what());
  } catch (const bqroot::CountMismatch& e) {
    return fail(BQR_ERR_COUNT_MISMATCH, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BQR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BQR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BQR_ERR_INTERNAL, "unknown error");
  }
}

bqroot::Complex to_cpp(bqr_complex z) { return {z.re, z.im}; }
bqr_complex to_c(bqroot::Complex z) { return {z.real(), z.imag()}; }

bqroot::Biquaternion to_cpp(const bqr_quat& q) {
  return {to_cpp(q.c[0]), to_cpp(q.c[1]), to_cpp(q.c[2]), to_cpp(q.c[3])};
}

bqr_quat to_c(const bqroot::Biquaternion& q) {
  bqr_quat out;
  for (std::size_t k = 0; k < 4; ++k) out.c[k] = to_c(q[k]);
  return out;
}

// Inputs crossing the boundary must be finite.
bqroot::Biquaternion checked(const bqr_quat& q) {
  const auto value = to_cpp(q);
  if (!bqroot::is_finite(value)) throw bqroot::DomainError("quaternion has non-finite components");
  return value;
}

void store(const bqroot::Matrix4C& m, bqr_complex out[16]) {
  for (std::size_t k = 0; k < 16; ++k) out[k] = to_c(m.data()[k]);
}

bqroot::Branch to_cpp(bqr_branch b) {
  if (b != BQR_BRANCH_PRINCIPAL && b != BQR_BRANCH_NEGATED) throw bqroot::DomainError("unknown branch");
  return b == BQR_BRANCH_NEGATED ? bqroot::Branch::Negated : bqroot::Branch::Principal;
}

bqroot::SolutionFamily to_cpp(const bqr_family& f) {
  return {to_cpp(f.x0), to_cpp(f.c),
          f.origin == BQR_FAMILY_NULL_CONE ? bqroot::FamilyOrigin::NullCone
                                           : bqroot::FamilyOrigin::PairOfRoots,
          to_cpp(f.w1), to_cpp(f.w2)};
}

bqr_case to_c(bqroot::CaseLabel label) { return static_cast<bqr_case>(static_cast<int>(label)); }

bool valid_case(bqr_case c) { return c >= BQR_CASE_1A_SCALAR_INVERTIBLE && c <= BQR_CASE_3B_NILPOTENT_SINGULAR; }

}  // namespace

extern "C" {

const char* bqr_version(void) { return "1.0.0"; }

const char* bqr_last_error(void) { return g_last_error.c_str(); }

const char* bqr_status_string(bqr_status status) {
  switch (status) {
    case BQR_OK: return "ok";
    case BQR_ERR_NULL_ARGUMENT: return "null argument";
    case BQR_ERR_DOMAIN: return "domain error";
    case BQR_ERR_INDEX: return "index out of range";
    case BQR_ERR_NOT_QMATRIX: return "not a q-matrix";
    case BQR_ERR_DEGENERATE_SUBCASE: return "degenerate subcase";
    case BQR_ERR_COUNT_MISMATCH: return "count mismatch";
    case BQR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

bqr_status bqr_quat_mul(const bqr_quat* a, const bqr_quat* b, bqr_quat* out) {
  if (!a || !b || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_quat_mul: null argument");
  return guarded([&] { *out = to_c(bqroot::quat_mul(checked(*a), checked(*b))); });
}

bqr_status bqr_quat_pow(const bqr_quat* x, int n, bqr_quat* out) {
  if (!x || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_quat_pow: null argument");
  return guarded([&] { *out = to_c(bqroot::quat_pow(checked(*x), n)); });
}

bqr_status bqr_residual(const bqr_quat* x, int n, const bqr_quat* a, double* out) {
  if (!x || !a || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_residual: null argument");
  return guarded([&] { *out = bqroot::residual(checked(*x), n, checked(*a)); });
}

bqr_status bqr_to_qmatrix(const bqr_quat* a, bqr_complex out[16]) {
  if (!a || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_to_qmatrix: null argument");
  return guarded([&] { store(bqroot::to_qmatrix(checked(*a)), out); });
}

bqr_status bqr_jordan_form(const bqr_quat* a, double tol, bqr_branch branch, int* kind, int* subcase,
                           bqr_complex j[16], bqr_complex u[16], bqr_complex uinv[16]) {
  if (!a || !kind || !subcase || !j || !u || !uinv) {
    return fail(BQR_ERR_NULL_ARGUMENT, "bqr_jordan_form: null argument");
  }
  return guarded([&] {
    const auto d = bqroot::jordan_form(checked(*a), tol, to_cpp(branch));
    *kind = static_cast<int>(d.kind);
    *subcase = d.subcase == bqroot::Subcase::NotApplicable ? -1 : static_cast<int>(d.subcase);
    store(d.J, j);
    store(d.U, u);
    store(d.Uinv, uinv);
  });
}

bqr_status bqr_classify(const bqr_quat* a, double tol, bqr_case* out) {
  if (!a || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_classify: null argument");
  return guarded([&] { *out = to_c(bqroot::classify(checked(*a), tol)); });
}

const char* bqr_case_code(bqr_case c) {
  if (!valid_case(c)) return "?";
  return bqroot::case_code(static_cast<bqroot::CaseLabel>(c)).data();
}

const char* bqr_case_name(bqr_case c) {
  if (!valid_case(c)) return "?";
  return bqroot::case_name(static_cast<bqroot::CaseLabel>(c)).data();
}

bqr_status bqr_solve(const bqr_quat* a, int n, double tol, bqr_branch branch, bqr_solution_set** out) {
  if (!a || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_solve: null argument");
  *out = nullptr;
  return guarded([&] {
    auto set = bqroot::solve_nth_root(checked(*a), n, tol, to_cpp(branch));
    *out = new bqr_solution_set{std::move(set)};
  });
}

void bqr_solution_free(bqr_solution_set* set) { delete set; }

bqr_case bqr_solution_case(const bqr_solution_set* set) {
  return set ? to_c(set->set.label) : BQR_CASE_3B_NILPOTENT_SINGULAR;
}

int bqr_solution_n(const bqr_solution_set* set) { return set ? set->set.metadata.n : 0; }

double bqr_solution_tol(const bqr_solution_set* set) { return set ? set->set.metadata.tol : 0.0; }

bqr_branch bqr_solution_branch(const bqr_solution_set* set) {
  return set && set->set.metadata.branch == bqroot::Branch::Negated ? BQR_BRANCH_NEGATED
                                                                     : BQR_BRANCH_PRINCIPAL;
}

unsigned bqr_solution_boundary_flags(const bqr_solution_set* set) {
  return set ? set->set.metadata.boundary_flags : 0u;
}

double bqr_solution_self_check_residual(const bqr_solution_set* set) {
  return set ? set->set.metadata.self_check_max_residual : 0.0;
}

int bqr_solution_self_check_passed(const bqr_solution_set* set) {
  return set && set->set.metadata.self_check_passed ? 1 : 0;
}

const char* bqr_solution_insoluble_reason(const bqr_solution_set* set) {
  if (!set || !set->set.insoluble) return nullptr;
  return set->set.insoluble->c_str();
}

size_t bqr_solution_isolated_count(const bqr_solution_set* set) { return set ? set->set.isolated.size() : 0; }

bqr_status bqr_solution_isolated(const bqr_solution_set* set, size_t index, bqr_quat* out) {
  if (!set || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_solution_isolated: null argument");
  if (index >= set->set.isolated.size()) return fail(BQR_ERR_INDEX, "bqr_solution_isolated: index out of range");
  *out = to_c(set->set.isolated[index]);
  return BQR_OK;
}

size_t bqr_solution_family_count(const bqr_solution_set* set) { return set ? set->set.families.size() : 0; }

bqr_status bqr_solution_family(const bqr_solution_set* set, size_t index, bqr_family* out) {
  if (!set || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_solution_family: null argument");
  if (index >= set->set.families.size()) return fail(BQR_ERR_INDEX, "bqr_solution_family: index out of range");
  const auto& f = set->set.families[index];
  *out = bqr_family{to_c(f.x0), to_c(f.c),
                    f.origin == bqroot::FamilyOrigin::NullCone ? BQR_FAMILY_NULL_CONE : BQR_FAMILY_PAIR_OF_ROOTS,
                    to_c(f.w1), to_c(f.w2)};
  return BQR_OK;
}

bqr_status bqr_family_sample(const bqr_family* family, bqr_complex p1, bqr_complex p2, bqr_branch branch,
                             bqr_quat* out) {
  if (!family || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_family_sample: null argument");
  return guarded([&] {
    const auto x = bqroot::sample_family(to_cpp(*family), to_cpp(p1), to_cpp(p2), to_cpp(branch));
    if (!bqroot::is_finite(x)) throw bqroot::DomainError("bqr_family_sample: non-finite parameters");
    *out = to_c(x);
  });
}

bqr_status bqr_family_sample_deterministic(const bqr_family* family, size_t k, bqr_quat* out) {
  if (!family || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_family_sample_deterministic: null argument");
  return guarded([&] { *out = to_c(bqroot::sample_family_deterministic(to_cpp(*family), k)); });
}

bqr_status bqr_check(const bqr_quat* a, const bqr_solution_set* set, double tol, size_t family_samples,
                     bqr_report** out) {
  if (!a || !set || !out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_check: null argument");
  *out = nullptr;
  return guarded([&] {
    auto report = bqroot::check_solution_set(checked(*a), set->set.metadata.n, set->set, tol, family_samples);
    *out = new bqr_report{std::move(report)};
  });
}

bqr_status bqr_oracle_roundtrip(uint64_t seed, int n, size_t count, bqr_stream stream, double recovery_tol,
                                bqr_report** out) {
  if (!out) return fail(BQR_ERR_NULL_ARGUMENT, "bqr_oracle_roundtrip: null argument");
  *out = nullptr;
  if (stream < BQR_STREAM_GENERIC || stream > BQR_STREAM_INSOLUBLE) {
    return fail(BQR_ERR_DOMAIN, "bqr_oracle_roundtrip: unknown stream");
  }
  return guarded([&] {
    auto report = bqroot::oracle_roundtrip(seed, n, count, static_cast<bqroot::OracleStream>(stream), recovery_tol);
    *out = new bqr_report{std::move(report)};
  });
}

void bqr_report_free(bqr_report* report) { delete report; }

int bqr_report_pass(const bqr_report* report) { return report && report->report.pass ? 1 : 0; }

double bqr_report_max_residual(const bqr_report* report) { return report ? report->report.max_residual : 0.0; }

double bqr_report_tolerance(const bqr_report* report) { return report ? report->report.tolerance : 0.0; }

size_t bqr_report_residual_count(const bqr_report* report) { return report ? report->report.residuals.size() : 0; }

double bqr_report_residual(const bqr_report* report, size_t index) {
  if (!report || index >= report->report.residuals.size()) return std::nan("");
  return report->report.residuals[index];
}

size_t bqr_report_trials(const bqr_report* report) {
  return report && report->report.roundtrip ? report->report.roundtrip->trials : 0;
}

size_t bqr_report_recovered(const bqr_report* report) {
  return report && report->report.roundtrip ? report->report.roundtrip->recovered : 0;
}

size_t bqr_report_skipped(const bqr_report* report) {
  return report && report->report.roundtrip ? report->report.roundtrip->skipped : 0;
}

}  // extern "C"
