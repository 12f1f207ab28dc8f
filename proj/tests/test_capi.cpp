#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "bqroot.h"

namespace {

bqr_quat quat(double r0, double i0, double r1, double i1, double r2, double i2, double r3, double i3) {
  return bqr_quat{{{r0, i0}, {r1, i1}, {r2, i2}, {r3, i3}}};
}

const bqr_quat kGeneric = quat(76, 0, 0, 24, 0, 12, 0, -41);
const bqr_quat kInsoluble = quat(0, 0, 3, 0, 4, 0, 0, 5);

}  // namespace

TEST_CASE("C API: version and strings") {
  CHECK(std::string(bqr_version()) == "1.0.0");
  CHECK(std::string(bqr_status_string(BQR_OK)) == "ok");
  CHECK(std::string(bqr_case_code(BQR_CASE_2B_GENERIC_SINGULAR)) == "2b");
  CHECK(std::string(bqr_case_name(BQR_CASE_3B_NILPOTENT_SINGULAR)) == "NilpotentSingular");
}

TEST_CASE("C API: arithmetic") {
  const bqr_quat i = quat(0, 0, 1, 0, 0, 0, 0, 0);
  const bqr_quat j = quat(0, 0, 0, 0, 1, 0, 0, 0);
  bqr_quat out{};
  REQUIRE(bqr_quat_mul(&i, &j, &out) == BQR_OK);
  CHECK(out.c[3].re == 1.0);
  REQUIRE(bqr_quat_pow(&i, 2, &out) == BQR_OK);
  CHECK(out.c[0].re == -1.0);
  CHECK(bqr_quat_pow(&i, 0, &out) == BQR_ERR_DOMAIN);
  CHECK(bqr_quat_mul(nullptr, &j, &out) == BQR_ERR_NULL_ARGUMENT);

  bqr_complex m[16];
  REQUIRE(bqr_to_qmatrix(&kGeneric, m) == BQR_OK);
  CHECK(m[0].re == 76.0);
  CHECK(m[1].im == -24.0);
  CHECK(m[4].im == 24.0);

  int kind = -1;
  int subcase = -2;
  bqr_complex jm[16], u[16], uinv[16];
  REQUIRE(bqr_jordan_form(&kGeneric, 1e-9, BQR_BRANCH_PRINCIPAL, &kind, &subcase, jm, u, uinv) == BQR_OK);
  CHECK(kind == 1);
  CHECK(subcase == 1);
  CHECK(bqr_jordan_form(&kInsoluble, 1e-9, BQR_BRANCH_PRINCIPAL, &kind, &subcase, jm, u, uinv) == BQR_OK);
  CHECK(kind == 2);
}

TEST_CASE("C API: solve and accessors") {
  bqr_case c{};
  REQUIRE(bqr_classify(&kGeneric, 1e-9, &c) == BQR_OK);
  CHECK(c == BQR_CASE_2A_GENERIC_INVERTIBLE);

  bqr_solution_set* set = nullptr;
  REQUIRE(bqr_solve(&kGeneric, 3, 1e-9, BQR_BRANCH_PRINCIPAL, &set) == BQR_OK);
  REQUIRE(set != nullptr);
  CHECK(bqr_solution_case(set) == BQR_CASE_2A_GENERIC_INVERTIBLE);
  CHECK(bqr_solution_n(set) == 3);
  CHECK(bqr_solution_tol(set) == 1e-9);
  CHECK(bqr_solution_branch(set) == BQR_BRANCH_PRINCIPAL);
  CHECK(bqr_solution_boundary_flags(set) == 0u);
  CHECK(bqr_solution_self_check_passed(set) == 1);
  CHECK(bqr_solution_self_check_residual(set) <= 1e-12);
  CHECK(bqr_solution_insoluble_reason(set) == nullptr);
  REQUIRE(bqr_solution_isolated_count(set) == 9);
  CHECK(bqr_solution_family_count(set) == 0);

  for (std::size_t k = 0; k < 9; ++k) {
    bqr_quat x{};
    REQUIRE(bqr_solution_isolated(set, k, &x) == BQR_OK);
    double r = 1.0;
    REQUIRE(bqr_residual(&x, 3, &kGeneric, &r) == BQR_OK);
    CHECK(r <= 1e-12);
  }
  bqr_quat x{};
  CHECK(bqr_solution_isolated(set, 9, &x) == BQR_ERR_INDEX);
  bqr_family f{};
  CHECK(bqr_solution_family(set, 0, &f) == BQR_ERR_INDEX);

  bqr_report* report = nullptr;
  REQUIRE(bqr_check(&kGeneric, set, 1e-9, 3, &report) == BQR_OK);
  CHECK(bqr_report_pass(report) == 1);
  CHECK(bqr_report_residual_count(report) == 9);
  CHECK(bqr_report_max_residual(report) <= 1e-12);
  CHECK(bqr_report_tolerance(report) == 1e-9);
  CHECK(bqr_report_residual(report, 0) <= 1e-12);
  bqr_report_free(report);
  bqr_solution_free(set);
}

TEST_CASE("C API: families") {
  const bqr_quat seven = quat(7, 0, 0, 0, 0, 0, 0, 0);
  bqr_solution_set* set = nullptr;
  REQUIRE(bqr_solve(&seven, 2, 1e-9, BQR_BRANCH_PRINCIPAL, &set) == BQR_OK);
  CHECK(bqr_solution_case(set) == BQR_CASE_1A_SCALAR_INVERTIBLE);
  CHECK(bqr_solution_isolated_count(set) == 2);
  REQUIRE(bqr_solution_family_count(set) == 1);
  bqr_family f{};
  REQUIRE(bqr_solution_family(set, 0, &f) == BQR_OK);
  CHECK(f.origin == BQR_FAMILY_PAIR_OF_ROOTS);
  CHECK(std::abs(f.x0.re) + std::abs(f.x0.im) <= 1e-15);
  CHECK(f.c.re == doctest::Approx(-7.0));

  for (std::size_t k = 0; k < 5; ++k) {
    bqr_quat x{};
    REQUIRE(bqr_family_sample_deterministic(&f, k, &x) == BQR_OK);
    double r = 1.0;
    REQUIRE(bqr_residual(&x, 2, &seven, &r) == BQR_OK);
    CHECK(r <= 1e-9);
  }
  bqr_quat y{};
  REQUIRE(bqr_family_sample(&f, bqr_complex{0.0, 7.0}, bqr_complex{1.0, 0.0}, BQR_BRANCH_PRINCIPAL, &y) == BQR_OK);
  double r = 1.0;
  REQUIRE(bqr_residual(&y, 2, &seven, &r) == BQR_OK);
  CHECK(r <= 1e-9);
  bqr_solution_free(set);
}

TEST_CASE("C API: insoluble") {
  bqr_solution_set* set = nullptr;
  REQUIRE(bqr_solve(&kInsoluble, 2, 1e-9, BQR_BRANCH_PRINCIPAL, &set) == BQR_OK);
  CHECK(bqr_solution_case(set) == BQR_CASE_3B_NILPOTENT_SINGULAR);
  REQUIRE(bqr_solution_insoluble_reason(set) != nullptr);
  CHECK(std::strstr(bqr_solution_insoluble_reason(set), "insoluble") != nullptr);
  CHECK(bqr_solution_isolated_count(set) == 0);
  bqr_solution_free(set);
}

TEST_CASE("C API: errors") {
  bqr_solution_set* set = nullptr;
  CHECK(bqr_solve(&kGeneric, 1, 1e-9, BQR_BRANCH_PRINCIPAL, &set) == BQR_ERR_DOMAIN);
  CHECK(set == nullptr);
  CHECK(std::string(bqr_last_error()).size() > 0);
  CHECK(bqr_solve(nullptr, 2, 1e-9, BQR_BRANCH_PRINCIPAL, &set) == BQR_ERR_NULL_ARGUMENT);
  CHECK(bqr_solve(&kGeneric, 2, 1e-9, BQR_BRANCH_PRINCIPAL, nullptr) == BQR_ERR_NULL_ARGUMENT);

  bqr_quat nan = kGeneric;
  nan.c[2].im = std::numeric_limits<double>::quiet_NaN();
  CHECK(bqr_solve(&nan, 2, 1e-9, BQR_BRANCH_PRINCIPAL, &set) == BQR_ERR_DOMAIN);
  CHECK(bqr_solve(&kGeneric, 2, 0.0, BQR_BRANCH_PRINCIPAL, &set) == BQR_ERR_DOMAIN);
  CHECK(bqr_solve(&kGeneric, 2, 1e-9, static_cast<bqr_branch>(7), &set) == BQR_ERR_DOMAIN);

  bqr_report* report = nullptr;
  CHECK(bqr_oracle_roundtrip(1, 2, 10, static_cast<bqr_stream>(42), 1e-6, &report) == BQR_ERR_DOMAIN);
  REQUIRE(bqr_oracle_roundtrip(1, 2, 20, BQR_STREAM_GENERIC, 1e-6, &report) == BQR_OK);
  CHECK(bqr_report_pass(report) == 1);
  CHECK(bqr_report_trials(report) == 20);
  CHECK(bqr_report_recovered(report) == 20);
  CHECK(bqr_report_skipped(report) == 0);
  bqr_report_free(report);

  bqr_solution_free(nullptr);
  bqr_report_free(nullptr);
}
