#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "hdet/gammafactor.hpp"
#include "hdet/selberg.hpp"
#include "hdet/verify.hpp"

using namespace hdet;

namespace {
const double kPi2_12 = 0.82246703342411321824;  // pi^2/12
double cnorm(CValue a, CValue b) { return std::abs(a - b); }
}  // namespace

TEST_CASE("bundled spectrum: shape, gap, and the shipped JSON copy") {
  const LengthSpectrum& spec = builtin_spectrum();
  CHECK(spec.genus == 2);
  CHECK(spec.label == "synthetic");
  CHECK(spec.primitives.size() == 5);
  CHECK(spec.primitives.front().norm == doctest::Approx(7.25));
  CHECK(spec.spectral_gap() ==
        doctest::Approx(std::log(7.25)).epsilon(1e-15));
  spec.validate();  // must not throw

  LengthSpectrum shipped = load_spectrum_file(HDET_DATA_DIR
                                              "/synthetic.json");
  CHECK(shipped.genus == spec.genus);
  CHECK(shipped.label == spec.label);
  REQUIRE(shipped.primitives.size() == spec.primitives.size());
  for (size_t i = 0; i < shipped.primitives.size(); ++i) {
    CHECK(shipped.primitives[i].norm == spec.primitives[i].norm);
    CHECK(shipped.primitives[i].multiplicity ==
          spec.primitives[i].multiplicity);
  }
}

TEST_CASE("polylogarithm inside the unit disc") {
  // Li_1(z) = -log(1 - z)
  CValue z(0.4, 0.3);
  CHECK(cnorm(polylog(1, z), -std::log(CValue(1.0, 0.0) - z)) < 1e-13);
  // Li_2(1/2) = pi^2/12 - log(2)^2/2
  double l2 = std::log(2.0);
  CHECK(std::abs(polylog(2, CValue(0.5, 0.0)).real() -
                 (kPi2_12 - 0.5 * l2 * l2)) < 1e-13);
  // frozen multiprecision value
  CHECK(std::abs(polylog(3, CValue(0.5, 0.0)).real() -
                 0.53721319360804020094) < 1e-13);
  CHECK_THROWS_AS(polylog(1, CValue(1.2, 0.0)), domain_error);
}

TEST_CASE("poly-zeta: class sum and shifted-product routes agree") {
  const LengthSpectrum& spec = builtin_spectrum();
  double tail_a = 0.0, tail_b = 0.0;
  for (int m : {1, 2, 5}) {
    CValue s(2.3, 0.4);
    CValue a = log_poly_selberg(m, s, spec, {}, &tail_a);
    CValue b = log_poly_selberg_product(m, s, spec, {}, &tail_b);
    CHECK(cnorm(a, b) < 1e-10 + tail_a + tail_b);
    CHECK(tail_a >= 0.0);
    CHECK(tail_b >= 0.0);
  }
}

TEST_CASE("order ladder and depth ladder close numerically") {
  const LengthSpectrum& spec = builtin_spectrum();
  CHECK(std::abs(ladder_residual_poly(2, CValue(2.5, 0.0), spec)) < 1e-6);
  CHECK(std::abs(ladder_residual_poly(3, CValue(2.2, 0.3), spec)) < 1e-6);
  CHECK(std::abs(ladder_residual_MS(2, CValue(2.5, 0.0), spec)) < 1e-6);
  CHECK(std::abs(ladder_residual_MS(3, CValue(2.4, 0.0), spec)) < 1e-6);
}

TEST_CASE("iterated-integral reconstruction of higher orders") {
  const LengthSpectrum& spec = builtin_spectrum();
  CHECK(std::abs(iterated_integral_check(2, CValue(3.0, 0.0),
                                         CValue(2.0, 0.0), spec)) < 1e-6);
  CHECK(std::abs(iterated_integral_check(3, CValue(2.5, 0.0),
                                         CValue(2.0, 0.0), spec)) < 1e-5);
  // degenerate path contributes nothing
  CHECK(std::abs(iterated_integral_check(2, CValue(2.0, 0.0),
                                         CValue(2.0, 0.0), spec)) < 1e-12);
}

TEST_CASE("depth assembly uses the printed weights") {
  const LengthSpectrum& spec = builtin_spectrum();
  CValue s(2.5, 0.0), t = s - 0.5;
  // depth 2: -(2t) log Z^{(2)} - 2 log Z^{(3)}
  CValue direct = -(2.0 * t) * log_poly_selberg(2, s, spec) -
                  2.0 * log_poly_selberg(3, s, spec);
  CHECK(cnorm(log_milnor_selberg(2, s, spec), direct) < 1e-12);
  // depth 1 is the order-1 zeta itself
  CHECK(cnorm(log_milnor_selberg(1, s, spec),
              log_poly_selberg(1, s, spec)) < 1e-13);
}

TEST_CASE("complete zeta differs from the geometric determinant by the "
          "leading exponential") {
  const LengthSpectrum& spec = builtin_spectrum();
  CValue s(1.3, 0.0), t = s - 0.5;
  // complete = geometric - (g-1) C_1 t^2 with C_1 = -2 and g = 2
  CValue diff = log_complete_MS(1, s, spec) - log_higher_det_geom(1, s, spec);
  CHECK(cnorm(diff, 2.0 * t * t) < 1e-8);
}

TEST_CASE("geometric determinant splits into gamma factor plus zeta") {
  const LengthSpectrum& spec = builtin_spectrum();
  CValue s(1.8, 0.0);
  CValue lhs = log_higher_det_geom(2, s, spec);
  CValue rhs = double(spec.genus - 1) *
                   log_phi(2, s, PhiForm::BarnesForm).value +
               log_milnor_selberg(2, s, spec);
  CHECK(cnorm(lhs, rhs) < 1e-10);
}

TEST_CASE("reflection diagnostic is wired as left minus assembled right") {
  const LengthSpectrum& spec = builtin_spectrum();
  CValue s(1.4, 0.0);
  CValue probe(0.37, -0.21);
  CValue base = fe_diagnostic_MS(1, s, CValue(0.0, 0.0), spec);
  CValue shifted = fe_diagnostic_MS(1, s, probe, spec);
  CHECK(cnorm(shifted - base, probe) < 1e-13);
  CHECK_THROWS_AS(fe_diagnostic_MS(1, CValue(2.5, 0.0), CValue(0.0, 0.0),
                                   spec),
                  domain_error);
}

TEST_CASE("truncation policy: refusal carries the best estimate") {
  const LengthSpectrum& spec = builtin_spectrum();
  TruncationPolicy tight;
  tight.k_max = 3;
  tight.tail_target = 1e-18;
  bool threw = false;
  try {
    log_poly_selberg(1, CValue(1.05, 0.0), spec, tight);
  } catch (const accuracy_error& e) {
    threw = true;
    CHECK(e.err_bound > 0.0);
    CHECK(std::isfinite(e.best_estimate.real()));
  }
  CHECK(threw);
}

TEST_CASE("spectrum JSON parser reports positions on rejection") {
  CHECK_THROWS_AS(parse_spectrum_json("{"), spectrum_parse_error);
  try {
    parse_spectrum_json(
        "{\"genus\": 2, \"label\": \"x\",\n \"primitives\": [{\"norm\": 0.5, "
        "\"multiplicity\": 1}]}");
    CHECK(false);
  } catch (const spectrum_parse_error& e) {
    CHECK(e.line >= 1);
    CHECK(e.column >= 1);
  }
  CHECK_THROWS_AS(parse_spectrum_json(
                      "{\"genus\": 1, \"label\": \"x\", \"primitives\": "
                      "[{\"norm\": 2.0, \"multiplicity\": 1}]}"),
                  spectrum_parse_error);
  CHECK_THROWS_AS(parse_spectrum_json(
                      "{\"genus\": 2, \"label\": \"x\", \"primitives\": "
                      "[{\"norm\": 2.0, \"multiplicity\": 1}], \"extra\": 0}"),
                  spectrum_parse_error);
}

TEST_CASE("verification suite: length-spectrum identities all pass") {
  VerificationReport rep = run_suite("selberg");
  for (const auto& c : rep.cases) {
    INFO(c.name, " residual=", c.residual, " at ", c.point);
    CHECK(c.passed);
  }
  CHECK(rep.cases_total() >= 12);
}
