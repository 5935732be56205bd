#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <xsusy/errors.hpp>
#include <xsusy/report.hpp>
#include <xsusy/verify.hpp>

#include <json.hpp>

#include <clocale>
#include <cmath>
#include <sstream>
#include <string>

using namespace xsusy;

TEST_CASE("format_double is round-trip exact and locale independent") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 1.5, 0.0}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
    CHECK(s.find(',') == std::string::npos);
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.5) == "1.5");
  CHECK(format_double(NAN) == "nan");
  // A comma-decimal locale, when installed, must not change the output.
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
    CHECK(format_double(2.25) == "2.25");
    std::setlocale(LC_NUMERIC, "C");
  }
}

TEST_CASE("make_check semantics") {
  CHECK(make_check("g", "n", 1e-9, 1e-8).passed);
  CHECK(make_check("g", "n", 1e-8, 1e-8).passed);
  CHECK_FALSE(make_check("g", "n", 2e-8, 1e-8).passed);
  CHECK_FALSE(make_check("g", "n", NAN, 1e-8).passed);
  VerifySummary s{{make_check("a", "x", 0.0, 1.0), make_check("a", "y", 2.0, 1.0)}};
  CHECK_FALSE(s.passed());
  s.checks.pop_back();
  CHECK(s.passed());
}

TEST_CASE("verify summary JSON round trip") {
  VerifySummary s{{make_check("xpoly", "residual", 3e-12, 1e-9, "note"), make_check("spectrum", "bad", 0.5, 1e-4),
                   make_check("susy", "nan", NAN, 1e-7)}};
  const auto j = to_json(s);
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(j.at("passed") == false);
  const auto parsed = verify_summary_from_json(nlohmann::json::parse(j.dump()));
  REQUIRE(parsed.checks.size() == s.checks.size());
  for (std::size_t i = 0; i < s.checks.size(); ++i) {
    CHECK(parsed.checks[i].passed == s.checks[i].passed);
    CHECK(parsed.checks[i].group == s.checks[i].group);
    CHECK(parsed.checks[i].detail == s.checks[i].detail);
  }
  CHECK(parsed.checks[0].value == 3e-12);
  CHECK(std::isnan(parsed.checks[2].value));

  // Flags are recomputed from (value, tolerance), not copied.
  auto tampered = nlohmann::json::parse(j.dump());
  tampered["checks"][1]["passed"] = true;
  CHECK_FALSE(verify_summary_from_json(tampered).checks[1].passed);

  auto wrong_version = j;
  wrong_version["schema_version"] = 99;
  CHECK_THROWS(verify_summary_from_json(wrong_version));
}

TEST_CASE("real verification summary round trips") {
  const auto summary = run_verification(VerifyOptions{{"pct", "susy"}, false});
  const auto parsed = verify_summary_from_json(nlohmann::json::parse(to_json(summary).dump()));
  REQUIRE(parsed.checks.size() == summary.checks.size());
  for (std::size_t i = 0; i < parsed.checks.size(); ++i) CHECK(parsed.checks[i].passed == summary.checks[i].passed);
  CHECK(parsed.passed() == summary.passed());
  CHECK_THROWS_AS((run_verification(VerifyOptions{{"bogus"}, false})), DomainError);
}

TEST_CASE("spectrum report") {
  const auto r = compute_spectrum(OscillatorParams{1.0, 0}, PotentialKind::extended, 3, SpectrumOptions{}, 1e-4);
  REQUIRE(r.rows.size() == 4);
  const double want[] = {1.5, 3.5, 5.5, 7.5};
  for (int i = 0; i < 4; ++i) {
    CHECK(r.rows[i].nu == i);
    CHECK(r.rows[i].e_analytic == want[i]);
    CHECK(r.rows[i].abs_diff == std::abs(r.rows[i].e_analytic - r.rows[i].e_numeric));
  }
  CHECK(r.passed());
  CHECK(r.domain_lo == 0.0);
  CHECK(r.domain_hi == oscillator_box(OscillatorParams{1.0, 0}, 3));

  const auto j = to_json(r);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("family") == "oscillator");
  CHECK(j.at("params").at("omega") == 1.0);
  CHECK(j.at("oracle").at("n_interior") == 8000);
  CHECK(j.at("rows").size() == 4);

  const std::string csv = to_csv(r);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "nu,E_analytic,E_numeric,abs_diff");
  std::getline(is, line);
  CHECK(line.rfind("0,1.5,", 0) == 0);

  SpectrumReport failing = r;
  failing.tolerance = 0.0;
  failing.rows[0].abs_diff = 1e-12;
  CHECK_FALSE(failing.passed());

  const auto s = compute_spectrum(ScarfParams{3.0, 1.0}, PotentialKind::standard, 2, SpectrumOptions{}, 1e-3);
  CHECK(s.rows[2].e_analytic == 25.0);
  CHECK(s.passed());
}

TEST_CASE("wavefunction table CSV") {
  WavefunctionTable t{{0.0, 0.5}, {1.0, 0.1}, 0, false};
  CHECK(to_csv(t) == "x,psi\n0,1\n0.5,0.10000000000000001\n");
  const std::vector<double> phi{2.0, 3.0}, psi10{4.0, 5.0};
  CHECK(to_csv(t, &phi, &psi10) == "x,psi,phi,psi10\n0,1,2,4\n0.5,0.10000000000000001,3,5\n");
}
