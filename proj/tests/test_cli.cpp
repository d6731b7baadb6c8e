#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>

#include "cuntz/io.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/suites.hpp"
#include "oracles.hpp"

using namespace cuntz;
using E = Element<CycloScalar>;

namespace {

E S(unsigned n, unsigned i) { return E::generator(n, i); }

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CUNTZ_CLI) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), got);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_TRUE(parse_element<CycloScalar>("S1*S2'", 2).equals(S(2, 1) * S(2, 2).adjoint()));
  EXPECT_TRUE(parse_element<CycloScalar>("(1/2)*(S1 + S2)", 2).equals((S(2, 1) + S(2, 2)) * CycloScalar(Rational(1, 2))));
  E v(3);
  for (unsigned k = 1; k <= 3; ++k) v += S(3, k) * S(3, k).adjoint() * CycloScalar::root_of_unity(3, k);
  EXPECT_TRUE(parse_element<CycloScalar>("zeta(3,1)*S1*S1' + zeta(3,2)*S2*S2' + S3*S3'", 3).equals(v));
  EXPECT_TRUE(parse_element<CycloScalar>("(S1*S2)'", 2).equals(S(2, 2).adjoint() * S(2, 1).adjoint()));
  EXPECT_TRUE(parse_element<CycloScalar>("sqrt(2)*sqrt(2)", 2).equals(E::one(2) * CycloScalar(2)));
  EXPECT_TRUE(parse_element<CycloScalar>("0.25 - 1/4", 2).is_zero());
  EXPECT_TRUE(parse_element<CycloScalar>(" S1 '\n* S1", 2).equals(E::one(2)));
}

TEST(Parse, TickBindsTighterThanProduct) {
  EXPECT_TRUE(parse_element<CycloScalar>("S1*S2'", 2).equals(S(2, 1) * S(2, 2).adjoint()));
  EXPECT_FALSE(parse_element<CycloScalar>("S1*S2'", 2).equals((S(2, 1) * S(2, 2)).adjoint()));
}

TEST(Parse, Errors) {
  try {
    parse_element<CycloScalar>("S1 +\n  * S2", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_TRUE(e.expected().count("'('"));
    EXPECT_TRUE(e.expected().count("generator S<k>"));
  }
  EXPECT_THROW(parse_element<CycloScalar>("S3", 2), ParseError);
  EXPECT_THROW(parse_element<CycloScalar>("S0", 2), ParseError);
  EXPECT_THROW(parse_element<CycloScalar>("1/0*S1", 2), ParseError);
  EXPECT_THROW(parse_element<CycloScalar>("(S1", 2), ParseError);
  EXPECT_THROW(parse_element<CycloScalar>("S1 S2", 2), ParseError);
  EXPECT_THROW(parse_element<CycloScalar>("zeta(0,1)", 2), ParseError);
  EXPECT_THROW(parse_element<CycloScalar>("x", 2), ParseError);
}

TEST(Format, Examples) {
  EXPECT_EQ(format_element(E::one(2)), "1");
  EXPECT_EQ(format_element(S(2, 1) * S(2, 1).adjoint() + S(2, 2) * S(2, 2).adjoint()), "1");
  EXPECT_EQ(format_element(-S(2, 1)), "-S1");
  EXPECT_EQ(format_element(S(2, 1) * CycloScalar(Rational(1, 2))), "1/2*S1");
  EXPECT_EQ(format_element(E(2)), "0");
  EXPECT_EQ(format_element(S(2, 1) * S(2, 2) * S(2, 1).adjoint()), "S1*S2*S1'");
}

TEST(Format, RoundTripsThroughParse) {
  configure_numeric({});
  Sampler rng(kDefaultSeed);
  for (unsigned n = 2; n <= 4; ++n)
    for (int t = 0; t < 50; ++t) {
      const auto spec = random_element_spec(rng, n, {4, 3, 12});
      const E x = realize<CycloScalar>(spec, n);
      EXPECT_TRUE(parse_element<CycloScalar>(format_element(x), n).equals(x)) << format_element(x);
      const auto xn = realize<NumericScalar>(spec, n);
      EXPECT_TRUE(parse_element<NumericScalar>(format_element(xn), n).equals(xn)) << format_element(xn);
    }
}

TEST(Json, RoundTrips) {
  Sampler rng(4);
  for (int t = 0; t < 30; ++t) {
    const E x = realize<CycloScalar>(random_element_spec(rng, 3, {3, 3, 6}), 3);
    EXPECT_TRUE(element_from_json<CycloScalar>(to_json(x)).equals(x));
    const Json j = Json::parse(to_json(x).dump());
    EXPECT_TRUE(element_from_json<CycloScalar>(j).equals(x));
  }
  const CyclicModel<CycloScalar> model(3);
  EXPECT_TRUE(matrix_from_json<CycloScalar>(to_json(model.T[1])).equals(model.T[1]));
  const auto e = named_endo<CycloScalar>(EndoKind::cyclic, 3);
  EXPECT_TRUE(endo_from_json<CycloScalar>(to_json(e)).equals(e));
  const Json scalar = scalar_to_json(CycloScalar(Rational(-7, 3)));
  EXPECT_EQ(scalar["M"], 1);
  EXPECT_EQ(scalar["coeffs"][0][0], "-7");
  EXPECT_EQ(scalar["coeffs"][0][1], "3");
  const Json bundle = to_json(model);
  for (const char* key : {"v", "Z", "T", "w", "s", "bigT", "R"}) EXPECT_TRUE(bundle.contains(key)) << key;
}

TEST(Report, DeterministicAndSorted) {
  const auto a = run_suite("nogo", 2, Backend::exact);
  const auto b = run_suite("nogo", 2, Backend::exact);
  EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
  const Json j = a.to_json(true);
  EXPECT_TRUE(j.contains("elapsed_ms"));
  EXPECT_EQ(j["suite"], "nogo");
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) ids.push_back(c["id"]);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  CheckReport r{"x", 2, "exact", {}, {}};
  r.add(make_check("a", true, ""));
  EXPECT_THROW(r.add(make_check("a", true, "")), Error);
}

TEST(Report, SuiteBounds) {
  EXPECT_THROW(run_suite("nogo", 3, Backend::exact), InvalidArgument);
  EXPECT_THROW(run_suite("exchange", 3, Backend::exact), InvalidArgument);
  EXPECT_THROW(run_suite("spectral", 7, Backend::exact), InvalidArgument);
  EXPECT_THROW(run_suite("bogus", 2, Backend::exact), InvalidArgument);
}

TEST(Report, BackendsAgreeOnSmallSuites) {
  configure_numeric({});
  for (const char* suite : {"spectral", "nogo", "algebra-laws"}) {
    const auto a = run_suite(suite, 2, Backend::exact);
    const auto b = run_suite(suite, 2, Backend::numeric);
    EXPECT_TRUE(verdict_differences(a, b).empty()) << suite;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify --suite nogo --n 2").code, 0);
  EXPECT_EQ(run("verify --suite cyclic-fixed --n 3").code, 1);
  EXPECT_EQ(run("verify --suite nogo --n 3").code, 2);
  EXPECT_EQ(run("verify --suite nope --n 2").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("eval \"S1 +\"").code, 2);
  EXPECT_EQ(run("eq \"S1\" \"S1*S1*S1' + S1*S2*S2'\"").code, 0);
  EXPECT_EQ(run("eq \"S1\" \"S2\"").code, 1);
}

TEST(Cli, EvalPrintsContractedForm) {
  const auto r = run("eval \"S1*S1' + S2*S2'\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run("eval --n 3 -- \"-S3\"").out, "-S3\n");
}

TEST(Cli, ReportJsonIsByteStable) {
  const auto a = run("report --json --suite spectral --n 3 --no-timing");
  const auto b = run("report --json --suite spectral --n 3 --no-timing");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["backend"], "exact");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["elapsed_ms"], 0);
}

TEST(Cli, SeedChangesSamplesNotVerdicts) {
  const auto a = run("report --suite algebra-laws --n 3 --seed 1 --no-timing");
  const auto b = run("report --suite algebra-laws --n 3 --seed 2 --no-timing");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
}
