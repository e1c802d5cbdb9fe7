// Copyright 2026 The qdft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "qdft/qdft1d.hpp"
#include "qdft/qdft2d.hpp"
#include "qdft/report.hpp"
#include "qdft/rng.hpp"
#include "qdft/signal_io.hpp"
#include "qdft/util.hpp"

using namespace qdft;

namespace {

ComplexVec parse(const std::string& text) {
  std::istringstream in(text);
  return parse_signal_csv(in);
}

ComplexMatrix pgm(const std::string& text) {
  std::istringstream in(text);
  return load_pgm(in);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("csv signals parse") {
  CHECK(parse("1\n2\n3\n4\n") == ComplexVec{1.0, 2.0, 3.0, 4.0});
  CHECK(parse("1,0\n0,1\n") == ComplexVec{Complex(1.0, 0.0), Complex(0.0, 1.0)});
  CHECK(parse("# comment\n\n  \n-2.5 , 3e2\n") == ComplexVec{Complex(-2.5, 300.0)});
  CHECK(parse("7") == ComplexVec{Complex(7.0, 0.0)});
}

TEST_CASE("csv errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse("1\nx\n"), "line 2: bad numeric token 'x'", ParseError);
  CHECK_THROWS_AS(parse("1,2,3\n"), ParseError);
  CHECK_THROWS_AS(parse("1,\n"), ParseError);
  CHECK_THROWS_AS(parse("nan\n"), ParseError);
  CHECK_THROWS_AS(parse(""), std::domain_error);
  CHECK_THROWS_AS(parse("# only comments\n"), std::domain_error);
}

TEST_CASE("ascii pgm parses") {
  const ComplexMatrix m = pgm("P2\n2 2\n255\n1 1\n1 1\n");
  REQUIRE(m.rows == 2);
  REQUIRE(m.cols == 2);
  for (const Complex& v : m.data) CHECK(v == Complex(1.0, 0.0));
}

TEST_CASE("pgm header comments are skipped") {
  const ComplexMatrix m = pgm("P2\n# made by hand\n2 # width\n2\n255\n0 64\n128 255\n");
  CHECK(m(0, 0) == Complex(0.0));
  CHECK(m(0, 1) == Complex(64.0));
  CHECK(m(1, 0) == Complex(128.0));
  CHECK(m(1, 1) == Complex(255.0));
}

TEST_CASE("non-square images center-crop to a square") {
  const ComplexMatrix wide = pgm("P2\n3 2\n255\n1 2 3\n4 5 6\n");
  REQUIRE(wide.rows == 2);
  CHECK(wide(0, 0) == Complex(1.0));
  CHECK(wide(0, 1) == Complex(2.0));
  CHECK(wide(1, 0) == Complex(4.0));
  CHECK(wide(1, 1) == Complex(5.0));

  const ComplexMatrix tall = pgm("P2\n2 3\n255\n1 2\n3 4\n5 6\n");
  REQUIRE(tall.rows == 2);
  CHECK(tall(0, 0) == Complex(1.0));
  CHECK(tall(1, 1) == Complex(4.0));
}

TEST_CASE("binary pgm parses one- and two-byte samples") {
  std::string p5 = "P5\n2 2\n255\n";
  p5 += std::string{'\x00', '\x40', '\x7f', '\xff'};
  const ComplexMatrix m = pgm(p5);
  CHECK(m(0, 0) == Complex(0.0));
  CHECK(m(0, 1) == Complex(64.0));
  CHECK(m(1, 0) == Complex(127.0));
  CHECK(m(1, 1) == Complex(255.0));

  std::string wide = "P5\n1 1\n65535\n";
  wide += std::string{'\x01', '\x02'};
  CHECK(pgm(wide)(0, 0) == Complex(258.0));
}

TEST_CASE("malformed pgm inputs are rejected") {
  CHECK_THROWS_AS(pgm("P3\n2 2\n255\n1 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(pgm("P2\n0 2\n255\n"), ParseError);
  CHECK_THROWS_AS(pgm("P2\n2 2\n0\n1 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(pgm("P2\n2 2\n70000\n1 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(pgm("P2\n2 2\n255\n1 1 300 1\n"), ParseError);
  CHECK_THROWS_AS(pgm("P2\n2 2\n255\n1 1\n"), ParseError);
  CHECK_THROWS_AS(pgm(std::string("P5\n2 2\n255\n") + std::string{'\x01'}), ParseError);
  CHECK_THROWS_AS(pgm("P2\n2 x\n255\n1 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(pgm(""), ParseError);
}

TEST_CASE("json report shape") {
  RngStream rng(81);
  RunConfig cfg;
  cfg.subcommand = "dft1d";
  cfg.epsilon = 0.05;
  cfg.seed = 81;
  cfg.inputs = {"sig.csv"};

  const QdftRun zero = qdft_1d(ComplexVec(4, 0.0), 0.05, rng);
  const std::string empty_json = emit_report(make_report(cfg, zero), ReportFormat::json);
  CHECK(contains(empty_json, "\"entries\": []"));
  CHECK(contains(empty_json, "\"grover_iterations\": 0"));
  CHECK(contains(empty_json, "\"subcommand\": \"dft1d\""));
  CHECK(contains(empty_json, "\"trace\": []"));

  const QdftRun run = qdft_1d(ComplexVec{1.0, 2.0, 3.0, 4.0}, 0.05, rng);
  const std::string j = emit_report(make_report(cfg, run), ReportFormat::json);
  CHECK(contains(j, "\"index\": 0"));
  CHECK(contains(j, "\"re\": 5.0"));
  CHECK(contains(j, "\"energy\": 25.0"));
  CHECK(contains(j, "\"ns\": 3"));
  CHECK(contains(j, "\"total_energy\": 30.0"));
}

TEST_CASE("csv report carries the frozen all-ones row") {
  RngStream rng(82);
  RunConfig cfg;
  cfg.subcommand = "dft1d";
  cfg.format = ReportFormat::csv;
  const QdftRun run = qdft_1d(ComplexVec{1.0, 1.0, 1.0, 1.0}, 0.05, rng);
  const std::string csv = emit_report(make_report(cfg, run), ReportFormat::csv);
  CHECK(contains(csv, "index,re,im,energy\n0,2,0,4\n"));
  CHECK(contains(csv, "# ns=1\n"));
  CHECK(contains(csv, "# total_energy=4\n"));
}

TEST_CASE("pair entries serialize as row:col") {
  ComplexMatrix ones(2, 2);
  ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
  RngStream rng(83);
  RunConfig cfg;
  cfg.subcommand = "dft2d";
  const Qdft2dRun run = qdft_2d(ones, 0.01, rng);
  const RunReport rep = make_report(cfg, run);

  const std::string csv = emit_report(rep, ReportFormat::csv);
  CHECK(contains(csv, "\n0:0,"));
  CHECK(contains(csv, "# column_pass_ns=2\n"));

  const std::string j = emit_report(rep, ReportFormat::json);
  CHECK(contains(j, "\"row\": 0"));
  CHECK(contains(j, "\"col\": 0"));
  CHECK(contains(j, "\"column_pass\""));
}

TEST_CASE("reports serialize deterministically") {
  RunConfig cfg;
  cfg.subcommand = "dft1d";
  cfg.seed = 84;
  const ComplexVec x{1.0, -2.0, Complex(0.0, 3.0), 4.0};
  RngStream r1(84);
  RngStream r2(84);
  const std::string a = emit_report(make_report(cfg, qdft_1d(x, 0.1, r1)),
                                    ReportFormat::json);
  const std::string b = emit_report(make_report(cfg, qdft_1d(x, 0.1, r2)),
                                    ReportFormat::json);
  CHECK(a == b);
}

TEST_CASE("convolution reports carry both ledgers and the estimate") {
  RngStream rng(85);
  RunConfig cfg;
  cfg.subcommand = "conv";
  const ComplexVec x{1.0, 2.0, 3.0, 4.0};
  ComplexVec delta(4, 0.0);
  delta[0] = 1.0;
  const ConvolutionReport conv = conv_via_qdft(x, delta, 0.001, rng);
  const RunReport rep = make_report(cfg, conv, conv.w_hat.size());

  const std::string j = emit_report(rep, ReportFormat::json);
  CHECK(contains(j, "\"w_hat\""));
  CHECK(contains(j, "\"w_exact\""));
  CHECK(contains(j, "\"relative_l2_error\""));
  CHECK(contains(j, "\"ledger_u\""));
  CHECK(contains(j, "\"ledger_v\""));

  const std::string csv = emit_report(rep, ReportFormat::csv);
  CHECK(contains(csv, "# w_hat\nindex,re,im\n"));
  CHECK(contains(csv, "# u_grover_iterations="));
  CHECK(contains(csv, "# relative_l2_error="));
}

}  // TEST_SUITE

TEST_SUITE("util") {

TEST_CASE("compensated summation survives cancellation") {
  detail::KahanSum sum;
  sum.add(1.0);
  sum.add(1e100);
  sum.add(1.0);
  sum.add(-1e100);
  CHECK(sum.value() == 2.0);

  detail::KahanSum tiny;
  for (int i = 0; i < 10'000'000; ++i) tiny.add(0.1);
  CHECK(tiny.value() == doctest::Approx(1e6).epsilon(1e-12));
}

TEST_CASE("internal_check throws logic errors") {
  CHECK_NOTHROW(detail::internal_check(true, "fine"));
  CHECK_THROWS_WITH_AS(detail::internal_check(false, "boom"), "boom",
                       std::logic_error);
}

}  // TEST_SUITE
