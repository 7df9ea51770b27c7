/*
 * Copyright 2026 The privlogit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "privlogit/core/logistic.hpp"
#include "privlogit/core/optimizer.hpp"
#include "privlogit/errors.hpp"
#include "privlogit/harness/bench.hpp"
#include "privlogit/harness/csv.hpp"
#include "privlogit/harness/report.hpp"
#include "privlogit/harness/simulate.hpp"
#include "support.hpp"

using namespace privlogit;
using namespace privlogit::harness;
using privlogit::testing::max_abs_diff;
using privlogit::testing::random_dataset;

namespace {

namespace fs = std::filesystem;

// Removes itself on scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& contents, const std::string& suffix = ".csv") {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("privlogit_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + suffix);
    std::ofstream(path_) << contents;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
};

CsvSpec spec_for(const std::string& path) {
  CsvSpec s;
  s.paths = {path};
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BenchReport fixed_report() {
  BenchReport r;
  r.dataset = "simulate:100,2,7";
  r.n = 100;
  r.p = 2;
  r.nodes = 3;
  r.seed = 11;
  r.lambda = 0.5;
  r.tol = 1e-6;
  r.key_bits = 1024;
  r.keygen_seconds = 1.25;
  MethodEntry a;
  a.method = Method::kPlainNewton;
  a.ok = true;
  a.iterations = 5;
  a.converged = true;
  a.total_seconds = 0.001;
  a.beta = Vector(2);
  a.beta << 0.5, -0.25;
  a.r2_vs_newton = 1.0;
  MethodEntry b;
  b.method = Method::kPrivLogitLocal;
  b.ok = true;
  b.iterations = 21;
  b.converged = true;
  b.setup_seconds = 0.5;
  b.total_seconds = 2.0;
  b.counters.encryptions = 40;
  b.counters.sec_muls = 3;
  b.counters.reveals = 42;
  b.counters.rounds = 90;
  b.bytes = 123456;
  b.beta = Vector(2);
  b.beta << 0.5, -0.125;
  b.r2_vs_newton = 1.0;
  b.speedup = 4.0;
  MethodEntry c;
  c.method = Method::kSecureNewton;
  c.error = "newton step: matrix, not positive definite";
  c.beta = Vector(0);
  r.entries = {a, b, c};
  return r;
}

}  // namespace

TEST_SUITE("csv") {
  TEST_CASE("three-row fixture") {
    TempFile f("a,b,y\n1,2,0\n3,4,1\n5,6,1\n");
    const auto d = load_csv(spec_for(f.path()));
    CHECK(d.data.rows() == 3);
    CHECK(d.data.cols() == 2);
    CHECK(d.data.x()(2, 1) == 6.0);
    CHECK(d.data.y()(0) == 0.0);
    CHECK(d.feature_names == std::vector<std::string>{"a", "b"});
  }

  TEST_CASE("response by name or index, intercept first") {
    TempFile f("y,a\n1,2\n0,4\n");
    auto s = spec_for(f.path());
    s.response_column = "y";
    s.add_intercept = true;
    const auto d = load_csv(s);
    CHECK(d.feature_names == std::vector<std::string>{"intercept", "a"});
    CHECK(d.data.x()(0, 0) == 1.0);
    CHECK(d.data.x()(1, 1) == 4.0);
    CHECK(d.data.y()(0) == 1.0);
    s.response_column = "0";
    CHECK(load_csv(s).data.y()(1) == 0.0);
    s.response_column = "nope";
    CHECK_THROWS_AS(load_csv(s), ConfigError);
  }

  TEST_CASE("malformed inputs") {
    TempFile nonbinary("a,y\n1,2\n");
    CHECK_THROWS_AS(load_csv(spec_for(nonbinary.path())), ParseError);
    TempFile text("a,y\n1,0\nx,1\n");
    try {
      load_csv(spec_for(text.path()));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("row") != std::string::npos);
    }
    TempFile ragged("a,b,y\n1,2,0\n3,1\n");
    CHECK_THROWS_AS(load_csv(spec_for(ragged.path())), ParseError);
    TempFile empty("");
    CHECK_THROWS_AS(load_csv(spec_for(empty.path())), EmptyInput);
    TempFile header_only("a,y\n");
    CHECK_THROWS_AS(load_csv(spec_for(header_only.path())), EmptyInput);
    CHECK_THROWS(load_csv(spec_for("/nonexistent/file.csv")));
  }

  TEST_CASE("semicolons, quotes and merged files") {
    TempFile f1("\"a\";\"q\"\n1;5\n2;7\n");
    TempFile f2("\"a\";\"q\"\n3;6\n");
    CsvSpec s;
    s.paths = {f1.path(), f2.path()};
    s.binarize = BinarizeRule::parse(">=6");
    const auto d = load_csv(s);
    CHECK(d.data.rows() == 3);
    CHECK(d.data.y()(0) == 0.0);
    CHECK(d.data.y()(1) == 1.0);
    CHECK(d.data.y()(2) == 1.0);
    CHECK(d.data.x()(2, 0) == 3.0);

    TempFile other("\"b\";\"q\"\n3;6\n");
    s.paths = {f1.path(), other.path()};
    CHECK_THROWS_AS(load_csv(s), ParseError);
  }

  TEST_CASE("binarize rules") {
    CHECK(BinarizeRule::parse(">=6").apply(6));
    CHECK_FALSE(BinarizeRule::parse(">6").apply(6));
    CHECK(BinarizeRule::parse("<= 2.5").apply(2.5));
    CHECK(BinarizeRule::parse("<3").apply(2));
    CHECK(BinarizeRule::parse("==1").apply(1));
    CHECK_FALSE(BinarizeRule::parse("==1").apply(2));
    CHECK_THROWS_AS(BinarizeRule::parse("~5"), ConfigError);
    CHECK_THROWS_AS(BinarizeRule::parse(">="), ConfigError);
  }

  TEST_CASE("standardization uses the population deviation") {
    Matrix x(4, 2);
    x << 1, 3, 2, 3, 3, 3, 4, 3;
    standardize_columns(x);
    CHECK(x.col(0).mean() == doctest::Approx(0.0));
    CHECK((x.col(0).array().square().mean()) == doctest::Approx(1.0));
    CHECK(x(0, 0) == doctest::Approx(-1.5 / std::sqrt(1.25)));
    CHECK(x.col(1).cwiseAbs().maxCoeff() == 0.0);
  }

  TEST_CASE("write then load round trips") {
    const auto d = random_dataset(25, 3, 4);
    TempFile f("");
    write_csv(d, f.path());
    const auto back = load_csv(spec_for(f.path()));
    CHECK(back.data.x() == d.x());
    CHECK(back.data.y() == d.y());
  }

  TEST_CASE("bundled red wine file parses") {
    CsvSpec s;
    s.paths = {default_wine_dir() + "/winequality-red.csv"};
    s.binarize = BinarizeRule::parse(">=6");
    if (!fs::exists(s.paths[0])) return;
    const auto d = load_csv(s);
    CHECK(d.data.rows() == 1599);
    CHECK(d.data.cols() == 11);
    CHECK(d.data.y().sum() == 855);  // quality >= 6 in the red set
  }
}

TEST_SUITE("simulate") {
  TEST_CASE("spec parsing") {
    const auto s = SimSpec::parse("100,3,9");
    CHECK(s.n == 100);
    CHECK(s.p == 3);
    CHECK(s.seed == 9);
    CHECK_THROWS_AS(SimSpec::parse("100,3"), ConfigError);
    CHECK_THROWS_AS(SimSpec::parse("0,3,1"), ConfigError);
    CHECK_THROWS_AS(SimSpec::parse("a,b,c"), ConfigError);
  }

  TEST_CASE("same seed, same data") {
    const SimSpec s{200, 4, 42, std::nullopt};
    const auto a = simulate(s), b = simulate(s);
    CHECK(a.x() == b.x());
    CHECK(a.y() == b.y());
    CHECK(simulation_beta(s) == simulation_beta(s));
    const auto c = simulate({200, 4, 43, std::nullopt});
    CHECK(a.x() != c.x());
  }

  TEST_CASE("large simulation is fast") {
    const auto t0 = std::chrono::steady_clock::now();
    const auto d = simulate({50000, 10, 1, std::nullopt});
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(d.rows() == 50000);
    CHECK(s < 5.0);
  }

  TEST_CASE("zero coefficients give balanced labels") {
    SimSpec s{10000, 5, 3, Vector::Zero(5)};
    const auto d = simulate(s);
    CHECK(std::abs(d.y().mean() - 0.5) <= 0.02);
  }

  TEST_CASE("fit recovers the generating coefficients") {
    const SimSpec s{20000, 4, 5, std::nullopt};
    const auto r = newton_fit(simulate(s), {});
    CHECK(max_abs_diff(r.beta, simulation_beta(s)) < 0.1);
  }
}

TEST_SUITE("partition") {
  TEST_CASE("block sizes") {
    const auto d = random_dataset(10, 2, 1);
    const auto parts = partition(d, 4, 7);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0].rows() == 3);
    CHECK(parts[1].rows() == 3);
    CHECK(parts[2].rows() == 2);
    CHECK(parts[3].rows() == 2);
    CHECK_THROWS_AS(partition(d, 11, 7), PartitionError);
    CHECK_THROWS_AS(partition(d, 1, 7), PartitionError);
    CHECK_THROWS_AS(partition(random_dataset(100, 2, 1), 65, 7), PartitionError);
  }

  TEST_CASE("blocks cover every row exactly once") {
    const auto d = random_dataset(257, 3, 2);
    for (int s : {2, 5, 20, 64}) {
      const auto parts = partition(d, s, 99);
      std::multiset<std::vector<double>> seen, all;
      for (Eigen::Index i = 0; i < d.rows(); ++i) {
        const Vector r = d.x().row(i);
        all.insert({r.data(), r.data() + r.size()});
      }
      Eigen::Index total = 0;
      for (const auto& p : parts) {
        total += p.rows();
        CHECK(p.rows() >= d.rows() / s);
        CHECK(p.rows() <= d.rows() / s + 1);
        for (Eigen::Index i = 0; i < p.rows(); ++i) {
          const Vector r = p.x().row(i);
          seen.insert({r.data(), r.data() + r.size()});
        }
      }
      CHECK(total == d.rows());
      CHECK(seen == all);
    }
  }

  TEST_CASE("partitioning is seeded") {
    const auto d = random_dataset(50, 2, 3);
    CHECK(partition(d, 3, 1)[0].x() == partition(d, 3, 1)[0].x());
    CHECK(partition(d, 3, 1)[0].x() != partition(d, 3, 2)[0].x());
  }

  TEST_CASE("local gradients sum to the pooled gradient") {
    const auto d = random_dataset(300, 4, 8);
    Vector b(4);
    b << 0.1, -0.3, 0.2, 0.05;
    Vector sum = Vector::Zero(4);
    for (const auto& p : partition(d, 6, 3)) sum += gradient(p, b, 0);
    CHECK(max_abs_diff(sum, gradient(d, b, 0)) < 1e-10);
  }
}

TEST_SUITE("bench") {
  TEST_CASE("method names") {
    CHECK(parse_methods("all").size() == 5);
    const auto m = parse_methods("plain-newton,privlogit-local");
    REQUIRE(m.size() == 2);
    CHECK(m[1] == Method::kPrivLogitLocal);
    CHECK_THROWS_AS(parse_methods("plain-newton,bogus"), ConfigError);
    CHECK(is_secure(Method::kSecureNewton));
    CHECK_FALSE(is_secure(Method::kPlainPrivLogit));
  }

  TEST_CASE("r squared") {
    Vector a(3), b(3);
    a << 1, 2, 3;
    b << 2, 4, 6;
    CHECK(r_squared(a, b) == doctest::Approx(1.0));
    b << 3, 2, 1;
    CHECK(r_squared(a, b) == doctest::Approx(1.0));
    b << 1, 3, 2;
    CHECK(r_squared(a, b) == doctest::Approx(0.25));
    Vector one(1), other(1);
    one << 0.5;
    other << 0.5000001;
    CHECK(r_squared(one, other) == doctest::Approx(1.0));
    other << -0.5;
    CHECK(r_squared(one, other) == doctest::Approx(1.0));
    Vector c(2), z = Vector::Zero(2);
    c << 2, 2;
    CHECK(r_squared(c, Vector::Constant(2, 3.0)) == doctest::Approx(1.0));
    CHECK(r_squared(z, z) == 1.0);
    CHECK(r_squared(z, c) == 0.0);
  }

  TEST_CASE("plaintext methods incur no cryptographic operations") {
    BenchConfig cfg;
    cfg.methods = {Method::kPlainNewton, Method::kPlainPrivLogit};
    const auto rep = bench(simulate({500, 3, 2, std::nullopt}), "simulate:500,3,2", cfg);
    REQUIRE(rep.entries.size() == 2);
    for (const auto& e : rep.entries) {
      CHECK(e.ok);
      CHECK(e.converged);
      CHECK(e.bytes == 0);
      e.counters.for_each([](std::string_view, uint64_t v) { CHECK(v == 0); });
      REQUIRE(e.r2_vs_newton);
      CHECK(*e.r2_vs_newton > 0.999);
      CHECK_FALSE(e.speedup);
    }
    CHECK(rep.key_bits == 0);
  }

  TEST_CASE("a secure method runs alongside the baselines") {
    BenchConfig cfg;
    cfg.session.s_nodes = 3;
    cfg.session.key_bits = 1024;
    cfg.session.lambda = 1.0;
    cfg.session.seed = 5;
    cfg.options.key = privlogit::testing::test_key();
    cfg.methods = {Method::kPlainPrivLogit, Method::kPrivLogitLocal};
    const auto rep = bench(simulate({300, 3, 4, std::nullopt}), "simulate:300,3,4", cfg);
    const auto* plain = rep.find(Method::kPlainPrivLogit);
    const auto* sec = rep.find(Method::kPrivLogitLocal);
    REQUIRE(plain);
    REQUIRE(sec);
    REQUIRE(sec->ok);
    CHECK(sec->iterations == plain->iterations);
    CHECK(max_abs_diff(sec->beta, plain->beta) < 1e-3);
    CHECK(sec->counters.encryptions > 0);
    CHECK(sec->bytes > 0);
  }
}

TEST_SUITE("report") {
  TEST_CASE("json matches the golden file") {
    const std::string got = emit(fixed_report(), ReportFormat::kJson, {false});
    const std::string golden = read_file(std::string(PRIVLOGIT_TEST_DIR) + "/golden/report.json");
    CHECK(got == golden);
  }

  TEST_CASE("csv matches the golden file") {
    const std::string got = emit(fixed_report(), ReportFormat::kCsv, {false});
    const std::string golden = read_file(std::string(PRIVLOGIT_TEST_DIR) + "/golden/report.csv");
    CHECK(got == golden);
  }

  TEST_CASE("timing fields are optional") {
    const auto with = to_json(fixed_report(), {true});
    const auto without = to_json(fixed_report(), {false});
    CHECK(with.contains("keygen_seconds"));
    CHECK_FALSE(without.contains("keygen_seconds"));
    CHECK(with["methods"][1]["speedup_vs_secure_newton"] == 4.0);
    CHECK_FALSE(without["methods"][1].contains("total_seconds"));
  }

  TEST_CASE("json round trip") {
    const auto r = fixed_report();
    const auto back = report_from_json(nlohmann::json::parse(emit(r, ReportFormat::kJson)));
    CHECK(back.dataset == r.dataset);
    CHECK(back.n == r.n);
    CHECK(back.key_bits == r.key_bits);
    CHECK(back.keygen_seconds == r.keygen_seconds);
    REQUIRE(back.entries.size() == 3);
    CHECK(back.entries[1].method == Method::kPrivLogitLocal);
    CHECK(back.entries[1].counters == r.entries[1].counters);
    CHECK(back.entries[1].beta == r.entries[1].beta);
    CHECK(*back.entries[1].speedup == 4.0);
    CHECK_FALSE(back.entries[2].ok);
    CHECK(back.entries[2].error == r.entries[2].error);
    CHECK(emit(back, ReportFormat::kJson) == emit(r, ReportFormat::kJson));

    CHECK_THROWS_AS(report_from_json(nlohmann::json::parse("{\"schema_version\": 99}")), ParseError);
    CHECK_THROWS_AS(report_from_json(nlohmann::json::parse("{}")), ParseError);
  }

  TEST_CASE("empty report") {
    BenchReport r;
    const auto j = nlohmann::json::parse(emit(r, ReportFormat::kJson));
    CHECK(j["methods"].empty());
    const std::string csv = emit(r, ReportFormat::kCsv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1);
    CHECK(parse_format("csv") == ReportFormat::kCsv);
    CHECK_THROWS_AS(parse_format("xml"), ConfigError);
  }
}
