#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "cli/commands.hpp"
#include "cli/matrix_io.hpp"
#include "cli/simulate.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace fs = std::filesystem;
using namespace latkern;
using latkern::cli::Json;
using latkern::testing::Gen;

namespace {

fs::path scratch_dir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  fs::path dir = fs::temp_directory_path() / ("latkern_cli_" + std::to_string(::getpid())) /
                 (std::string(info->test_suite_name()) + "_" + info->name());
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

fs::path write(const fs::path& dir, const std::string& name, const TransferMatrix& m) {
  const fs::path p = dir / name;
  cli::write_matrix_file(p, m);
  return p;
}

fs::path write_text(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

struct Process {
  int code = -1;
  std::string out;
};

Process exec(const std::string& args) {
  Process r;
  const std::string cmd = std::string(LATKERN_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TransferMatrix scalar(const RatFun& r) {
  TransferMatrix m(1, 1);
  m(0, 0) = r;
  return m;
}

TransferMatrix diag(std::initializer_list<RatFun> d) {
  TransferMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (const auto& x : d) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST(MatrixFile, RoundTripRandom) {
  Gen gen(101);
  const fs::path dir = scratch_dir();
  for (int trial = 0; trial < 100; ++trial) {
    const TransferMatrix m = gen.matrix(static_cast<std::size_t>(gen.integer(1, 3)),
                                        static_cast<std::size_t>(gen.integer(1, 3)), 4);
    EXPECT_EQ(cli::matrix_from_json(Json::parse(cli::matrix_to_json(m).dump())), m);
    cli::write_matrix_file(dir / "m.json", m);
    EXPECT_EQ(cli::read_matrix_file(dir / "m.json"), m);
  }
}

TEST(MatrixFile, NonCanonicalInputIsCanonicalized) {
  const Json j = Json::parse(R"({"rows":1,"cols":1,"entries":[[{"num":["0","2","2"],"den":["0","4"]}]]})");
  // (2z + 2z^2) / 4z = (1 + z) / 2
  EXPECT_EQ(cli::matrix_from_json(j)(0, 0), RatFun(Poly({Rational(1, 2), Rational(1, 2)})));
}

TEST(MatrixFile, MalformedInputsAreRejected) {
  const char* bad[] = {
      R"([1,2])",
      R"({"rows":1,"cols":1})",
      R"({"rows":0,"cols":1,"entries":[]})",
      R"({"rows":1,"cols":2,"entries":[[{"num":["1"]}]]})",
      R"({"rows":1,"cols":1,"entries":[[{"num":[1]}]]})",
      R"({"rows":1,"cols":1,"entries":[[{"num":["1"],"den":["0"]}]]})",
      R"({"rows":1,"cols":1,"entries":[[{"num":["1"],"den":[]}]]})",
      R"({"rows":1,"cols":1,"entries":[[{"num":["1/0"]}]]})",
      R"({"rows":1,"cols":1,"entries":[[{"num":["x"]}]]})",
      R"({"rows":1,"cols":1,"entries":[[{"den":["1"]}]]})",
  };
  for (const char* text : bad) EXPECT_THROW(cli::matrix_from_json(Json::parse(text)), PreconditionError) << text;
}

TEST(MatrixFile, ConstantFileRejectsRationalEntries) {
  const fs::path dir = scratch_dir();
  const fs::path p = write(dir, "a.json", scalar(RatFun::z_power(-1)));
  EXPECT_THROW(cli::read_constant_matrix_file(p), PreconditionError);
  const fs::path q = write(dir, "b.json", scalar(RatFun(Rational(3, 4))));
  EXPECT_EQ(cli::read_constant_matrix_file(q)(0, 0), Rational(3, 4));
}

TEST(Simulate, AgreesWithApplyAndExpand) {
  Gen gen(202);
  const long horizon = 25;
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = static_cast<std::size_t>(gen.integer(1, 3));
    const auto m = static_cast<std::size_t>(gen.integer(1, 3));
    const TransferMatrix f = gen.matrix(p, m, 3);
    const RatVector u = gen.vector(m, 3);
    const auto ys = cli::simulate_response(f, u, horizon);
    const RatVector y = latkern::apply(f, u);
    ASSERT_EQ(ys.size(), p);
    for (std::size_t i = 0; i < p; ++i) {
      EXPECT_EQ(ys[i].horizon, horizon);
      const TruncatedSeries ref = expand(y[i], horizon);
      const long lo = std::min(ys[i].start_index, ref.start_index);
      for (long t = lo; t <= horizon; ++t) EXPECT_EQ(ys[i].at(t), ref.at(t)) << "trial " << trial << " t " << t;
    }
  }
}

TEST(Simulate, CommandMatchesOracleWindow) {
  const fs::path dir = scratch_dir();
  // F = z^-2, u = 1 / (1 - z^-1)
  write(dir, "f.json", scalar(RatFun::z_power(-2)));
  write(dir, "u.json", scalar(RatFun(Poly({Rational(0), Rational(1)}), Poly({Rational(-1), Rational(1)}))));
  const auto r = cli::run({"--json", "simulate", (dir / "f.json").string(), (dir / "u.json").string(), "--horizon", "8"});
  ASSERT_EQ(r.exit_code, 0);
  const Json& out = r.report["result"]["output"][0];
  EXPECT_EQ(out["start_index"], 2);
  EXPECT_EQ(out["coefficients"].size(), 7U);
  for (const auto& c : out["coefficients"]) EXPECT_EQ(c, "1");
}

TEST(Cli, DeterministicReports) {
  Gen gen(303);
  const fs::path dir = scratch_dir();
  std::vector<long> sigma;
  const TransferMatrix f = gen.injective_strictly_causal(2, 2, 3, 2, &sigma);
  const TransferMatrix l = gen.bicausal(2, 2);
  write(dir, "f.json", f);
  write(dir, "l.json", l);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "latency", (dir / "f.json").string()},
        std::vector<std::string>{"--json", "realize", (dir / "f.json").string(), (dir / "l.json").string(), "--out-dir",
                                 (dir / "out").string()},
        std::vector<std::string>{"--json", "worstcase", (dir / "f.json").string()}}) {
    const auto a = cli::run(args);
    const auto b = cli::run(args);
    EXPECT_EQ(a.exit_code, 0) << a.report.dump();
    EXPECT_EQ(a.rendered(), b.rendered());
  }
  const std::string cmd = "--json latency " + (dir / "f.json").string();
  const Process p1 = exec(cmd);
  const Process p2 = exec(cmd);
  EXPECT_EQ(p1.code, 0);
  EXPECT_EQ(p1.out, p2.out);
}

TEST(Cli, TextAndJsonCarryTheSameIndices) {
  const fs::path dir = scratch_dir();
  write(dir, "f.json", diag({RatFun::z_power(-1), RatFun::z_power(-3)}));
  const auto j = cli::run({"--json", "latency", (dir / "f.json").string()});
  const auto t = cli::run({"latency", (dir / "f.json").string()});
  EXPECT_EQ(j.report, t.report);
  EXPECT_NE(t.rendered().find("nu: [2, 0]"), std::string::npos);
}

TEST(CliExamples, LatencyOfDiagonal) {
  const fs::path dir = scratch_dir();
  write(dir, "f.json", diag({RatFun::z_power(-1), RatFun::z_power(-3)}));
  const Process p = exec("--json latency " + (dir / "f.json").string());
  ASSERT_EQ(p.code, 0);
  const Json j = Json::parse(p.out);
  EXPECT_EQ(j["result"]["nu"], Json::parse("[2, 0]"));
}

TEST(CliExamples, FactorRefusedWithWitness) {
  const fs::path dir = scratch_dir();
  write(dir, "f.json", scalar(RatFun::z_power(-2)));
  write(dir, "h.json", scalar(RatFun::z_power(-1)));
  const Process p = exec("--json factor " + (dir / "f.json").string() + " " + (dir / "h.json").string());
  ASSERT_EQ(p.code, 1);
  const Json j = Json::parse(p.out);
  EXPECT_EQ(j["result"]["factorizable"], false);
  const TransferMatrix u = cli::matrix_from_json(j["result"]["witness"]["u"]);
  // F u proper, H u improper, checked on the expansion
  const RatFun fu = RatFun::z_power(-2) * u(0, 0);
  const RatFun hu = RatFun::z_power(-1) * u(0, 0);
  EXPECT_GE(*latkern::testing::first_nonzero(fu, -10, 10), 0);
  EXPECT_LT(*latkern::testing::first_nonzero(hu, -10, 10), 0);
  EXPECT_EQ(exec("factor " + (dir / "f.json").string() + " " + (dir / "h.json").string()).code, 1);
}

TEST(CliExamples, RealizeWritesFiles) {
  const fs::path dir = scratch_dir();
  const RatFun f = RatFun::z_power(-2);
  const RatFun l = (RatFun(1) + RatFun::z_power(-1)).inverse();
  write(dir, "f.json", scalar(f));
  write(dir, "l.json", scalar(l));
  const fs::path out = dir / "out";
  const Process p = exec("--json realize " + (dir / "f.json").string() + " " + (dir / "l.json").string() +
                         " --out-dir " + out.string());
  ASSERT_EQ(p.code, 0) << p.out;
  const Json j = Json::parse(p.out);
  EXPECT_EQ(j["result"]["sigma"], Json::parse("[1]"));
  EXPECT_EQ(j["result"]["nu"], Json::parse("[1]"));
  EXPECT_EQ(j["result"]["simulation"]["agrees"], true);
  const TransferMatrix v = cli::read_matrix_file(out / "v.json");
  const TransferMatrix g = cli::read_matrix_file(out / "g.json");
  // l = (1 + g f)^-1 v
  EXPECT_EQ((RatFun(1) + g(0, 0) * f).inverse() * v(0, 0), l);
}

TEST(CliErrors, ExitTwoWithDiagnostic) {
  const fs::path dir = scratch_dir();
  write_text(dir, "broken.json", "{ not json");
  write_text(dir, "badcoef.json", R"({"rows":1,"cols":1,"entries":[[{"num":[1]}]]})");
  write(dir, "f2.json", diag({RatFun::z_power(-1), RatFun::z_power(-1)}));
  write(dir, "h1.json", scalar(RatFun::z_power(-1)));
  TransferMatrix sing(2, 2);
  sing(0, 0) = sing(0, 1) = sing(1, 0) = sing(1, 1) = RatFun::z_power(-1);
  write(dir, "sing.json", sing);
  write(dir, "noncausal.json", scalar(RatFun::z_power(1)));
  write(dir, "one.json", scalar(RatFun(1)));

  struct Case {
    std::vector<std::string> args;
    std::string needle;
  };
  const std::vector<Case> cases = {
      {{"latency", (dir / "broken.json").string()}, "parse"},
      {{"latency", (dir / "badcoef.json").string()}, "strings"},
      {{"latency", (dir / "missing.json").string()}, "cannot open"},
      {{"factor", (dir / "f2.json").string(), (dir / "h1.json").string()}, ""},
      {{"latency", (dir / "sing.json").string()}, "not finitely generated"},
      {{"realize", (dir / "noncausal.json").string(), (dir / "one.json").string()}, "strictly causal"},
      {{"expand", (dir / "f2.json").string()}, "usage"},
      {{"frobnicate"}, "usage"},
      {{"equiv", (dir / "f2.json").string(), (dir / "f2.json").string(), "--mode", "sideways"}, "usage"},
  };
  for (const auto& c : cases) {
    const auto r = cli::run(c.args);
    EXPECT_EQ(r.exit_code, 2) << r.report.dump();
    ASSERT_TRUE(r.report.contains("error"));
    EXPECT_NE(r.report["error"].get<std::string>().find(c.needle), std::string::npos) << r.report.dump();
  }
  EXPECT_EQ(exec("latency " + (dir / "broken.json").string()).code, 2);
}

TEST(CliErrors, BadHorizonEnvironment) {
  const fs::path dir = scratch_dir();
  write(dir, "f.json", scalar(RatFun::z_power(-2)));
  write(dir, "l.json", scalar(RatFun(1)));
  const std::string args = "realize " + (dir / "f.json").string() + " " + (dir / "l.json").string() + " --out-dir " +
                           (dir / "o").string();
  const std::string exe = std::string(LATKERN_EXE);
  EXPECT_EQ(std::system(("LATKERN_HORIZON=abc " + exe + " " + args + " >/dev/null 2>&1").c_str()) >> 8, 2);
  EXPECT_EQ(std::system(("LATKERN_HORIZON=5 " + exe + " " + args + " >/dev/null 2>&1").c_str()) >> 8, 0);
}

TEST(Batch, OrderAndResultsIndependentOfJobs) {
  Gen gen(404);
  const fs::path dir = scratch_dir();
  Json tasks = Json::array();
  for (int k = 0; k < 8; ++k) {
    const std::string f = "f" + std::to_string(k) + ".json";
    const std::string h = "h" + std::to_string(k) + ".json";
    write(dir, f, gen.injective_strictly_causal(2, 2, 3, 1));
    write(dir, h, gen.matrix(1, 2, 2));
    tasks.push_back(Json::array({"latency", (dir / f).string()}));
    tasks.push_back(Json::array({"factor", (dir / f).string(), (dir / h).string()}));
  }
  tasks.push_back(Json::array({"latency", (dir / "missing.json").string()}));
  write_text(dir, "batch.json", tasks.dump());
  const auto serial = cli::run({"--json", "batch", (dir / "batch.json").string(), "--jobs", "1"});
  const auto parallel = cli::run({"--json", "batch", (dir / "batch.json").string(), "--jobs", "4"});
  EXPECT_EQ(serial.exit_code, 2);
  EXPECT_EQ(parallel.exit_code, 2);
  const Json& a = serial.report["result"]["reports"];
  const Json& b = parallel.report["result"]["reports"];
  ASSERT_EQ(a.size(), tasks.size());
  EXPECT_EQ(a, b);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::string echo;
    for (const auto& s : tasks[i]) echo += (echo.empty() ? "" : " ") + s.get<std::string>();
    EXPECT_EQ(a[i]["command"], echo);
    EXPECT_EQ(a[i], cli::run(tasks[i].get<std::vector<std::string>>()).report);
  }
}

TEST(Cli, ExpandPrintsDescendingPowers) {
  const fs::path dir = scratch_dir();
  // z / (z - 1) = 1 + z^-1 + z^-2 + ...
  write(dir, "f.json", scalar(RatFun(Poly({Rational(0), Rational(1)}), Poly({Rational(-1), Rational(1)}))));
  const auto r = cli::run({"expand", (dir / "f.json").string(), "--terms", "3"});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["result"]["expansions"][0][0], "1 + z^-1 + z^-2 + O(z^-3)");
}

TEST(Cli, StatespaceReportsTransferMatrix) {
  const fs::path dir = scratch_dir();
  TransferMatrix a(2, 2);
  a(0, 1) = RatFun(1);
  TransferMatrix b(2, 1);
  b(1, 0) = RatFun(1);
  write(dir, "a.json", a);
  write(dir, "b.json", b);
  const auto r = cli::run({"statespace", (dir / "a.json").string(), (dir / "b.json").string()});
  ASSERT_EQ(r.exit_code, 0) << r.report.dump();
  const TransferMatrix t = cli::matrix_from_json(r.report["result"]["transfer_matrix"]);
  EXPECT_EQ(t(0, 0), RatFun::z_power(-2));
  EXPECT_EQ(t(1, 0), RatFun::z_power(-1));
  EXPECT_EQ(r.report["result"]["nonlatency"]["nu"], Json::parse("[0]"));
}

TEST(Cli, HelpExitsZero) {
  const auto r = cli::run({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.rendered().find("latency"), std::string::npos);
}
