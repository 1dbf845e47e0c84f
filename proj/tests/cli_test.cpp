#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace dsta {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dsta");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string line_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) return line;
  }
  return {};
}

std::vector<std::string> non_comment_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

TEST(Cli, SolveRosenbrock) {
  const auto r = invoke({"solve", "rosenbrock", "--n", "5", "--mode", "dsta", "--iters", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(line_starting(r.out, "best_cost"), "best_cost 0");
  EXPECT_EQ(line_starting(r.out, "solution"), "solution 1 1 1 1 1");
}

TEST(Cli, EchoesResolvedConfig) {
  const auto r = invoke({"solve", "rosenbrock", "--n", "4", "--iters", "3", "--seed", "17"});
  ASSERT_EQ(r.code, 0);
  const auto echo = line_starting(r.out, "# solve");
  for (const char* field : {"mode=dsta", "se=32", "ma=2", "mb=1", "mc=0", "md=1", "p1=0.1459",
                            "p2=0.0557", "iters=3", "seed=17",
                            "operators=swap,shift,symmetry,substitute"}) {
    EXPECT_NE(echo.find(field), std::string::npos) << field;
  }
  EXPECT_NE(line_starting(r.out, "# trial 0 seed=").find("seed="), std::string::npos);
}

TEST(Cli, SolveTspFilePrintsTour) {
  const auto dir = test::scratch_dir("cli-tsp");
  const auto path = dir / "hex.tsp";
  std::ofstream(path) << "NAME: hex\nTYPE: TSP\nDIMENSION: 6\nEDGE_WEIGHT_TYPE: EUC_2D\n"
                         "NODE_COORD_SECTION\n1 0 0\n2 1 0\n3 2 1\n4 1 2\n5 0 2\n6 -1 1\nEOF\n";
  const auto trace = dir / "trace.csv";
  const auto r = invoke({"solve", "tsp", "--file", path.string(), "--iters", "40", "--trace",
                         trace.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream tour(line_starting(r.out, "tour").substr(4));
  std::set<int> cities;
  int c;
  while (tour >> c) cities.insert(c);
  EXPECT_EQ(cities, (std::set<int>{1, 2, 3, 4, 5, 6}));
  const std::string csv = test::slurp(trace);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 41);
}

TEST(Cli, MissingFileNamesPath) {
  const auto r = invoke({"solve", "tsp", "--file", "/no/such/gr120.tsp"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("/no/such/gr120.tsp"), std::string::npos);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(invoke({"solve", "rosenbrock", "--n", "5", "--p1", "1.5"}).code, 1);
  EXPECT_EQ(invoke({"solve", "rosenbrock", "--n", "5", "--se", "0"}).code, 1);
  EXPECT_EQ(invoke({"solve", "rosenbrock", "--n", "5", "--mode", "annealing"}).code, 1);
  EXPECT_EQ(invoke({"solve", "rosenbrock"}).code, 1);
  EXPECT_EQ(invoke({"solve", "tsp", "--random", "8", "--operators", "swap,substitute"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
}

TEST(Cli, OracleRosenbrock) {
  const auto r = invoke({"oracle", "rosenbrock", "--n", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(line_starting(r.out, "optimum"), "optimum 0");
}

TEST(Cli, OracleQubo) {
  const auto r = invoke({"oracle", "qubo", "--q", "0,4;4,0", "--c", "0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(line_starting(r.out, "optimum"), "optimum -4");
}

TEST(Cli, OracleTooLarge) {
  const auto r = invoke({"oracle", "tsp", "--random", "11"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, OracleTspAgreesWithSolve) {
  const auto oracle = invoke({"oracle", "tsp", "--random", "7", "--instance-seed", "4"});
  const auto solve = invoke({"solve", "tsp", "--random", "7", "--instance-seed", "4", "--iters",
                             "300"});
  ASSERT_EQ(oracle.code, 0);
  ASSERT_EQ(solve.code, 0);
  EXPECT_EQ(line_starting(oracle.out, "optimum").substr(8),
            line_starting(solve.out, "best_cost").substr(10));
}

TEST(Cli, EmptySuiteIsHeaderOnly) {
  const auto r = invoke({"bench", "tsp"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = non_comment_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0].rfind("instance", 0), 0u);
}

TEST(Cli, BenchRosenbrockTable) {
  const auto r = invoke({"bench", "rosenbrock", "--sizes", "5,10", "--budgets", "10,20",
                         "--trials", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = non_comment_lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  for (const char* col : {"best", "mean", "std", "error"}) {
    EXPECT_NE(lines[0].find(col), std::string::npos);
  }
}

TEST(Cli, BenchMismatchedBudgets) {
  EXPECT_EQ(invoke({"bench", "rosenbrock", "--sizes", "5,10", "--budgets", "10"}).code, 1);
}

}  // namespace
}  // namespace dsta
