// End-to-end checks of the command-line front door, driving the built
// binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef MYERSON_CLI_PATH
#error "MYERSON_CLI_PATH must point at the built binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("myerson_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path errfile =
      scratch_dir() / ("stderr_" + std::to_string(counter++) + ".txt");
  const std::string command = std::string(MYERSON_CLI_PATH) + " " + args +
                              " 2>" + errfile.string();
  RunResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> chunk;
  std::size_t got = 0;
  while ((got = std::fread(chunk.data(), 1, chunk.size(), pipe)) > 0) {
    result.out.append(chunk.data(), got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = slurp(errfile);
  return result;
}

std::vector<double> parse_values(const std::string& text) {
  std::istringstream in(text);
  std::vector<double> values;
  int node;
  double value;
  while (in >> node >> value) values.push_back(value);
  return values;
}

}  // namespace

TEST_CASE("gen-graph writes the canonical cycle file") {
  const fs::path out = scratch_dir() / "c4.graph";
  const RunResult r =
      run_cli("gen-graph --model cycle --n 4 -o " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(slurp(out) == "n 4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST_CASE("exact reproduces the path oracle through files") {
  const fs::path graph = scratch_dir() / "p3.graph";
  const fs::path game = scratch_dir() / "sq.game";
  std::ofstream(graph) << "n 3\n0 1\n1 2\n";
  std::ofstream(game) << "type=size n=3 exponent=2\n";
  for (const char* method : {"connected", "subsets"}) {
    const RunResult r = run_cli("exact --graph " + graph.string() +
                                " --game " + game.string() + " --method " +
                                method);
    CHECK(r.exit_code == 0);
    const std::vector<double> values = parse_values(r.out);
    REQUIRE(values.size() == 3);
    CHECK(values[0] == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
    CHECK(values[1] == doctest::Approx(11.0 / 3.0).epsilon(1e-9));
    CHECK(values[2] == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
  }
}

TEST_CASE("bound prints the closed-form sample counts") {
  const RunResult standard = run_cli(
      "bound --alg permutations --epsilon 0.5 --delta 0.1 --range 10 --n 15 "
      "--formula standard");
  CHECK(standard.exit_code == 0);
  CHECK(standard.out == "600\n");
  const RunResult paper = run_cli(
      "bound --alg permutations --epsilon 0.5 --delta 0.1 --range 10 --n 15 "
      "--formula paper");
  CHECK(paper.exit_code == 0);
  CHECK(paper.out == "9\n");
}

TEST_CASE("seeded commands are byte-reproducible") {
  const fs::path graph = scratch_dir() / "ba.graph";
  const fs::path game = scratch_dir() / "uni.game";
  CHECK(run_cli("gen-graph --model barabasi_albert --n 12 --m0 2 --m 2 "
                "--seed 9 -o " +
                graph.string())
            .exit_code == 0);
  CHECK(run_cli("gen-game --spec \"type=uniform n=12 seed=4\" -o " +
                game.string())
            .exit_code == 0);
  const std::string approx_cmd = "approx --alg hybrid --graph " +
                                 graph.string() + " --game " + game.string() +
                                 " --samples 2000 --exact-levels 1 --seed 31";
  const RunResult first = run_cli(approx_cmd);
  const RunResult second = run_cli(approx_cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  REQUIRE(parse_values(first.out).size() == 12);

  // Graph generation is reproducible too.
  const fs::path graph2 = scratch_dir() / "ba2.graph";
  CHECK(run_cli("gen-graph --model barabasi_albert --n 12 --m0 2 --m 2 "
                "--seed 9 -o " +
                graph2.string())
            .exit_code == 0);
  CHECK(slurp(graph) == slurp(graph2));
}

TEST_CASE("omitted seeds fall back to entropy and echo the chosen seed") {
  const fs::path graph = scratch_dir() / "er.graph";
  const RunResult r = run_cli("gen-graph --model erdos_renyi --n 8 "
                              "--edge-prob 0.5 -o " +
                              graph.string());
  CHECK(r.exit_code == 0);
  CHECK(r.err.substr(0, 5) == "seed ");
}

TEST_CASE("approx rejects bad algorithm names") {
  const fs::path graph = scratch_dir() / "c5.graph";
  const fs::path game = scratch_dir() / "c5.game";
  run_cli("gen-graph --model cycle --n 5 -o " + graph.string());
  run_cli("gen-game --spec \"type=uniform n=5 seed=1\" -o " + game.string());
  const RunResult r = run_cli("approx --alg quantum --graph " +
                              graph.string() + " --game " + game.string() +
                              " --samples 10 --seed 1");
  CHECK(r.exit_code != 0);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("malformed inputs produce single-line diagnostics") {
  const fs::path bad = scratch_dir() / "bad.graph";
  std::ofstream(bad) << "n 3\n0 9\n";
  const fs::path game = scratch_dir() / "any.game";
  std::ofstream(game) << "type=uniform n=3 seed=1\n";
  const RunResult r = run_cli("exact --graph " + bad.string() + " --game " +
                              game.string());
  CHECK(r.exit_code != 0);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(r.err.find("line 2") != std::string::npos);
  // Exactly one diagnostic line.
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  const RunResult unknown = run_cli("transmogrify --fast");
  CHECK(unknown.exit_code != 0);
  CHECK_FALSE(unknown.err.empty());
  CHECK(std::count(unknown.err.begin(), unknown.err.end(), '\n') == 1);

  const RunResult badflag = run_cli("bound --alg permutations --epsilon 0.5 "
                                    "--delta 0.1 --range 10 --n 15 --wat 3");
  CHECK(badflag.exit_code != 0);
  CHECK_FALSE(badflag.err.empty());
  CHECK(std::count(badflag.err.begin(), badflag.err.end(), '\n') == 1);
}

TEST_CASE("gen-game writes canonical spec strings") {
  const fs::path game = scratch_dir() / "super.game";
  const RunResult r = run_cli(
      "gen-game --spec \"type=superadditive n=6 seed=2 maxGain=3\" -o " +
      game.string());
  CHECK(r.exit_code == 0);
  const std::string text = slurp(game);
  CHECK(text.substr(0, 5) == "type=");
  CHECK(text.find("n=6") != std::string::npos);

  // The emitted file parses back and drives both engines identically.
  const fs::path graph = scratch_dir() / "c6.graph";
  run_cli("gen-graph --model cycle --n 6 -o " + graph.string());
  const RunResult ex1 = run_cli("exact --graph " + graph.string() +
                                " --game " + game.string() +
                                " --method subsets");
  const RunResult ex2 = run_cli("exact --graph " + graph.string() +
                                " --game " + game.string() +
                                " --method connected");
  CHECK(ex1.exit_code == 0);
  const std::vector<double> a = parse_values(ex1.out);
  const std::vector<double> b = parse_values(ex2.out);
  REQUIRE(a.size() == 6);
  REQUIRE(b.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
  }
}

TEST_CASE("bench emits parseable deterministic csv") {
  const fs::path csv1 = scratch_dir() / "bench1.csv";
  const fs::path csv2 = scratch_dir() / "bench2.csv";
  const std::string cmd =
      "bench --grid custom --model cycle --n 7 --games uniform,size "
      "--algs permutations,hybrid --exact-levels 1 --budget-kind samples "
      "--budgets 64,256 --trials 2 -o ";
  CHECK(run_cli(cmd + csv1.string()).exit_code == 0);
  CHECK(run_cli(cmd + csv2.string()).exit_code == 0);

  const std::string text1 = slurp(csv1);
  std::istringstream lines(text1);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "alg,graph_model,game_type,n,seed,budget_kind,budget,samples,"
        "elapsed_ns,error_l1");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2 * 2 * 2 * 2);

  // Identical reruns modulo the elapsed_ns column (field 9 of 10).
  auto strip_elapsed = [](const std::string& text) {
    std::istringstream in(text);
    std::string out, row;
    while (std::getline(in, row)) {
      int commas = 0;
      std::string kept;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] == ',') ++commas;
        if (commas == 8) continue;  // drop ",<elapsed_ns>"
        kept += row[i];
      }
      out += kept + "\n";
    }
    return out;
  };
  CHECK(strip_elapsed(text1) == strip_elapsed(slurp(csv2)));
}
