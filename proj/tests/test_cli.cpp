// End-to-end checks of the command-line interface, run against the built
// binary.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << std::endl;
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& outfile) {
  const std::string cmd = std::string(MVLAG_CLI_PATH) + " " + args + " > " + outfile + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(outfile);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

}  // namespace

int main() {
  const std::string tmp = "/tmp/mvlag_cli_test_out.txt";

  {
    // full verification of a small built-in family exits 0
    const RunResult r = run("verify --example 2 --N 2 --nmax 3", tmp);
    expect(r.exit_code == 0, "verify example 2 exits 0");
    const json doc = json::parse(r.out);
    expect(doc.at("all_pass").get<bool>(), "verify example 2 all_pass");
    expect(!doc.at("checks").empty(), "verify emits checks");
    expect(doc.at("checks")[0].contains("paper_ref"), "checks carry reference anchors");
  }
  {
    // size-1 family, each example id
    for (int ex = 1; ex <= 3; ++ex) {
      const RunResult r =
          run("verify --example " + std::to_string(ex) + " --N 1 --nmax 2", tmp);
      expect(r.exit_code == 0, "verify N=1 example " + std::to_string(ex));
    }
  }
  {
    // a corrupted delta makes validation fail with a nonzero exit
    const std::string spec = "/tmp/mvlag_cli_bad_family.json";
    std::ofstream f(spec);
    f << R"({"N":2, "alpha":"1", "nu":"1", "mu_squared":["1","1"],
             "c_over_d":"1", "d_levels":["1"], "max_shift":4,
             "delta":["1","7"]})";
    f.close();
    const RunResult r = run("verify --spec " + spec, tmp);
    expect(r.exit_code != 0, "corrupted delta exits nonzero");
  }
  {
    // generate: json round-trips and P0 = I
    const RunResult r = run("generate --example 3 --N 2 --nmax 2 --format json", tmp);
    expect(r.exit_code == 0, "generate exits 0");
    const json doc = json::parse(r.out);
    const auto& p0 = doc[0].at("P")[0];
    expect(p0.at("n") == 0, "P table starts at n=0");
    expect(p0.at("coeffs")[0][0][0] == "1" && p0.at("coeffs")[0][0][1] == "0",
           "P0 is the identity");
    expect(doc[0].contains("H") && doc[0].contains("B") && doc[0].contains("C") &&
               doc[0].contains("Gamma") && doc[0].contains("Lambda") && doc[0].contains("K"),
           "tables are complete");
  }
  {
    // generate csv: header plus one coefficient per row
    const RunResult r = run("generate --example 2 --N 2 --nmax 1 --format csv", tmp);
    expect(r.exit_code == 0, "generate csv exits 0");
    expect(r.out.rfind("table,n,i,j,power,value\n", 0) == 0, "csv header");
  }
  {
    // eval at x = 2.5: P1(x) = x I - B0
    const RunResult r = run("eval --example 2 --N 2 --nmax 1 --x 2.5", tmp);
    expect(r.exit_code == 0, "eval exits 0");
    const json doc = json::parse(r.out);
    const auto& p1 = doc[0].at("P")[1].at("value");
    // B0 for this family: read from generate output
    const RunResult g = run("generate --example 2 --N 2 --nmax 1 --format json", tmp);
    const json gdoc = json::parse(g.out);
    const auto& b0 = gdoc[0].at("B")[0].at("matrix");
    auto parse_q = [](const std::string& s) {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return std::stod(s);
      return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
    };
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double expected =
            (i == j ? 2.5 : 0.0) - parse_q(b0[i][j].get<std::string>());
        expect(std::abs(p1[i][j].get<double>() - expected) < 1e-12,
               "eval P1 matches x I - B0");
      }
  }
  {
    // negative x is a usage error
    const RunResult r = run("eval --example 2 --N 2 --x -1", tmp);
    expect(r.exit_code == 2, "negative x exits 2");
  }
  {
    // unknown configuration: neither --example nor --spec
    const RunResult r = run("verify --N 2", tmp);
    expect(r.exit_code == 2, "missing family source exits 2");
  }

  if (failures == 0) {
    std::cout << "cli tests passed" << std::endl;
    return 0;
  }
  std::cout << failures << " cli test(s) failed" << std::endl;
  return 1;
}
