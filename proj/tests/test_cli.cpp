#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cmd(const std::string& cmd) {
  std::array<char, 4096> buf{};
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

CliResult run_cli(const std::string& args) {
  return run_cmd(std::string(MEROC_CLI_PATH) + " " + args + " 2>/dev/null");
}

// Run with the fixtures directory as CWD so manifests can use relative
// input paths.
CliResult run_cli_in_fixtures(const std::string& args) {
  return run_cmd("cd " + std::string(MEROC_FIXTURES) + " && " +
                 std::string(MEROC_CLI_PATH) + " " + args + " 2>/dev/null");
}

std::string fixture(const std::string& name) {
  return std::string(MEROC_FIXTURES) + "/" + name;
}

}  // namespace

TEST_CASE("cli: eisenstein exact output matches the pinned schema") {
  CliResult r = run_cli("eisenstein --k 2 --order 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"constant\":\"-1/12\",\"q1\":\"2\",\"q2\":\"6\"}\n");
}

TEST_CASE("cli: numeric mode needs the explicit flag") {
  CliResult r = run_cli("eisenstein --k 2 --order 3 --tau 0,1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"code\":\"validation\"") != std::string::npos);
}

TEST_CASE("cli: domain errors surface as structured objects") {
  CliResult r = run_cli("eisenstein --k 1 --order 3");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"code\":\"domain\"") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with code 2") {
  CliResult r = run_cli("eisenstein --nonsense 4");
  CHECK(r.exit_code == 2);
  CliResult r2 = run_cli("no-such-subcommand");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("cli: cech cohomology of the circle fixture") {
  CliResult r = run_cli("cech-cohomology --nerve " + fixture("circle.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"H0\":1,\"H1\":1}\n");
}

TEST_CASE("cli: ce cohomology of the sl2 fixture") {
  CliResult r =
      run_cli("ce-cohomology --algebra " + fixture("sl2.json") + " --pmax 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"H0\":1") != std::string::npos);
  CHECK(r.out.find("\"H1\":0") != std::string::npos);
  CHECK(r.out.find("\"H3\":1") != std::string::npos);
  CHECK(r.out.find("\"nilpotent\":true") != std::string::npos);
}

TEST_CASE("cli: d2check reports nilpotency") {
  CliResult r = run_cli("d2check --model poly --degree 3 --lmax 1 --kmax 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"nilpotent\":true") != std::string::npos);
  CHECK(r.out.find("\"checked_cells\":") != std::string::npos);
}

TEST_CASE("cli: axioms-check on the bundled kernel cochain") {
  CliResult r = run_cli("axioms-check --input " + fixture("kernel_cochain.json") +
                        " --weight -1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"kg_property\":{") != std::string::npos);
  CHECK(r.out.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("cli: generic cohomology endpoint") {
  CliResult r = run_cli("cohomology --complex " + fixture("two_term.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"nilpotent\":true") != std::string::npos);
  CHECK(r.out.find("\"H0\":0") != std::string::npos);

  // A non-complex is rejected with a structured error naming the offender.
  CliResult bad = run_cli("cohomology --complex " + fixture("bad_complex.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("\"code\":\"validation\"") != std::string::npos);
}

TEST_CASE("cli: malformed numeric flags yield validation errors") {
  CliResult r = run_cli("eisenstein --k 2 --order 3 --numeric --tau banana");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"code\":\"validation\"") != std::string::npos);
}

TEST_CASE("cli: amatrix csv emits raw csv") {
  CliResult r = run_cli("amatrix --size 2 --qorder 3 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("\"eps1^", 0) == 0);  // starts with a quoted cell
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("cli: manifests replay to byte-identical output") {
  const char* manifests[] = {
      "manifests/eisenstein.json", "manifests/pk.json",
      "manifests/cmatrix.json",    "manifests/necklace.json",
      "manifests/cech.json",       "manifests/d2check.json",
      "manifests/verify.json",     "manifests/amatrix.json",
  };
  for (const char* m : manifests) {
    std::string sub;
    {
      // Subcommand name is recorded inside the manifest.
      std::string path = fixture(m);
      FILE* f = fopen(path.c_str(), "r");
      REQUIRE(f != nullptr);
      std::string content;
      std::array<char, 4096> buf{};
      size_t n;
      while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
        content.append(buf.data(), n);
      fclose(f);
      auto pos = content.find("\"subcommand\"");
      REQUIRE(pos != std::string::npos);
      auto start = content.find('"', content.find(':', pos)) + 1;
      sub = content.substr(start, content.find('"', start) - start);
    }
    std::string args = sub + " --manifest manifests/" +
                       std::string(m).substr(std::string("manifests/").size());
    CliResult a = run_cli_in_fixtures(args);
    CliResult b = run_cli_in_fixtures(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}
