#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef PVKIT_BIN
#error "PVKIT_BIN must point at the command-line binary"
#endif
#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must point at the fixture corpus"
#endif
#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must point at the golden outputs"
#endif

namespace {

struct Case {
  std::string name;
  int expected_exit = 0;
  std::vector<std::string> args;
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Case> load_cases() {
  std::ifstream in(std::string(GOLDEN_DIR) + "/cases.txt");
  EXPECT_TRUE(in.good()) << "cannot open cases.txt";
  std::vector<Case> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> parts = split(line, '|');
    EXPECT_GE(parts.size(), 3u) << "bad case line: " << line;
    Case c;
    c.name = parts[0];
    c.expected_exit = std::stoi(parts[1]);
    for (std::size_t i = 2; i < parts.size(); ++i) {
      std::string a = parts[i];
      const std::string tok = "@F/";
      if (a.rfind(tok, 0) == 0)
        a = std::string(FIXTURE_DIR) + "/" + a.substr(tok.size());
      c.args.push_back(a);
    }
    cases.push_back(std::move(c));
  }
  return cases;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run(const std::vector<std::string>& args) {
  std::string cmd = std::string(PVKIT_BIN);
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST(Cli, GoldenCorpusByteExact) {
  std::vector<Case> cases = load_cases();
  ASSERT_FALSE(cases.empty());
  for (const Case& c : cases) {
    RunResult r = run(c.args);
    EXPECT_EQ(r.exit_code, c.expected_exit) << c.name;
    std::string want = read_file(std::string(GOLDEN_DIR) + "/" + c.name +
                                 ".txt");
    EXPECT_EQ(r.out, want) << c.name;
  }
}

TEST(Cli, DeterministicAcrossRuns) {
  std::vector<std::string> args = {"h1-enumerate", "--input",
                                   std::string(FIXTURE_DIR) +
                                       "/act_mu3_gm.json"};
  RunResult first = run(args);
  for (int i = 0; i < 3; ++i) {
    RunResult again = run(args);
    EXPECT_EQ(again.out, first.out);
    EXPECT_EQ(again.exit_code, first.exit_code);
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"rank1-classify"}).exit_code, 2);
  EXPECT_EQ(run({"no-such-command"}).exit_code, 2);
  EXPECT_EQ(run({"hopf-check", "--input", "/nonexistent.json"}).exit_code, 2);
}

TEST(Cli, JsonOnlyFlagSuppressesProse) {
  RunResult r = run({"rank1-classify", "--json", "1/(2*x)"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("mu(2)", 0), std::string::npos);
  EXPECT_EQ(r.out[0], '{');
}

TEST(Cli, ZetaLevelFlagIsAFallback) {
  // The flag sets the parse level for bare expressions; files carrying
  // their own zeta_level key are unaffected.
  RunResult r = run({"rank1-classify", "--zeta-level", "4", "zeta/x"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("G_m"), std::string::npos);
}
