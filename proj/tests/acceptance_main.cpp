// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "homlie/acceptance.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

homlie::CriterionResult criterion9() {
  const std::string cmd = std::string("'") + HOMLIE_CLI_PATH + "' verify --seed 0";
  const RunResult a = run(cmd), b = run(cmd);
  const bool identical = !a.out.empty() && a.out == b.out;
  const bool exit0 = a.status == 0 && b.status == 0;
  return {9, "CLI determinism", identical && exit0,
          "exit codes " + std::to_string(a.status) + "," + std::to_string(b.status) + "; output " +
              (identical ? "byte-identical" : "differs") + " (" + std::to_string(a.out.size()) + " bytes)"};
}

}  // namespace

int main() {
  auto results = homlie::run_acceptance(0);
  results.push_back(criterion9());
  int failed = 0;
  for (const auto& c : results) {
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << c.detail << "\n";
    failed += c.pass ? 0 : 1;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
