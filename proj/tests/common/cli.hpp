#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace cwl::testing {

struct CliResult {
  int code = -1;
  std::string out;
};

// Single-quotes an argument for /bin/sh.
inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the cwl binary with `args` (already quoted), capturing stdout.
inline CliResult run_cli(const std::string& args) {
  CliResult r;
  const std::string cmd = shell_quote(CWL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace cwl::testing
