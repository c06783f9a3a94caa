// End-to-end checks of the catgrp binary: exit codes, witness printing,
// JSON stability, construct/roundtrip flows, and the order-cap override.
// Usage: cli_tests <catgrp-path> <fixtures-dir> <temp-dir>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: cli_tests <catgrp> <fixtures-dir> <temp-dir>\n";
    return 2;
  }
  const std::string cli = std::string("\"") + argv[1] + "\"";
  const std::string fixtures = argv[2];
  const std::filesystem::path temp = argv[3];
  std::filesystem::create_directories(temp);

  const std::string valid = fixtures + "/a3_s3_xmod.spec";
  const std::string failing = fixtures + "/a3_s3_trivial_action.spec";
  const std::string broken = fixtures + "/bad_rowlen.spec";

  // Exit-code classes.
  expect(run(cli + " check " + valid).exit_code == 0, "valid file exits 0");
  {
    const RunResult r = run(cli + " check " + failing);
    expect(r.exit_code == 1, "failing file exits 1");
    expect(r.output.find("FAIL") != std::string::npos, "failure is printed");
    expect(r.output.find("equivariance") != std::string::npos,
           "equivariance witness is printed");
    expect(r.output.find("witness=(1,1)") != std::string::npos,
           "witness indices are printed");
  }
  expect(run(cli + " check " + broken).exit_code == 2, "parse error exits 2");
  expect(run(cli + " check " + std::string(temp / "missing.spec")).exit_code ==
             2,
         "unreadable file exits 2");
  expect(run(cli).exit_code == 2, "no arguments exits 2");
  expect(run(cli + " frobnicate").exit_code == 2, "unknown command exits 2");
  expect(run(cli + " check").exit_code == 2, "check without a file exits 2");

  // JSON stability and shape.
  {
    const RunResult a = run(cli + " check --json " + valid);
    const RunResult b = run(cli + " check --json " + valid);
    expect(a.exit_code == 0, "json run exits 0");
    expect(!a.output.empty() && a.output == b.output,
           "json output is byte-identical across runs");
    expect(a.output.find("{\"version\":1,\"results\":[") == 0,
           "json shape starts with the version header");
    expect(a.output.find("\"witness\":null") != std::string::npos,
           "passing checks carry a null witness");
    const RunResult c = run(cli + " check --json " + failing);
    expect(c.exit_code == 1, "json run exits 1 on failure");
    expect(c.output.find("\"passed\":false") != std::string::npos,
           "json marks failures");
    expect(c.output.find("\"witness\":[1,1]") != std::string::npos,
           "json carries the witness");
  }

  // Roundtrip on a trivial crossed module, from a generated file.
  const std::filesystem::path trivial = temp / "trivial.spec";
  {
    std::ofstream out(trivial, std::ios::binary);
    out << "group Z1 order 1\n0\nhom d : Z1 -> Z1\n0\n"
           "action a : Z1 on Z1\n0\nxmod t = (Z1, Z1, d, a)\n";
  }
  {
    const RunResult r = run(cli + " roundtrip " + trivial.string() + " t");
    expect(r.exit_code == 0, "trivial roundtrip exits 0");
    expect(r.output.find("ok") != std::string::npos,
           "roundtrip reports the verified isomorphism");
  }
  expect(run(cli + " roundtrip " + valid + " m").exit_code == 0,
         "A3-in-S3 roundtrip exits 0");
  {
    const RunResult r = run(cli + " roundtrip --json " + valid + " m");
    expect(r.exit_code == 0, "json roundtrip exits 0");
    expect(r.output.find("\"check\":\"roundtrip_xmod\"") != std::string::npos,
           "json roundtrip reports the check name");
    const RunResult again = run(cli + " roundtrip --json " + valid + " m");
    expect(r.output == again.output, "json roundtrip output is stable");
  }
  expect(run(cli + " roundtrip " + valid + " nosuch").exit_code == 2,
         "unknown roundtrip target exits 2");
  expect(run(cli + " roundtrip " + failing + " m").exit_code == 1,
         "roundtrip on a failing crossed module exits 1");

  // construct: xmod -> internal category -> xmod again.
  const std::filesystem::path cat_file = temp / "m_cat.spec";
  {
    const RunResult r = run(cli + " construct xmod-to-internal " + valid +
                            " m -o " + cat_file.string());
    expect(r.exit_code == 0, "construct xmod-to-internal exits 0");
    expect(std::filesystem::exists(cat_file), "construct writes the file");
  }
  expect(run(cli + " check " + cat_file.string()).exit_code == 0,
         "constructed internal category passes its checks");
  expect(run(cli + " roundtrip " + cat_file.string() + " m_cat").exit_code ==
             0,
         "constructed internal category round-trips");
  {
    const RunResult r = run(cli + " construct internal-to-xmod " +
                            cat_file.string() + " m_cat");
    expect(r.exit_code == 0, "construct internal-to-xmod exits 0");
    const std::filesystem::path back = temp / "m_back.spec";
    std::ofstream(back, std::ios::binary) << r.output;
    expect(run(cli + " check " + back.string()).exit_code == 0,
           "reconstructed crossed module passes its checks");
  }
  expect(run(cli + " construct sideways " + valid + " m").exit_code == 2,
         "unknown construct direction exits 2");

  // builtin printing.
  {
    const RunResult r = run(cli + " builtin cyclic 4");
    expect(r.exit_code == 0, "builtin exits 0");
    expect(r.output.rfind("group Z4 order 4\n", 0) == 0,
           "builtin prints a canonical group header");
    const std::filesystem::path z4 = temp / "z4.spec";
    std::ofstream(z4, std::ios::binary) << r.output;
    expect(run(cli + " check " + z4.string()).exit_code == 0,
           "builtin output parses and validates");
  }
  expect(run(cli + " builtin dihedral").exit_code == 2,
         "builtin without its argument exits 2");
  expect(run(cli + " builtin nonsense 3").exit_code == 2,
         "unknown builtin exits 2");

  // Environment cap override.
  expect(run("CATGRP_ORDER_CAP=5 " + cli + " check " + valid).exit_code == 2,
         "cap override rejects large groups at parse time");
  expect(run("CATGRP_ORDER_CAP=bogus " + cli + " check " + valid).exit_code ==
             2,
         "invalid cap value exits 2");
  expect(run("CATGRP_ORDER_CAP=50 " + cli + " check " + valid).exit_code == 0,
         "sufficient cap override keeps the file valid");

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << failures << " failures\n";
  return 1;
}
