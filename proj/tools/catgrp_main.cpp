// catgrp: checks and constructions for finite-group categorical structures
// described in the line-oriented spec format. See README.md for the format
// and the exit-code contract: 0 all checks passed, 1 at least one check
// failed, 2 parse or usage error.

#include <unistd.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catgrp/acceptance.hpp"
#include "catgrp/document_ops.hpp"
#include "catgrp/equivalence.hpp"
#include "catgrp/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int usage(std::ostream& out = std::cerr) {
  out << "usage: catgrp <command> [args]\n"
         "  check <file> [--json]                     run every applicable "
         "check\n"
         "  construct xmod-to-internal <file> <name> [-o out]\n"
         "  construct internal-to-xmod <file> <name> [-o out]\n"
         "  roundtrip <file> <name> [--json]          verify the round-trip "
         "isomorphism\n"
         "  builtin <cyclic|dihedral|symmetric|quaternion8> [k]\n"
         "  suite                                     run the acceptance "
         "suite\n"
         "environment: CATGRP_ORDER_CAP overrides the group order cap "
         "(default 200)\n";
  return kExitUsage;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Returns the parsed document or prints diagnostics and exits with code 2.
std::optional<catgrp::SpecDocument> load_document(const std::string& path) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "catgrp: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  catgrp::ParseResult parsed = catgrp::parse_spec(*text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics)
      std::cerr << path << ":" << d.line << ":" << d.column << ": "
                << d.severity << ": " << d.message << "\n";
    return std::nullopt;
  }
  return std::move(parsed.doc);
}

nlohmann::ordered_json report_to_json(const std::string& target,
                                      const catgrp::CheckReport& report) {
  nlohmann::ordered_json j;
  j["target"] = target;
  j["check"] = report.check_name;
  j["passed"] = report.passed;
  if (report.witness)
    j["witness"] = *report.witness;
  else
    j["witness"] = nullptr;
  j["detail"] = report.detail;
  return j;
}

void print_json(const std::vector<catgrp::NamedReport>& reports) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& r : reports)
    j["results"].push_back(report_to_json(r.target, r.report));
  std::cout << j.dump() << "\n";
}

void print_human(const std::vector<catgrp::NamedReport>& reports) {
  for (const auto& r : reports) {
    if (r.report.passed) {
      std::cout << "ok   " << r.target << " " << r.report.check_name << "\n";
    } else {
      std::cout << "FAIL " << r.target << " " << r.report.check_name
                << " witness=(";
      const auto& w = *r.report.witness;
      for (std::size_t i = 0; i < w.size(); ++i)
        std::cout << (i ? "," : "") << w[i];
      std::cout << "): " << r.report.detail << "\n";
    }
  }
}

int cmd_check(const std::vector<std::string>& args) {
  bool json = false;
  std::string file;
  for (const auto& a : args) {
    if (a == "--json") json = true;
    else if (file.empty()) file = a;
    else return usage();
  }
  if (file.empty()) return usage();
  const auto doc = load_document(file);
  if (!doc) return kExitUsage;

  const std::vector<catgrp::NamedReport> reports =
      catgrp::run_document_checks(*doc);
  if (json) print_json(reports);
  else print_human(reports);
  for (const auto& r : reports)
    if (!r.report.passed) return kExitCheckFailed;
  return kExitOk;
}

int cmd_construct(const std::vector<std::string>& args) {
  if (args.size() < 3) return usage();
  const std::string& direction = args[0];
  const std::string& file = args[1];
  const std::string& name = args[2];
  std::string out_path;
  for (std::size_t i = 3; i < args.size(); ++i) {
    if (args[i] == "-o" && i + 1 < args.size()) out_path = args[++i];
    else return usage();
  }
  if (direction != "xmod-to-internal" && direction != "internal-to-xmod")
    return usage();

  const auto doc = load_document(file);
  if (!doc) return kExitUsage;
  if (!doc->find(name)) {
    std::cerr << "catgrp: no declaration named '" << name << "' in " << file
              << "\n";
    return kExitUsage;
  }

  catgrp::DocumentEnv env(*doc);
  catgrp::SpecDocument result;
  try {
    if (direction == "xmod-to-internal") {
      const catgrp::InternalCategory ic =
          catgrp::xmod_to_internal(env.xmod(name));
      result = catgrp::internal_cat_to_document(ic, name);
    } else {
      const catgrp::CrossedModule xm =
          catgrp::internal_to_xmod(env.internal_cat(name));
      result = catgrp::xmod_to_document(xm, name);
    }
  } catch (const catgrp::Error& e) {
    std::cerr << "catgrp: construct failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  const std::string text = catgrp::serialize_spec(result);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "catgrp: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    out << text;
  }
  return kExitOk;
}

int cmd_roundtrip(const std::vector<std::string>& args) {
  bool json = false;
  std::string file, name;
  for (const auto& a : args) {
    if (a == "--json") json = true;
    else if (file.empty()) file = a;
    else if (name.empty()) name = a;
    else return usage();
  }
  if (file.empty() || name.empty()) return usage();
  const auto doc = load_document(file);
  if (!doc) return kExitUsage;
  const catgrp::Declaration* decl = doc->find(name);
  if (!decl) {
    std::cerr << "catgrp: no declaration named '" << name << "' in " << file
              << "\n";
    return kExitUsage;
  }

  catgrp::DocumentEnv env(*doc);
  std::vector<catgrp::NamedReport> reports;
  try {
    if (std::holds_alternative<catgrp::XmodDecl>(decl->body)) {
      const catgrp::XmodRoundtrip rt =
          catgrp::roundtrip_xmod(env.xmod(name));
      reports.push_back({name, rt.report});
    } else if (std::holds_alternative<catgrp::InternalCatDecl>(decl->body)) {
      const catgrp::InternalRoundtrip rt =
          catgrp::roundtrip_internal(env.internal_cat(name));
      reports.push_back({name, rt.report});
    } else {
      std::cerr << "catgrp: '" << name
                << "' is neither a crossed module nor an internal category\n";
      return kExitUsage;
    }
  } catch (const catgrp::Error& e) {
    reports.push_back(
        {name, catgrp::CheckReport::fail("roundtrip", {0}, e.what())});
  }

  if (json) print_json(reports);
  else print_human(reports);
  return reports.front().report.passed ? kExitOk : kExitCheckFailed;
}

int cmd_builtin(const std::vector<std::string>& args) {
  if (args.empty() || args.size() > 2) return usage();
  const std::string& kind = args[0];
  int k = 0;
  if (args.size() == 2) {
    const auto& s = args[1];
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec != std::errc() || ptr != s.data() + s.size()) return usage();
  }
  try {
    catgrp::GroupRef g;
    std::string name;
    if (kind == "cyclic" && args.size() == 2) {
      g = catgrp::make_cyclic(k);
    } else if (kind == "dihedral" && args.size() == 2) {
      g = catgrp::make_dihedral(k);
    } else if (kind == "symmetric" && args.size() == 2) {
      g = catgrp::make_symmetric(k);
    } else if (kind == "quaternion8" && args.size() == 1) {
      g = catgrp::make_quaternion8();
    } else {
      return usage();
    }
    catgrp::SpecDocument doc;
    catgrp::Declaration decl;
    decl.name = g->name();
    decl.body = catgrp::GroupDecl{g->order(), g->table()};
    doc.decls.push_back(std::move(decl));
    std::cout << catgrp::serialize_spec(doc);
  } catch (const catgrp::Error& e) {
    std::cerr << "catgrp: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_suite() {
  catgrp::AcceptanceConfig config;
  config.cli_path =
      std::filesystem::read_symlink("/proc/self/exe").string();
  config.temp_dir =
      (std::filesystem::temp_directory_path() /
       ("catgrp-suite-" + std::to_string(getpid())))
          .string();
  const bool ok = catgrp::run_acceptance(config, std::cout);
  std::error_code ec;
  std::filesystem::remove_all(config.temp_dir, ec);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("CATGRP_ORDER_CAP")) {
    int value = 0;
    const std::string s = cap;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(),
                                           value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < 1) {
      std::cerr << "catgrp: CATGRP_ORDER_CAP must be a positive integer\n";
      return kExitUsage;
    }
    catgrp::set_order_cap(value);
  }

  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage();
  const std::string& command = args[0];
  const std::vector<std::string> rest(args.begin() + 1, args.end());

  try {
    if (command == "check") return cmd_check(rest);
    if (command == "construct") return cmd_construct(rest);
    if (command == "roundtrip") return cmd_roundtrip(rest);
    if (command == "builtin") return cmd_builtin(rest);
    if (command == "suite" && rest.empty()) return cmd_suite();
  } catch (const std::exception& e) {
    std::cerr << "catgrp: " << e.what() << "\n";
    return kExitUsage;
  }
  return usage();
}
