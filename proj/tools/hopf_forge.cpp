// hopf-forge: command-line front end for the Hopf algebra engine.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hopf/doubles.hpp"
#include "hopf/fileio.hpp"
#include "hopf/integrals.hpp"
#include "hopf/suites.hpp"
#include "hopf/zoo.hpp"

using namespace hopf;

namespace {

HopfData load(const std::string& spec, bool verify) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return load_algebra(spec, verify);
  return builtin(spec);
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FileError("cannot write " + path);
  os << text;
}

std::string show(const SparseVec& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : v.entries) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ") " + labels.at(i);
  }
  return s;
}

Window parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--window", "expected lo:hi");
  Window w{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  if (w.hi < w.lo) throw CLI::ValidationError("--window", "empty window");
  return w;
}

int cmd_check(const std::string& file) {
  HopfData h = load(file, false);
  AxiomReport rep = verify_hopf(h);
  for (const auto& c : rep.checks)
    std::cout << (c.ok() ? "PASS " : "FAIL ") << c.name
              << (c.ok() ? "" : "  " + c.residual.first_location()) << "\n";
  std::cout << h.name() << " (dim " << h.dim() << ", " << h.field().name() << "): "
            << (rep.ok() ? "Hopf algebra" : "not a Hopf algebra") << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_integrals(const std::string& file) {
  HopfData h = load(file, true);
  const HopfData d = dual(h);
  std::cout << "left integral of H:  " << show(left_integral(h, Sort::Alg), h.labels()) << "\n";
  std::cout << "left integral of H*: " << show(left_integral(h, Sort::Dual), d.labels()) << "\n";
  NormalizedPair np = normalized_pair(h);
  std::cout << "normalized h: " << show(np.h, h.labels()) << "\n";
  std::cout << "normalized p: " << show(np.p, d.labels()) << "\n";
  std::cout << "p(h) = " << pairing_eval(h, np.p, np.h).to_string() << "\n";
  std::cout << "Fourier rank " << rank(fourier(h, np.h)) << "/" << h.dim() << "\n";
  bool ok = integral_identity_check(h, np.h).is_zero();
  std::cout << "integral identity " << (ok ? "holds" : "fails") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  std::string file, out, variant = "d", suite, algebra, field_text, window_text, report = "text",
                     builtin_name;
  std::uint64_t seed = 1;
  std::size_t samples = 100;

  auto* check = app.add_subcommand("check", "Verify the Hopf axioms of an algebra file");
  check->add_option("file", file, "Algebra file or builtin name")->required();

  auto* dual_cmd = app.add_subcommand("dual", "Write the dual Hopf algebra");
  dual_cmd->add_option("file", file, "Algebra file or builtin name")->required();
  dual_cmd->add_option("-o,--output", out, "Output file (default stdout)");

  auto* dbl = app.add_subcommand("double", "Write a double of the algebra");
  dbl->add_option("file", file, "Algebra file or builtin name")->required();
  dbl->add_option("--variant", variant, "d, dtilde, l or l-cop-base")
      ->check(CLI::IsMember({"d", "dtilde", "l", "l-cop-base"}));
  dbl->add_option("-o,--output", out, "Output file (default stdout)");

  auto* ints = app.add_subcommand("integrals", "Integrals, normalized pair and Fourier map");
  ints->add_option("file", file, "Algebra file or builtin name")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--algebra", algebra, "Builtin name or algebra file")->required();
  verify->add_option("--field", field_text, "Q or Fp:<p>");
  verify->add_option("--window", window_text, "lo:hi");
  verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_option("--samples", samples, "Random samples per randomized check")->check(CLI::PositiveNumber);
  verify->add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* emit = app.add_subcommand("emit", "Write a builtin algebra to a file");
  emit->add_option("--builtin", builtin_name, "Builtin name")->required();
  emit->add_option("-o,--output", out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors share the error code.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(file);
    if (ints->parsed()) return cmd_integrals(file);
    if (dual_cmd->parsed()) {
      write_out(to_json(dual(load(file, true))), out);
      return 0;
    }
    if (dbl->parsed()) {
      HopfData h = load(file, true);
      HopfData d = variant == "d"        ? drinfeld_double(h)
                   : variant == "dtilde" ? tilde_double(h)
                   : variant == "l"      ? L_of(h)
                                         : tilde_double_of_cop(h);
      write_out(to_json(d), out);
      return 0;
    }
    if (emit->parsed()) {
      save_algebra(builtin(builtin_name), out);
      return 0;
    }
    if (verify->parsed()) {
      SuiteConfig cfg;
      if (!field_text.empty()) cfg.field = Field::parse(field_text);
      if (!window_text.empty()) cfg.window = parse_window(window_text);
      cfg.seed = seed;
      cfg.samples = samples;
      HopfData h = resolve_algebra(algebra, cfg.field);
      SuiteReport rep = run_suite(suite, h, cfg);
      std::cout << (report == "json" ? rep.json() : rep.text());
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "hopf-forge: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
