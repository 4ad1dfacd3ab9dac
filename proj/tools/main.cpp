#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

int emit(const anth::cli::CommandResult& r) {
  std::cout << r.out << std::flush;
  std::cerr << r.err << std::flush;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace anth::cli;

  CLI::App app{"Anthyphairesis (continued fractions) of integer pairs and square roots"};
  app.require_subcommand(1);

  std::string n;
  std::optional<std::size_t> steps;
  std::optional<std::size_t> max_steps;
  Format format = Format::kTable;
  const std::map<std::string, Format> formats{{"table", Format::kTable}, {"json", Format::kJson}};

  auto* expand = app.add_subcommand("expand", "Division steps, remainders and logos for sqrt(N)");
  expand->add_option("n", n, "Non-square N >= 2")->required();
  expand->add_option("--steps", steps, "Division steps to show (default: through the logos)");
  expand->add_option("--format", format, "table or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  expand->add_option("--max-steps", max_steps, "Step budget for period detection");

  std::size_t count = 10;
  auto* conv = app.add_subcommand("convergents", "Convergents of sqrt(N) with Pell residues");
  conv->add_option("n", n, "Non-square N >= 2")->required();
  conv->add_option("--count", count, "Number of convergents");
  conv->add_option("--max-steps", max_steps, "Step budget for period detection");

  long long max_n = 1000;
  unsigned workers = 0;
  auto* pal = app.add_subcommand("palindrome", "Check palindromic periodicity for N <= max-n");
  pal->add_option("--max-n", max_n, "Largest N to check (>= 2)");
  pal->add_option("--workers", workers, "Worker threads (0: hardware concurrency)");

  auto* theo = app.add_subcommand("theodorus", "Expansions of sqrt(N) for non-square N in 2..17");

  std::string a, b;
  auto* gcd = app.add_subcommand("gcd", "Euclidean anthyphairesis of a > b >= 1");
  gcd->add_option("a", a)->required();
  gcd->add_option("b", b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*expand) return emit(cmd_expand(n, steps, format, max_steps));
  if (*conv) return emit(cmd_convergents(n, count, max_steps));
  if (*pal) return emit(cmd_palindrome(max_n, workers));
  if (*theo) return emit(cmd_theodorus());
  if (*gcd) return emit(cmd_gcd(a, b));
  return kUsage;
}
