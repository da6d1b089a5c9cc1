// chardeg: batch verification of character-degree inequalities.
//
//   chardeg alt-base-case --n 5..30
//   chardeg kstats --catalog data/catalog.json --format json
//   chardeg all --jobs 4
//
// Exit status: 0 when every check passes or fails as expected, 1 on an
// unexpected fail or undecided check, 2 on bad input.

#include "chardeg/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Flags {
  std::string n;
  std::uint64_t q_max = 0;
  int rank_max = 0;
  std::string catalog;
  std::string sporadic;
  std::string delta = "1/4";
  std::string format = "table";
  unsigned jobs = 1;
  std::size_t cap = chardeg::kDefaultElementCap;
  std::size_t degree_cap = chardeg::kDegreeCap;
  bool timing = false;
};

void add_flags(CLI::App &cmd, Flags &f) {
  cmd.add_option("--n", f.n, "n range a..b (alt-base-case, alt-induction, rectangles)");
  cmd.add_option("--q-max", f.q_max, "largest q in the Lie-type and PSL(2,q) grids");
  cmd.add_option("--rank-max", f.rank_max, "largest rank for the classical families");
  cmd.add_option("--catalog", f.catalog, "matrix group catalog (JSON)");
  cmd.add_option("--sporadic-table", f.sporadic, "sporadic degree table");
  cmd.add_option("--delta", f.delta, "exponent slack for the rectangle scan, rational in (0,1/2)");
  cmd.add_option("--format", f.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  cmd.add_option("--jobs", f.jobs, "suites run concurrently");
  cmd.add_option("--cap", f.cap, "largest group enumerated");
  cmd.add_option("--degree-cap", f.degree_cap, "largest group whose character degrees are computed");
  cmd.add_flag("--timing", f.timing, "include per-check runtimes");
}

chardeg::RunConfig make_config(const std::string &suite, const Flags &f) {
  chardeg::RunConfig c;
  if (suite == "all")
    c.suites = chardeg::suite_names();
  else
    c.suites = {suite};
  if (!f.n.empty()) c.n_range = chardeg::parse_range(f.n);
  if (f.q_max) c.q_max = f.q_max;
  if (f.rank_max) c.rank_max = f.rank_max;
  if (!f.catalog.empty()) c.catalog_path = f.catalog;
  if (!f.sporadic.empty()) c.sporadic_path = f.sporadic;
  c.delta = chardeg::parse_rational(f.delta);
  c.jobs = f.jobs;
  c.cap = f.cap;
  c.degree_cap = f.degree_cap;
  c.timing = f.timing;
  return c;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact checks of character-degree bounds for finite groups"};
  app.require_subcommand(0, 1);
  Flags flags;
  std::vector<std::string> names = chardeg::suite_names();
  names.insert(names.end(), {"lie-steinberg", "dolfi-bases", "all"});
  for (const auto &name : names) add_flags(*app.add_subcommand(name, "run the " + name + " suite"), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const auto chosen = app.get_subcommands();
  if (chosen.empty()) {
    std::cerr << "error: no suite selected\n" << app.help();
    return 2;
  }

  try {
    const auto config = make_config(chosen.front()->get_name(), flags);
    const auto result = chardeg::run(config);
    if (flags.format == "json")
      chardeg::render_json(std::cout, result, flags.timing);
    else
      chardeg::render_table(std::cout, result, flags.timing);
    return result.exit_code;
  } catch (const chardeg::InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
