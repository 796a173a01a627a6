// divdfa: minimal DFAs for base-b divisibility languages.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 capacity error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "divdfa/dfa.hpp"
#include "divdfa/formula.hpp"
#include "divdfa/io.hpp"
#include "divdfa/minimize.hpp"
#include "divdfa/packages.hpp"
#include "divdfa/verify.hpp"

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw divdfa::CapacityError(what + " '" + text +
                                "' exceeds the 64-bit arithmetic width");
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument(what + " '" + text + "' is not a number");
  return value;
}

// "N" or "LO:HI", inclusive.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text,
                                                    const std::string& what) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    const std::uint64_t v = parse_u64(text, what);
    return {v, v};
  }
  const std::uint64_t lo = parse_u64(text.substr(0, colon), what);
  const std::uint64_t hi = parse_u64(text.substr(colon + 1), what);
  if (hi < lo)
    throw std::invalid_argument(what + " range '" + text + "' is empty");
  return {lo, hi};
}

int run_count(const divdfa::DivSpec& spec, const std::string& expr) {
  if (expr == "all") {
    const std::uint64_t f1 = divdfa::f_count(spec, 1);
    const std::uint64_t f2 = divdfa::f_count(spec, 2);
    const std::uint64_t f3 = divdfa::f_count(spec, 3);
    std::cout << f1 << ' ' << f2 << ' ' << f3 << '\n';
    if (f1 != f2 || f2 != f3) {
      std::cerr << "error: the three expressions disagree\n";
      return 1;
    }
    return 0;
  }
  std::cout << divdfa::f_count(spec, expr[0] - '0') << '\n';
  return 0;
}

int run_build(const divdfa::DivSpec& spec, bool minimal,
              const std::string& format_name, std::uint64_t max_states) {
  const divdfa::DfaFormat format = divdfa::parse_format_name(format_name);
  if (minimal) {
    divdfa::PackageDfa built = divdfa::minimal_dfa_from_packages(spec, max_states);
    divdfa::DfaDocument doc{std::move(built.dfa),
                            divdfa::state_labels(built.partition)};
    std::cout << divdfa::serialize(doc, format);
  } else {
    divdfa::DfaDocument doc{divdfa::build_canonical(spec, max_states), {}};
    std::cout << divdfa::serialize(doc, format);
  }
  return 0;
}

// Renumbers the reachable states (ascending old id) and drops the rest.
divdfa::Dfa prune_unreachable(const divdfa::Dfa& dfa) {
  const std::vector<divdfa::State> live = divdfa::reachable(dfa);
  if (live.size() == dfa.num_states()) return dfa;
  std::vector<divdfa::State> new_id(dfa.num_states(), 0);
  for (std::uint32_t i = 0; i < live.size(); ++i) new_id[live[i]] = i;
  std::vector<divdfa::State> table;
  table.reserve(live.size() * dfa.alphabet_size());
  std::vector<bool> accepting;
  accepting.reserve(live.size());
  for (divdfa::State s : live) {
    accepting.push_back(dfa.is_accepting(s));
    for (std::uint32_t c = 0; c < dfa.alphabet_size(); ++c)
      table.push_back(new_id[dfa.next(s, c)]);
  }
  return divdfa::Dfa(static_cast<std::uint32_t>(live.size()),
                     dfa.alphabet_size(), new_id[dfa.start()],
                     std::move(table), std::move(accepting));
}

int run_minimize(const std::string& in_path, const std::string& format_name) {
  const divdfa::DfaFormat format = divdfa::parse_format_name(format_name);
  if (format == divdfa::DfaFormat::kDot)
    throw std::invalid_argument("dot files cannot be parsed; use text or att");
  divdfa::DfaDocument doc = [&] {
    if (in_path == "-") return divdfa::parse(std::cin, format);
    std::ifstream file(in_path);
    if (!file)
      throw std::invalid_argument("cannot open input file '" + in_path + "'");
    return divdfa::parse(file, format);
  }();
  const divdfa::Dfa pruned = prune_unreachable(doc.dfa);
  divdfa::MinimizationResult result = divdfa::hopcroft_minimize(pruned);
  std::cout << divdfa::serialize({std::move(result.dfa), {}}, format);
  return 0;
}

int run_verify(const divdfa::SweepConfig& config) {
  const divdfa::SweepReport report = divdfa::run_verify_sweep(config);
  std::cout << report.render();
  return report.pass() ? 0 : 1;
}

int run_member(const divdfa::DivSpec& spec, const std::string& digits_text) {
  const divdfa::DigitString digits =
      divdfa::parse_digits(digits_text, spec.base);
  const bool in_language = divdfa::value_mod(digits, spec) == 0;
  std::cout << (in_language ? "accept" : "reject") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal DFAs and state counts for base-b divisibility languages"};
  app.require_subcommand(1);

  std::string base_text, modulus_text, expr = "all";
  std::string format_name = "text", in_path = "-", digits_text;
  std::string x_text = "1", y_text = "1", max_states_text;
  bool minimal = false, fail_fast = false;
  unsigned jobs = 1;
  std::uint32_t z_max = 0;

  auto add_spec_opts = [&](CLI::App* cmd, bool as_range) {
    const char* base_desc = as_range ? "base b or range LO:HI" : "base b (>= 2)";
    const char* mod_desc = as_range ? "modulus k or range LO:HI" : "modulus k (>= 1)";
    cmd->add_option("-b,--base", base_text, base_desc)->required();
    cmd->add_option("-k,--modulus", modulus_text, mod_desc)->required();
  };

  CLI::App* count = app.add_subcommand("count", "print f_b(k)");
  add_spec_opts(count, false);
  count->add_option("--expr", expr, "expression: 1, 2, 3 or all")
      ->check(CLI::IsMember({"1", "2", "3", "all"}));

  CLI::App* breakdown_cmd =
      app.add_subcommand("breakdown", "print the per-alpha state-count table");
  add_spec_opts(breakdown_cmd, false);

  CLI::App* build = app.add_subcommand(
      "build", "emit the canonical or the package-built minimal DFA");
  add_spec_opts(build, false);
  build->add_flag("--minimal", minimal, "build the minimal DFA from packages");
  build->add_option("--format", format_name, "text, dot or att")
      ->check(CLI::IsMember({"text", "dot", "att"}));
  build->add_option("--max-states", max_states_text,
                    "override the explicit-state cap");

  CLI::App* minimize_cmd =
      app.add_subcommand("minimize", "minimize a DFA document");
  minimize_cmd->add_option("--in", in_path, "input path, '-' for stdin");
  minimize_cmd->add_option("--format", format_name, "text or att")
      ->check(CLI::IsMember({"text", "att"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check formula, minimizers and packages over ranges");
  add_spec_opts(verify, true);
  verify->add_option("--jobs", jobs, "worker count")->check(CLI::Range(1u, 1024u));
  verify->add_flag("--fail-fast", fail_fast, "stop after the first failure");
  verify->add_option("--max-states", max_states_text,
                     "override the explicit-state cap");

  CLI::App* pattern = app.add_subcommand(
      "pattern", "table of f_b(x*y^z) with successive differences");
  pattern->add_option("-b,--base", base_text, "base b (>= 2)")->required();
  pattern->add_option("--x", x_text, "multiplier x (>= 1)")->required();
  pattern->add_option("--y", y_text, "growth factor y (>= 1)")->required();
  pattern->add_option("--zmax", z_max, "largest z")->required();

  CLI::App* member =
      app.add_subcommand("member", "test a digit string for divisibility");
  add_spec_opts(member, false);
  member->add_option("digits", digits_text,
                     "digit string (alphanumeric for b <= 36, or "
                     "comma-separated decimal values)");

  try {
    app.parse(argc, argv);

    std::uint64_t max_states = divdfa::kDefaultMaxStates;
    if (!max_states_text.empty())
      max_states = parse_u64(max_states_text, "--max-states");

    if (*count || *breakdown_cmd || *build || *member) {
      const divdfa::DivSpec spec{parse_u64(base_text, "base"),
                                 parse_u64(modulus_text, "modulus")};
      spec.validate();
      if (*count) return run_count(spec, expr);
      if (*breakdown_cmd) {
        std::cout << divdfa::render_breakdown(divdfa::breakdown(spec));
        return 0;
      }
      if (*build) return run_build(spec, minimal, format_name, max_states);
      return run_member(spec, digits_text);
    }
    if (*minimize_cmd) return run_minimize(in_path, format_name);
    if (*verify) {
      const auto [blo, bhi] = parse_range(base_text, "base");
      const auto [klo, khi] = parse_range(modulus_text, "modulus");
      divdfa::SweepConfig config;
      config.base_lo = blo;
      config.base_hi = bhi;
      config.modulus_lo = klo;
      config.modulus_hi = khi;
      config.jobs = jobs;
      config.fail_fast = fail_fast;
      config.max_states = max_states;
      return run_verify(config);
    }
    if (*pattern) {
      std::cout << divdfa::render_pattern(parse_u64(base_text, "base"),
                                          parse_u64(x_text, "x"),
                                          parse_u64(y_text, "y"), z_max);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const divdfa::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const divdfa::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
