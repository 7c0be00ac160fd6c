#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotpoly/jones.hpp"
#include "knotpoly/textio.hpp"

namespace {

using namespace knotpoly;

// exit codes: 0 success, 1 verification failure, 2 input error, 3 internal consistency
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitConsistency = 3;

struct InputOptions {
  std::string braid_text;
  std::string pd_path;
  std::string fixture_name;
  int strands_value = 0;
  std::string format = "text";
  int crossing_limit = 24;
  std::string describe() const {
    if (!fixture_name.empty()) return "fixture:" + fixture_name;
    if (!pd_path.empty()) return "pd:" + pd_path;
    return "braid:" + braid_text;
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool with_limit = true) {
  cmd->add_option("--braid", in.braid_text, "braid word, e.g. \"1 -2 1 -2\"");
  cmd->add_option("--pd", in.pd_path, "path to a PD file");
  cmd->add_option("--fixture", in.fixture_name, "built-in example name");
  cmd->add_option("--strands", in.strands_value,
                  "strand count for --braid (default: max |letter| + 1)")
      ->check(CLI::Range(1, 10000));
  cmd->add_option("--format", in.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  if (with_limit)
    cmd->add_option("--crossing-limit", in.crossing_limit, "state-sum crossing limit")
        ->check(CLI::Range(1, 62));
}

struct LoadedInput {
  bool is_braid = false;
  BraidWord braid{1, {}};
  PDCode pd;
  const Fixture* fixture = nullptr;
};

LoadedInput load_input(const CLI::App* cmd, const InputOptions& in) {
  LoadedInput loaded;
  int sources = (cmd->count("--braid") > 0) + !in.pd_path.empty() + !in.fixture_name.empty();
  if (sources != 1) throw ParseError("need exactly one of --braid, --pd, --fixture", 0);
  if (!in.fixture_name.empty()) {
    loaded.fixture = find_fixture(in.fixture_name);
    if (!loaded.fixture) throw ParseError("unknown fixture '" + in.fixture_name + "'", 0);
    loaded.is_braid = true;
    loaded.braid = loaded.fixture->word;
  } else if (!in.pd_path.empty()) {
    std::ifstream f(in.pd_path);
    if (!f) throw ParseError("cannot open '" + in.pd_path + "'", 0);
    std::stringstream buf;
    buf << f.rdbuf();
    loaded.pd = parse_pd(buf.str());
  } else {
    loaded.is_braid = true;
    std::optional<int> strands;
    if (cmd->count("--strands") > 0) strands = in.strands_value;
    loaded.braid = parse_braid(in.braid_text, strands);
  }
  if (loaded.is_braid) loaded.pd = braid_closure_pd(loaded.braid);
  return loaded;
}

nlohmann::json coeff_json(const Int& c) {
  if (c.fits_slong_p()) return nlohmann::json(c.get_si());
  return nlohmann::json(c.get_str());
}

nlohmann::json poly_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({it->first, coeff_json(it->second)});
  return terms;
}

void emit_result(const InputOptions& in, const std::string& strategy, const LaurentPoly& poly,
                 int writhe, bool t_units) {
  if (in.format == "json") {
    nlohmann::json out = {{"input", in.describe()},
                          {"strategy", strategy},
                          {"polynomial", poly_json(poly)},
                          {"writhe", writhe}};
    std::cout << out.dump() << '\n';
    return;
  }
  if (t_units) {
    std::cout << to_string_t(poly) << '\n';
    std::cout << "A-form: " << to_string_A(poly) << '\n';
  } else {
    std::cout << to_string_A(poly) << '\n';
  }
}

int run_bracket(const CLI::App* cmd, const InputOptions& in) {
  LoadedInput loaded = load_input(cmd, in);
  LaurentPoly bracket = kauffman_bracket(loaded.pd, in.crossing_limit);
  if (loaded.is_braid && bracket_of_braid(loaded.braid) != bracket)
    throw ConsistencyError("state-sum and trace brackets disagree");
  emit_result(in, "bracket", bracket, diagram_writhe(loaded.pd), false);
  return kExitOk;
}

int run_jones(const CLI::App* cmd, const InputOptions& in) {
  LoadedInput loaded = load_input(cmd, in);
  JonesResult result = jones_via_bracket(loaded.pd, in.crossing_limit);
  std::string strategy = "bracket";
  if (loaded.is_braid) {
    JonesResult via_trace = jones_via_trace(loaded.braid);
    if (via_trace.poly_A != result.poly_A)
      throw ConsistencyError("bracket and trace strategies disagree");
    result = via_trace;
    strategy = "trace";
  }
  if (loaded.fixture && result.poly_A != loaded.fixture->expected_A)
    throw ConsistencyError("fixture expectation does not match recomputation");
  emit_result(in, strategy, result.poly_A, result.writhe, true);
  return kExitOk;
}

int run_seifert(const CLI::App* cmd, const InputOptions& in) {
  LoadedInput loaded = load_input(cmd, in);
  int circles = seifert_circles(loaded.pd);
  int writhe = diagram_writhe(loaded.pd);
  if (in.format == "json") {
    nlohmann::json out = {
        {"input", in.describe()}, {"circles", circles}, {"writhe", writhe}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "circles: " << circles << ", writhe: " << writhe << '\n';
  }
  return kExitOk;
}

int run_tl_dim(int n, const std::string& format) {
  size_t dim = tl_basis(n).size();
  // closed-form Catalan number for the side-by-side report
  Int catalan;
  mpz_bin_uiui(catalan.get_mpz_t(), 2 * static_cast<unsigned long>(n),
               static_cast<unsigned long>(n));
  catalan /= (n + 1);
  if (format == "json") {
    nlohmann::json out = {{"n", n}, {"dimension", dim}, {"catalan", coeff_json(catalan)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << dim << " (catalan " << catalan.get_str() << ")\n";
  }
  return dim == catalan ? kExitOk : kExitConsistency;
}

int run_jw(int n, const std::string& format) {
  TLElement<RationalFn> f = jones_wenzl(n);
  RationalFn tr = f.trace();
  if (format == "json") {
    nlohmann::json out = {{"n", n},
                          {"terms", f.term_count()},
                          {"trace_num", to_string_A(tr.num())},
                          {"trace_den", to_string_A(tr.den())}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "f(" << n << "): " << f.term_count() << " terms, trace = " << to_string(tr)
              << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& which) {
  SuiteResult r;
  if (which == "skein") r = run_skein_suite();
  else if (which == "markov") r = run_markov_suite();
  else if (which == "cross") r = run_cross_suite();
  else if (which == "mult") r = run_mult_suite();
  else throw ParseError("unknown suite '" + which + "'", 0);
  std::cout << which << ": " << r.checks << " checks, " << r.failures << " failures\n";
  return r.ok() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones polynomial calculator: Kauffman bracket state-sums, braid words,\n"
               "and the Temperley-Lieb trace construction, cross-validated"};
  app.require_subcommand(1);

  InputOptions bracket_in, jones_in, seifert_in;
  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket in A-form");
  add_input_options(bracket_cmd, bracket_in);
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial in t and A form");
  add_input_options(jones_cmd, jones_in);
  auto* seifert_cmd = app.add_subcommand("seifert", "Seifert circle count and writhe");
  add_input_options(seifert_cmd, seifert_in, false);

  int tl_n = 0, jw_n = 0;
  std::string tl_format = "text", jw_format = "text";
  auto* tl_cmd = app.add_subcommand("tl-dim", "Temperley-Lieb basis size");
  tl_cmd->add_option("n", tl_n, "strand count")->required()->check(CLI::Range(0, 12));
  tl_cmd->add_option("--format", tl_format)->check(CLI::IsMember({"text", "json"}));
  auto* jw_cmd = app.add_subcommand("jw", "Jones-Wenzl idempotent summary");
  jw_cmd->add_option("n", jw_n, "strand count")->required()->check(CLI::Range(0, 8));
  jw_cmd->add_option("--format", jw_format)->check(CLI::IsMember({"text", "json"}));

  std::string verify_which;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", verify_which, "skein | markov | cross | mult")
      ->required()
      ->check(CLI::IsMember({"skein", "markov", "cross", "mult"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (bracket_cmd->parsed()) return run_bracket(bracket_cmd, bracket_in);
    if (jones_cmd->parsed()) return run_jones(jones_cmd, jones_in);
    if (seifert_cmd->parsed()) return run_seifert(seifert_cmd, seifert_in);
    if (tl_cmd->parsed()) return run_tl_dim(tl_n, tl_format);
    if (jw_cmd->parsed()) return run_jw(jw_n, jw_format);
    if (verify_cmd->parsed()) return run_verify(verify_which);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::length_error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
