// Command-line surface: directive-driven episturmian sequence generation,
// exponent and bispecial computations, d-bonacci constants, the maximality
// search, the brute-force oracle, and the property-suite runner.

#include "epist/bispecial.hpp"
#include "epist/dbonacci.hpp"
#include "epist/directive.hpp"
#include "epist/error.hpp"
#include "epist/exponent.hpp"
#include "epist/jsonio.hpp"
#include "epist/maximality.hpp"
#include "epist/oracle.hpp"
#include "epist/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

void emit(const json& env, const std::string& format) {
  if (format == "json")
    std::cout << env.dump(2) << "\n";
  else
    std::cout << epist::render_text(env);
}

std::string read_word_text(const std::string& file) {
  if (file.empty() || file == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(file);
  if (!in) throw epist::Error("cannot open " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

epist::Word load_word(const std::string& file, int d) {
  std::string text = read_word_text(file);
  return d > 0 ? epist::Word::parse(text, d) : epist::Word::parse(text);
}

struct CommonArgs {
  int d = 2;
  std::string directive;
  std::string format = "text";
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"episturmian sequence toolkit: directive sequences, bispecial factors,\n"
               "critical exponents, d-bonacci constants, maximality search, oracle"};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  CommonArgs gen;
  std::size_t gen_length = 100;
  auto* cmd_gen = app.add_subcommand("gen", "prefix of the directed sequence");
  cmd_gen->add_option("--d", gen.d, "alphabet size")->required();
  cmd_gen->add_option("--directive", gen.directive, "directive 'pre:per'")->required();
  cmd_gen->add_option("--length", gen_length, "prefix length")->required();
  add_format(cmd_gen, gen.format);

  // --- exponent ----------------------------------------------------------
  CommonArgs expo;
  std::int64_t expo_nmax = 5000;
  std::string expo_tol = "1e-9";
  auto* cmd_exp = app.add_subcommand("exponent", "critical and asymptotic critical exponent");
  cmd_exp->add_option("--d", expo.d, "alphabet size")->required();
  cmd_exp->add_option("--directive", expo.directive, "directive 'pre:per'")->required();
  cmd_exp->add_option("--nmax", expo_nmax, "finite sup horizon")->capture_default_str();
  cmd_exp->add_option("--tol", expo_tol, "limsup tolerance")->capture_default_str();
  add_format(cmd_exp, expo.format);

  // --- bispecial ---------------------------------------------------------
  CommonArgs bis;
  std::int64_t bis_n = 1;
  bool bis_all = false, bis_lengths_only = false;
  std::size_t bis_cutoff = 1'000'000;
  auto* cmd_bis = app.add_subcommand("bispecial", "N-th bispecial factor and shortest return word");
  cmd_bis->add_option("--d", bis.d, "alphabet size")->required();
  cmd_bis->add_option("--directive", bis.directive, "directive 'pre:per'")->required();
  cmd_bis->add_option("--n", bis_n, "bispecial index N")->required();
  cmd_bis->add_flag("--all", bis_all, "emit records 0..N");
  cmd_bis->add_flag("--lengths-only", bis_lengths_only, "skip word materialization");
  cmd_bis->add_option("--cutoff", bis_cutoff, "materialization length cutoff")->capture_default_str();
  add_format(cmd_bis, bis.format);

  // --- dbonacci ----------------------------------------------------------
  int dbo_d = 2, dbo_dmax = 0;
  long dbo_bits = 128;
  std::string dbo_format = "text";
  auto* cmd_dbo = app.add_subcommand("dbonacci", "d-bonacci constants and threshold table");
  cmd_dbo->add_option("--d", dbo_d, "alphabet size")->capture_default_str();
  cmd_dbo->add_option("--precision", dbo_bits, "precision in bits")->capture_default_str();
  cmd_dbo->add_option("--dmax", dbo_dmax, "emit the threshold table for 2..dmax");
  add_format(cmd_dbo, dbo_format);

  // --- maxsearch ---------------------------------------------------------
  int ms_d = 2;
  std::int64_t ms_n = 1, ms_budget = 100'000'000;
  bool ms_all_argmax = false, ms_serial = false;
  std::string ms_format = "text";
  auto* cmd_ms = app.add_subcommand("maxsearch", "exact maximum of 1^T M_{h_1}..M_{h_N} 1");
  cmd_ms->add_option("--d", ms_d, "alphabet size")->required();
  cmd_ms->add_option("--n", ms_n, "directive word length")->required();
  cmd_ms->add_flag("--all-argmax", ms_all_argmax, "expand argmax over letter permutations");
  cmd_ms->add_option("--budget", ms_budget, "row-update budget")->capture_default_str();
  cmd_ms->add_flag("--serial", ms_serial, "run the serial reference kernel");
  add_format(cmd_ms, ms_format);

  // --- verify ------------------------------------------------------------
  bool ver_all = false, ver_small = true, ver_full = false;
  std::uint64_t ver_seed = 1;
  std::string ver_format = "text";
  auto* cmd_ver = app.add_subcommand("verify", "run the module property suite");
  cmd_ver->add_flag("--all", ver_all, "run every check");
  cmd_ver->add_flag("--small", ver_small, "desk-scale sizes (default)");
  cmd_ver->add_flag("--full", ver_full, "larger randomized runs");
  cmd_ver->add_option("--seed", ver_seed, "randomized-check seed")->capture_default_str();
  add_format(cmd_ver, ver_format);

  // --- oracle ------------------------------------------------------------
  auto* cmd_ora = app.add_subcommand("oracle", "brute-force scans on a finite word");
  cmd_ora->require_subcommand(1);
  std::string ora_file, ora_factor, ora_format = "text";
  int ora_d = 0;
  std::size_t ora_maxlen = 12;
  auto* ora_exp = cmd_ora->add_subcommand("exponent", "maximal fractional power");
  auto* ora_bis = cmd_ora->add_subcommand("bispecials", "bispecial factors of a prefix");
  auto* ora_ret = cmd_ora->add_subcommand("returns", "return words to a factor");
  for (auto* sub : {ora_exp, ora_bis, ora_ret}) {
    sub->add_option("--file", ora_file, "word file (comma-separated letters; '-' = stdin)");
    sub->add_option("--d", ora_d, "alphabet size (default: inferred)");
    add_format(sub, ora_format);
  }
  ora_bis->add_option("--maxlen", ora_maxlen, "maximal factor length")->capture_default_str();
  ora_ret->add_option("--factor", ora_factor, "factor word")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_gen) {
      auto delta = epist::parse_directive(gen.directive, gen.d);
      epist::Word w = standard_prefix(delta, gen_length);
      if (gen.format == "json") {
        json params{{"d", gen.d}, {"directive", gen.directive}, {"length", gen_length}};
        emit(epist::envelope("gen", params, json{{"word", w.str()}}), "json");
      } else {
        std::cout << w.str() << "\n";
      }
    } else if (*cmd_exp) {
      auto delta = epist::parse_directive(expo.directive, expo.d);
      json result;
      try {
        result["E"] = epist::to_json(epist::critical_exponent(delta, expo_nmax));
      } catch (const epist::Error& e) {
        result["E"] = json{{"error", e.what()}};
      }
      result["Estar"] =
          epist::to_json(epist::asymptotic_exponent(delta, epist::rat_from_decimal(expo_tol)));
      json params{{"d", expo.d}, {"directive", expo.directive}, {"nmax", expo_nmax}, {"tol", expo_tol}};
      emit(epist::envelope("exponent", params, result), expo.format);
    } else if (*cmd_bis) {
      auto delta = epist::parse_directive(bis.directive, bis.d);
      epist::MaterializeOptions opt{!bis_lengths_only, bis_cutoff};
      json result;
      if (bis_all) {
        result = json::array();
        for (const auto& rec : epist::bispecial_records(delta, bis_n, opt))
          result.push_back(epist::to_json(rec));
      } else {
        result = epist::to_json(epist::bispecial_record(delta, bis_n, opt));
      }
      json params{{"d", bis.d}, {"directive", bis.directive}, {"n", bis_n}};
      emit(epist::envelope("bispecial", params, result), bis.format);
    } else if (*cmd_dbo) {
      json params{{"precision", dbo_bits}};
      json result;
      if (dbo_dmax >= 2) {
        params["dmax"] = dbo_dmax;
        result = json::array();
        for (const auto& row : epist::threshold_table(dbo_dmax, dbo_bits))
          result.push_back(json{{"d", row.d}, {"t", epist::to_json(row.t)}, {"E", epist::to_json(row.e)}});
      } else {
        params["d"] = dbo_d;
        result = epist::to_json(epist::dbonacci_constants(dbo_d, dbo_bits));
      }
      emit(epist::envelope("dbonacci", params, result), dbo_format);
    } else if (*cmd_ms) {
      epist::SearchOptions opt;
      opt.budget = ms_budget;
      auto res = ms_serial ? epist::enumerate_max_serial(ms_d, ms_n, opt)
                           : epist::enumerate_max(ms_d, ms_n, opt);
      json params{{"d", ms_d}, {"n", ms_n}, {"budget", ms_budget}, {"serial", ms_serial}};
      emit(epist::envelope("maxsearch", params, epist::to_json(res, ms_all_argmax)), ms_format);
    } else if (*cmd_ver) {
      epist::SelfCheckOptions opt;
      opt.seed = ver_seed;
      opt.small = !ver_full;
      auto results = epist::run_selfchecks(opt);
      bool ok = true;
      if (ver_format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
          arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
          ok = ok && r.pass;
        }
        json params{{"seed", ver_seed}, {"small", opt.small}};
        emit(epist::envelope("verify", params, arr), "json");
      } else {
        for (const auto& r : results) {
          ok = ok && r.pass;
          std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
          if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
          std::cout << "\n";
        }
        std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
      }
      return ok ? 0 : 1;
    } else if (*cmd_ora) {
      epist::Word w = load_word(ora_file, ora_d);
      json params{{"file", ora_file.empty() ? "-" : ora_file}, {"d", w.alphabet_size()}};
      if (*ora_exp) {
        emit(epist::envelope("oracle exponent", params, epist::to_json(epist::oracle::max_exponent(w))),
             ora_format);
      } else if (*ora_bis) {
        params["maxlen"] = ora_maxlen;
        json arr = json::array();
        for (const auto& p : epist::oracle::bispecials_in_prefix(w, ora_maxlen))
          arr.push_back(epist::to_json(p));
        emit(epist::envelope("oracle bispecials", params, arr), ora_format);
      } else {
        epist::Word f = epist::Word::parse(ora_factor, w.alphabet_size());
        params["factor"] = f.str();
        json arr = json::array();
        for (const auto& r : epist::oracle::return_words(w, f)) arr.push_back(r.str());
        emit(epist::envelope("oracle returns", params, arr), ora_format);
      }
    }
  } catch (const epist::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
