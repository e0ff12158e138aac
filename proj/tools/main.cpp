// Command-line surface: decision procedures, normal forms, counting, and the
// fixed-point lab over finite sentence pools.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "fixmodal/axioms.hpp"
#include "fixmodal/decide.hpp"
#include "fixmodal/enumerate.hpp"
#include "fixmodal/fixlab.hpp"
#include "fixmodal/json_io.hpp"
#include "fixmodal/normalform.hpp"
#include "fixmodal/semantics.hpp"

namespace {

using fixmodal::Json;

constexpr int kExitAffirmative = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

struct CommonOpts {
  std::string system = "s5cgm";
  bool json = false;
  bool allow_n3 = false;
  bool serial = false;
};

fixmodal::System system_of(const CommonOpts& opts) {
  auto sys = fixmodal::parse_system(opts.system);
  if (!sys) throw std::invalid_argument("unknown system '" + opts.system + "'");
  return *sys;
}

fixmodal::Limits limits_of(const CommonOpts& opts) {
  return fixmodal::Limits{opts.allow_n3};
}

fixmodal::ExecMode mode_of(const CommonOpts& opts) {
  return opts.serial ? fixmodal::ExecMode::Serial
                     : fixmodal::ExecMode::Parallel;
}

void emit(const Json& envelope) { std::cout << envelope.dump(2) << "\n"; }

std::string cell_text(const fixmodal::Cell& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out;
}

int run_decide(const CommonOpts& opts, const std::string& formula_text,
               bool sat_query) {
  fixmodal::System sys = system_of(opts);
  fixmodal::Formula f = fixmodal::parse(formula_text);
  fixmodal::Verdict verdict =
      sat_query ? fixmodal::satisfiable(f, sys, limits_of(opts), mode_of(opts))
                : fixmodal::valid(f, sys, limits_of(opts), mode_of(opts));
  if (opts.json) {
    Json envelope;
    envelope["command"] = sat_query ? "sat" : "decide";
    envelope["inputs"] = {{"system", opts.system}, {"formula", formula_text}};
    envelope["result"] =
        fixmodal::verdict_json(sat_query ? "sat" : "valid", sys, verdict);
    emit(envelope);
  } else if (sat_query) {
    if (verdict.valid) {
      std::cout << "SATISFIABLE\n";
      std::cout << "witness world: " << cell_text(verdict.witness->world)
                << "\n";
      std::cout << "witness frame: "
                << fixmodal::render_tensor(verdict.witness->frame) << "\n";
    } else {
      std::cout << "UNSATISFIABLE\n";
    }
  } else {
    if (verdict.valid) {
      std::cout << "PROVABLE\n";
    } else {
      std::cout << "NOT PROVABLE\n";
      std::cout << "countermodel world: " << cell_text(verdict.witness->world)
                << "\n";
      std::cout << "countermodel frame: "
                << fixmodal::render_tensor(verdict.witness->frame) << "\n";
    }
  }
  return verdict.valid ? kExitAffirmative : kExitNegative;
}

int run_normalize(const CommonOpts& opts, const std::string& formula_text,
                  bool as_formula) {
  fixmodal::System sys = system_of(opts);
  fixmodal::Formula f = fixmodal::parse(formula_text);
  fixmodal::NormalForm nf = fixmodal::to_normal_form(f, sys, limits_of(opts));
  if (opts.json) {
    Json envelope;
    envelope["command"] = "normalize";
    envelope["inputs"] = {{"system", opts.system}, {"formula", formula_text}};
    envelope["result"] = fixmodal::normal_form_json(nf);
    emit(envelope);
  } else if (as_formula) {
    std::cout << fixmodal::render(fixmodal::formula_of(nf)) << "\n";
  } else {
    std::cout << "system: " << fixmodal::system_name(sys) << "\n";
    std::cout << "arity: " << nf.arity << "\n";
    std::cout << "disjuncts: " << nf.disjuncts.size() << "\n";
    for (const auto& p : nf.disjuncts)
      std::cout << "world " << cell_text(p.world) << " | frame "
                << fixmodal::render_tensor(p.frame) << "\n";
  }
  return kExitAffirmative;
}

int run_translate(const std::string& formula_text, bool ascii, bool json) {
  fixmodal::Formula f = fixmodal::parse(formula_text);
  std::string text = fixmodal::to_second_order(
      f, ascii ? fixmodal::TranslationStyle::Ascii
               : fixmodal::TranslationStyle::Unicode);
  if (json) {
    Json envelope;
    envelope["command"] = "translate";
    envelope["inputs"] = {{"formula", formula_text}, {"ascii", ascii}};
    envelope["result"] = {{"second_order", text}};
    emit(envelope);
  } else {
    std::cout << text << "\n";
  }
  return kExitAffirmative;
}

int run_count(const CommonOpts& opts, int n, const std::string& what) {
  fixmodal::System sys = system_of(opts);
  fixmodal::Limits limits = limits_of(opts);
  Json result;
  std::string human;
  if (what == "isolators") {
    fixmodal::BigInt intensional =
        fixmodal::count_intensional_isolators(sys, n, limits);
    fixmodal::BigInt pairs = fixmodal::count_isolator_pairs(sys, n, limits);
    result["intensional"] = intensional.str();
    result["isolators"] = pairs.str();
    human = intensional.str() + " intensional, " + pairs.str() + " isolators";
  } else if (what == "formulas") {
    fixmodal::SymbolicCount classes =
        fixmodal::count_formula_classes(sys, n, limits);
    result["exponent"] = classes.exponent.str();
    result["classes"] = classes.to_string();
    human = classes.to_string();
  } else if (what == "definable") {
    fixmodal::DefinableCount dc =
        fixmodal::count_definable(n, limits, mode_of(opts));
    result["exponent"] = dc.exponent;
    result["count"] = dc.count.to_string();
    result["interval_low"] = dc.interval_low.str();
    result["interval_high"] = dc.interval_high.str();
    result["interval_ok"] = dc.interval_ok;
    human = dc.count.to_string() + "\ninterval: " + dc.interval_low.str() +
            " < " + std::to_string(dc.exponent) + " < " +
            dc.interval_high.str() + (dc.interval_ok ? " ok" : " VIOLATED");
  } else {
    throw std::invalid_argument("unknown --what '" + what + "'");
  }
  if (opts.json) {
    Json envelope;
    envelope["command"] = "count";
    envelope["inputs"] = {{"system", opts.system}, {"n", n}, {"what", what}};
    envelope["result"] = std::move(result);
    emit(envelope);
  } else {
    std::cout << human << "\n";
  }
  return kExitAffirmative;
}

int run_prime_check(const std::string& cells, int n, bool json) {
  fixmodal::Tensor t = fixmodal::parse_tensor(cells, 3);
  if (n != 0 && n != t.arity)
    throw std::invalid_argument("--n does not match the cells' arity");
  fixmodal::PrimeVerdict verdict = fixmodal::prime_check(t);
  if (json) {
    Json envelope;
    envelope["command"] = "prime-check";
    envelope["inputs"] = {{"cells", cells}, {"n", t.arity}};
    envelope["result"] = fixmodal::prime_verdict_json(verdict);
    emit(envelope);
  } else if (verdict.ok) {
    std::cout << "OK: meets the prime conditions\n";
  } else {
    std::cout << "VIOLATES: " << verdict.describe() << "\n";
  }
  return verdict.ok ? kExitAffirmative : kExitNegative;
}

int run_realize(const std::string& cells, const std::string& out_path,
                bool json) {
  fixmodal::Tensor t = fixmodal::parse_tensor(cells, 3);
  fixmodal::lab::Realization r;
  try {
    r = fixmodal::lab::realize(t);
  } catch (const fixmodal::PrimeViolationError& e) {
    if (json) {
      Json envelope;
      envelope["command"] = "realize";
      envelope["inputs"] = {{"cells", cells}};
      envelope["result"] = {
          {"realizable", false},
          {"violation", fixmodal::prime_verdict_json(e.verdict())["violation"]}};
      emit(envelope);
    } else {
      std::cout << "NOT REALIZABLE: " << e.verdict().describe() << "\n";
    }
    return kExitNegative;
  }
  Json pool = fixmodal::lab::pool_json(r.pool);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << pool.dump(2) << "\n";
  }
  if (json) {
    Json envelope;
    envelope["command"] = "realize";
    envelope["inputs"] = {{"cells", cells}};
    envelope["result"] = {{"realizable", true},
                          {"names", r.names},
                          {"pool", std::move(pool)}};
    emit(envelope);
  } else {
    std::cout << "names:";
    for (const auto& name : r.names) std::cout << " " << name;
    std::cout << "\n" << pool.dump(2) << "\n";
  }
  return kExitAffirmative;
}

fixmodal::lab::Pool load_pool(const std::string& path,
                              const std::vector<std::string>& inline_defs) {
  fixmodal::lab::Pool pool;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    Json j = Json::parse(in);
    pool = fixmodal::lab::pool_from_json(j);
  }
  for (const std::string& entry : inline_defs) {
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected name=definition, got '" + entry +
                                  "'");
    pool.add(entry.substr(0, eq),
             fixmodal::lab::parse_def(entry.substr(eq + 1)));
  }
  pool.validate();
  return pool;
}

int run_lab_classify(const std::string& pool_path,
                     const std::vector<std::string>& defs, bool json) {
  fixmodal::lab::Pool pool = load_pool(pool_path, defs);
  fixmodal::lab::FixedPointSet fps = fixmodal::lab::enumerate_fixed_points(pool);
  if (json) {
    Json sentences = Json::array();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      auto cls = fixmodal::lab::classify(pool, fps, pool.name_at(i));
      Json e;
      e["name"] = pool.name_at(i);
      e.update(fixmodal::lab::classification_json(cls));
      sentences.push_back(std::move(e));
    }
    Json envelope;
    envelope["command"] = "lab classify";
    envelope["inputs"] = {{"pool", pool_path}};
    envelope["result"] = {{"fixed_points", fps.points.size()},
                          {"minimum_index", fps.minimum_index},
                          {"sentences", std::move(sentences)}};
    emit(envelope);
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "fixed points: " << fps.points.size() << " (minimum index "
              << fps.minimum_index << ")\n";
    for (std::size_t i = 0; i < pool.size(); ++i) {
      auto cls = fixmodal::lab::classify(pool, fps, pool.name_at(i));
      std::cout << pool.name_at(i) << ": profile "
                << fixmodal::render_tensor(cls.profile)
                << " grounded=" << yn(cls.grounded)
                << " paradoxical=" << yn(cls.paradoxical)
                << " inevitable=" << yn(cls.inevitable)
                << " intrinsic=" << yn(cls.intrinsic) << "\n";
    }
  }
  return kExitAffirmative;
}

int run_lab_audit(const std::string& pool_path,
                  const std::vector<std::string>& defs, bool json) {
  fixmodal::lab::Pool pool = load_pool(pool_path, defs);
  fixmodal::lab::DefinabilityReport report =
      fixmodal::lab::definability_audit(pool);
  if (json) {
    Json envelope;
    envelope["command"] = "lab audit";
    envelope["inputs"] = {{"pool", pool_path}};
    envelope["result"] = fixmodal::lab::report_json(report);
    emit(envelope);
  } else {
    auto set_text = [](const std::vector<std::string>& names) {
      std::string out = "{";
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
      }
      return out + "}";
    };
    std::cout << "intrinsic set: " << set_text(report.intrinsic_set) << "\n";
    std::cout << "inevitable set: " << set_text(report.inevitable_set) << "\n";
    std::cout << "intrinsic matches: " << report.intrinsic_matches.size()
              << "/64 candidates\n";
    std::cout << "inevitable matches: " << report.inevitable_matches.size()
              << "/64 candidates\n";
    if (!report.inevitable_matches.empty()) {
      std::cout << "first inevitable match:";
      uint32_t cand = report.inevitable_matches.front();
      for (int b = 0; b < 6; ++b) {
        if (cand >> b & 1u)
          std::cout << " ["
                    << fixmodal::render_tensor(
                           fixmodal::Tensor{1, 3,
                                            report.candidate_tensor_masks
                                                [static_cast<std::size_t>(b)]})
                    << "]";
      }
      std::cout << "\n";
    }
    if (report.discerning_pair) {
      std::cout << "discerning pair: " << report.discerning_pair->first << ", "
                << report.discerning_pair->second << "\n";
    }
  }
  return kExitAffirmative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures and fixed-point lab for the modal logic "
               "of truth-value profiles"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string formula_text;
  std::string what = "formulas";
  std::string cells;
  std::string pool_path;
  std::string out_path;
  std::vector<std::string> inline_defs;
  int n = 1;
  int prime_n = 0;
  bool ascii = false;
  bool as_formula = false;

  auto add_common = [&](CLI::App* cmd, bool with_system = true) {
    if (with_system)
      cmd->add_option("--system", opts.system, "s5 | s5c | s5cg | s5cgm")
          ->check(CLI::IsMember({"s5", "s5c", "s5cg", "s5cgm"}));
    cmd->add_flag("--json", opts.json, "machine-readable output");
    cmd->add_flag("--allow-n3", opts.allow_n3,
                  "allow the arity-3 ternary sweep (2^27 masks)");
    cmd->add_flag("--serial", opts.serial,
                  "run the serial reference kernels");
  };

  CLI::App* decide = app.add_subcommand("decide", "decide provability");
  add_common(decide);
  decide->add_option("formula", formula_text, "formula text")->required();

  CLI::App* sat = app.add_subcommand("sat", "decide satisfiability");
  add_common(sat);
  sat->add_option("formula", formula_text, "formula text")->required();

  CLI::App* normalize =
      app.add_subcommand("normalize", "isolator disjunctive normal form");
  add_common(normalize);
  normalize->add_flag("--as-formula", as_formula,
                      "print the rebuilt disjunction instead of the table");
  normalize->add_option("formula", formula_text, "formula text")->required();

  CLI::App* translate = app.add_subcommand(
      "translate", "second-order rendering of a basic-form formula");
  translate->add_flag("--ascii", ascii, "ASCII notation");
  translate->add_flag("--json", opts.json, "machine-readable output");
  translate->add_option("formula", formula_text, "formula text")->required();

  CLI::App* count = app.add_subcommand("count", "exact counts");
  add_common(count);
  count->add_option("--n", n, "arity")->required();
  count->add_option("--what", what, "isolators | formulas | definable")
      ->check(CLI::IsMember({"isolators", "formulas", "definable"}))
      ->required();

  CLI::App* prime = app.add_subcommand("prime-check",
                                       "check the prime conditions");
  prime->add_option("--n", prime_n, "arity (validated against --cells)");
  prime->add_option("--cells", cells, "tensor, e.g. \"1,1;2,3\"")->required();
  prime->add_flag("--json", opts.json, "machine-readable output");

  CLI::App* realize =
      app.add_subcommand("realize", "build a pool realizing a prime tensor");
  realize->add_option("--cells", cells, "tensor, e.g. \"1,1;2,2;3,3\"")
      ->required();
  realize->add_option("--out", out_path, "write the pool JSON here");
  realize->add_flag("--json", opts.json, "machine-readable output");

  CLI::App* lab = app.add_subcommand("lab", "fixed-point lab over pools");
  lab->require_subcommand(1);
  CLI::App* classify = lab->add_subcommand("classify", "classify sentences");
  classify->add_option("--pool", pool_path, "pool JSON file");
  classify->add_option("--sentence", inline_defs,
                       "inline sentence name=definition");
  classify->add_flag("--json", opts.json, "machine-readable output");
  CLI::App* audit = lab->add_subcommand("audit", "definability audit");
  audit->add_option("--pool", pool_path, "pool JSON file");
  audit->add_option("--sentence", inline_defs,
                    "inline sentence name=definition");
  audit->add_flag("--json", opts.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (decide->parsed()) return run_decide(opts, formula_text, false);
    if (sat->parsed()) return run_decide(opts, formula_text, true);
    if (normalize->parsed())
      return run_normalize(opts, formula_text, as_formula);
    if (translate->parsed())
      return run_translate(formula_text, ascii, opts.json);
    if (count->parsed()) return run_count(opts, n, what);
    if (prime->parsed()) return run_prime_check(cells, prime_n, opts.json);
    if (realize->parsed()) return run_realize(cells, out_path, opts.json);
    if (classify->parsed())
      return run_lab_classify(pool_path, inline_defs, opts.json);
    if (audit->parsed()) return run_lab_audit(pool_path, inline_defs, opts.json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::cerr << "error: no command\n";
  return kExitError;
}
