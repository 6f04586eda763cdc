#include "hecke/cli.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hecke/json_io.hpp"
#include "hecke/normalizer.hpp"
#include "hecke/selftest.hpp"
#include "hecke/text.hpp"

namespace hecke::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<Verb, 10> kVerbs{Verb::Factor,     Verb::Reduce,  Verb::Index,
                                      Verb::Cosets,     Verb::Member,  Verb::Normalizer,
                                      Verb::Explain,    Verb::Elementary, Verb::Quotient,
                                      Verb::Selftest};

constexpr std::uint64_t kDefaultSeed = 1;
constexpr std::size_t kSampledConjugations = 200;

std::string_view verb_help(Verb v) {
  switch (v) {
    case Verb::Factor: return "factor an element into canonical primes";
    case Verb::Reduce: return "reduced factor and reduced form of a/b";
    case Verb::Index: return "index of G0(t) in G5";
    case Verb::Cosets: return "enumerate the right cosets of G0(t)";
    case Verb::Member: return "membership of a matrix a b c d in G5 (and G0(t))";
    case Verb::Normalizer: return "normalizer of G0(t), optionally testing a matrix";
    case Verb::Explain: return "derivation chain of the normalizer bound";
    case Verb::Elementary: return "search for a G5-elementary counterexample";
    case Verb::Quotient: return "group table of the normalizer quotient";
    case Verb::Selftest: return "reproduce the reference tables";
  }
  return "";
}

// (min, max) positional count; elements unless noted
std::pair<std::size_t, std::size_t> arity(Verb v) {
  switch (v) {
    case Verb::Reduce: return {2, 2};
    case Verb::Member: return {4, 5};
    case Verb::Normalizer: return {1, 5};
    case Verb::Selftest: return {0, 0};
    default: return {1, 1};
  }
}

bool takes_bound(Verb v) {
  return v == Verb::Cosets || v == Verb::Quotient || v == Verb::Elementary;
}

}  // namespace

std::string_view verb_name(Verb v) {
  switch (v) {
    case Verb::Factor: return "factor";
    case Verb::Reduce: return "reduce";
    case Verb::Index: return "index";
    case Verb::Cosets: return "cosets";
    case Verb::Member: return "member";
    case Verb::Normalizer: return "normalizer";
    case Verb::Explain: return "explain";
    case Verb::Elementary: return "elementary";
    case Verb::Quotient: return "quotient";
    case Verb::Selftest: return "selftest";
  }
  return "";
}

std::vector<std::string> Command::tokens() const {
  std::vector<std::string> t{std::string(verb_name(verb))};
  t.insert(t.end(), args.begin(), args.end());
  if (json) t.emplace_back("--json");
  if (seed) {
    t.emplace_back("--seed");
    t.push_back(std::to_string(*seed));
  }
  if (bound) {
    t.emplace_back("--bound");
    t.push_back(std::to_string(*bound));
  }
  if (strong) t.emplace_back("--strong");
  for (const std::string& id : only) {
    t.emplace_back("--only");
    t.push_back(id);
  }
  if (inject) {
    t.emplace_back("--inject");
    t.push_back(*inject);
  }
  return t;
}

std::string Command::to_string() const {
  std::string out;
  for (const std::string& tok : tokens()) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

Command parse_command(const std::vector<std::string>& tokens) {
  CLI::App app{"Exact computations in the Hecke group G5 and its congruence subgroups",
               "hecke"};
  app.require_subcommand(1);
  bool json_flag = false, strong = false;
  std::uint64_t seed = kDefaultSeed;
  long bound = 0;
  std::vector<std::string> only;
  std::string inject;
  app.add_flag("--json", json_flag, "emit one JSON object");

  std::vector<std::pair<Verb, CLI::App*>> subs;
  std::vector<CLI::Option*> seed_opts, bound_opts, inject_opts;
  for (Verb v : kVerbs) {
    CLI::App* sc = app.add_subcommand(std::string(verb_name(v)), std::string(verb_help(v)));
    sc->allow_extras();
    sc->add_flag("--json", json_flag, "emit one JSON object");
    if (takes_bound(v)) {
      bound_opts.push_back(sc->add_option("--bound", bound, "search or enumeration bound")
                               ->check(CLI::PositiveNumber));
    }
    if (v == Verb::Normalizer) {
      seed_opts.push_back(sc->add_option("--seed", seed, "seed for the sampled check"));
    }
    if (v == Verb::Elementary) sc->add_flag("--strong", strong, "test every divisor");
    if (v == Verb::Selftest) {
      sc->add_option("--only", only, "run only these items")->take_all();
      inject_opts.push_back(sc->add_option("--inject", inject, "inject a fault")
                                ->check(CLI::IsMember({"tie-lower", "tie-floor"})));
    }
    subs.emplace_back(v, sc);
  }

  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto& [v, sc] : subs) {
      if (sc->parsed()) throw HelpRequested{sc->help()};
    }
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }

  Command cmd;
  const CLI::App* chosen = nullptr;
  for (const auto& [v, sc] : subs) {
    if (sc->parsed()) {
      cmd.verb = v;
      chosen = sc;
    }
  }
  cmd.json = json_flag;
  cmd.strong = strong;
  cmd.only = only;
  for (CLI::Option* o : seed_opts) {
    if (o->count() > 0) cmd.seed = seed;
  }
  for (CLI::Option* o : bound_opts) {
    if (o->count() > 0) cmd.bound = bound;
  }
  for (CLI::Option* o : inject_opts) {
    if (o->count() > 0) cmd.inject = inject;
  }

  std::vector<std::string> positional = chosen->remaining();
  for (const std::string& p : positional) {
    if (p.size() > 2 && p.compare(0, 2, "--") == 0) {
      throw Error(ErrorCode::SyntaxError, "unknown option " + p);
    }
  }
  auto [lo, hi] = arity(cmd.verb);
  if (positional.size() < lo || positional.size() > hi ||
      (cmd.verb == Verb::Normalizer && positional.size() != 1 && positional.size() != 5)) {
    throw Error(ErrorCode::SyntaxError, std::string(verb_name(cmd.verb)) +
                                            ": wrong number of arguments (" +
                                            std::to_string(positional.size()) + ")");
  }
  for (std::size_t i = 0; i < positional.size(); ++i) {
    try {
      cmd.args.push_back(format_element(parse_element(positional[i])));
    } catch (const ParseError& e) {
      throw ParseError(e.position(), "argument " + std::to_string(i + 1) + " '" +
                                         positional[i] + "': " + e.reason());
    }
  }
  return cmd;
}

namespace {

struct Rendered {
  json j;
  std::string text;
  int exit_code = kExitOk;
};

std::string fmt(const RingElt& x) { return format_element(x); }

std::string integer_text(const Integer& v) { return v.get_str(); }

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string with_lambda_power(const RingElt& x, long e) {
  std::string base = fmt(x);
  if (e == 0) return base;
  std::string power = e == 1 ? "L" : "L^" + std::to_string(e);
  if (x == RingElt(1)) return power;
  bool atom = x.b() == 0 && x.a() > 0;
  return (atom ? base : "(" + base + ")") + "*" + power;
}

json matrix_text(const GMatrix& m) {
  return json::array({json::array({fmt(m.a()), fmt(m.b())}),
                      json::array({fmt(m.c()), fmt(m.d())})});
}

std::string matrix_line(const GMatrix& m) {
  return "[[" + fmt(m.a()) + ", " + fmt(m.b()) + "], [" + fmt(m.c()) + ", " + fmt(m.d()) +
         "]]";
}

RingElt elt(const Command& cmd, std::size_t i) { return parse_element(cmd.args[i]); }

Rendered do_factor(const Command& cmd) {
  RingElt x = elt(cmd, 0);
  Factorization f = factor(x);
  Rendered r;
  r.j = {{"schema", "hecke.factor/1"}, {"input", fmt(x)}};
  json body = to_json(f);
  r.j["unit"] = body["unit"];
  r.j["factors"] = body["factors"];
  std::ostringstream t;
  t << "unit " << format_factored(unit_value(f.unit));
  for (const auto& [p, m] : f.factors) {
    t << "\n(" << fmt(p.generator) << ")^" << m << "  p=" << p.residue_characteristic << " "
      << splitting_name(p.splitting) << " norm=" << p.absolute_norm;
  }
  r.text = t.str();
  return r;
}

Rendered do_reduce(const Command& cmd) {
  RingElt a = elt(cmd, 0), b = elt(cmd, 1);
  ReducedFormResult rf = reduced_factor(a, b);
  Rendered r;
  json quotients = json::array();
  for (const Integer& q : rf.quotients) quotients.push_back(integer_text(q));
  r.j = {{"schema", "hecke.reduce/1"},
         {"input", json::array({fmt(a), fmt(b)})},
         {"e", rf.e},
         {"reduced", json::array({fmt(rf.reduced_num), fmt(rf.reduced_den)})},
         {"factored", json::array({with_lambda_power(a, rf.e), with_lambda_power(b, rf.e)})},
         {"witness", matrix_text(rf.witness)},
         {"word", rf.word.to_string()},
         {"quotients", quotients}};
  r.text = "e " + std::to_string(rf.e) + "\nreduced " + fmt(rf.reduced_num) + " / " +
           fmt(rf.reduced_den) + "\nfactored " + with_lambda_power(a, rf.e) + " / " +
           with_lambda_power(b, rf.e) + "\nwitness " + matrix_line(rf.witness) + "\nword " +
           rf.word.to_string();
  return r;
}

Rendered do_index(const Command& cmd) {
  RingElt t = elt(cmd, 0);
  Integer idx = index_in_G5(t);
  Rendered r;
  r.j = {{"schema", "hecke.index/1"},
         {"modulus", fmt(Ideal(t).generator())},
         {"index", integer_json(idx)}};
  r.text = integer_text(idx);
  return r;
}

Rendered do_cosets(const Command& cmd) {
  RingElt t = elt(cmd, 0);
  CosetTable table = coset_table(t, cmd.bound ? static_cast<std::size_t>(*cmd.bound)
                                              : kDefaultCosetBound);
  Rendered r;
  json points = json::array(), reps = json::array();
  std::ostringstream text;
  text << "modulus " << fmt(table.modulus().generator()) << "\nsize " << table.size();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& [c, d] = table.points()[i];
    points.push_back(json::array({fmt(c), fmt(d)}));
    std::string word = table.reps()[i].to_string();
    reps.push_back(word);
    text << "\n" << i << " (" << fmt(c) << " : " << fmt(d) << ") S:" << table.action_S()[i]
         << " T:" << table.action_T()[i] << " rep " << (word.empty() ? "1" : word);
  }
  r.j = {{"schema", "hecke.cosets/1"},
         {"modulus", fmt(table.modulus().generator())},
         {"size", table.size()},
         {"points", points},
         {"action", {{"S", table.action_S()}, {"T", table.action_T()}}},
         {"reps", reps}};
  r.text = text.str();
  return r;
}

Rendered do_member(const Command& cmd) {
  GMatrix m = parse_matrix(cmd.args[0], cmd.args[1], cmd.args[2], cmd.args[3]);
  std::optional<Word> w = g5_decompose(m);
  Rendered r;
  r.j = {{"schema", "hecke.member/1"}, {"matrix", matrix_text(m)}, {"in_G5", w.has_value()}};
  r.text = std::string("G5 ") + (w ? "yes" : "no");
  if (w) {
    r.j["word"] = w->to_string();
    r.text += " word " + (w->empty() ? std::string("1") : w->to_string());
  }
  bool member = w.has_value();
  if (cmd.args.size() == 5) {
    RingElt t = elt(cmd, 4);
    bool g0 = g0_contains(m, t);
    r.j["modulus"] = fmt(Ideal(t).generator());
    r.j["in_G0"] = g0;
    r.text += "\nG0(" + fmt(Ideal(t).generator()) + ") " + (g0 ? "yes" : "no");
    if (!is_unit(t)) {
      bool principal = principal_contains(m, t);
      r.j["in_principal"] = principal;
      r.text += "\nG(" + fmt(Ideal(t).generator()) + ") " + (principal ? "yes" : "no");
    }
    member = g0;
  }
  if (!member) r.exit_code = kExitRefuted;
  return r;
}

Rendered do_normalizer(const Command& cmd) {
  RingElt t = elt(cmd, 0);
  NormalizerResult nr = normalizer_of(t);
  Rendered r;
  r.j = {{"schema", "hecke.normalizer/1"},
         {"modulus", fmt(nr.modulus.generator())},
         {"h", nr.h},
         {"quotient", std::string(quotient_name(nr.quotient))}};
  r.text = "modulus " + fmt(nr.modulus.generator()) + "\nh " + std::to_string(nr.h) +
           "\nquotient " + std::string(quotient_name(nr.quotient));
  if (cmd.args.size() == 5) {
    GMatrix m = parse_matrix(cmd.args[1], cmd.args[2], cmd.args[3], cmd.args[4]);
    bool yes = normalizes(m, t);
    std::uint64_t seed = cmd.seed.value_or(kDefaultSeed);
    SampledCheck sc = normalizes_sampled(m, t, kSampledConjugations, seed);
    if (yes && sc.refuted) {
      throw Error(ErrorCode::IntegrityError,
                  "sampled conjugation refutes a matrix in G0(t/h)");
    }
    r.j["normalizes"] = yes;
    r.j["sampled"] = {{"seed", seed}, {"checked", sc.checked}, {"refuted", sc.refuted}};
    r.text += std::string("\nnormalizes ") + (yes ? "yes" : "no") + "\nsampled " +
              std::to_string(sc.checked) + " conjugations, " +
              (sc.refuted ? "refuted" : "no refutation");
    if (!yes) r.exit_code = kExitRefuted;
  }
  return r;
}

Rendered do_explain(const Command& cmd) {
  ChainReport rep = supergroup_chain(elt(cmd, 0));
  Rendered r;
  std::ostringstream text;
  text << "input " << fmt(rep.input.generator()) << "\nhalf-power bound G0("
       << fmt(rep.half_power_bound.generator()) << ")";
  json steps = json::array();
  for (const ChainStep& st : rep.steps) {
    json nums = json::array(), gcds = json::array();
    text << "\n" << st.label << ": strip " << fmt(st.stripped) << ", nu " << fmt(st.nu)
         << ", n " << st.n;
    for (std::size_t i = 0; i < st.numerators.size(); ++i) {
      nums.push_back(fmt(st.numerators[i]));
      gcds.push_back(fmt(st.gcds[i]));
      text << "\n  u " << format_factored(st.numerators[i]) << "  gcd " << fmt(st.gcds[i]);
    }
    text << "\n  bound G0(" << fmt(st.bound.generator()) << "), running G0("
         << fmt(st.running.generator()) << ")";
    steps.push_back({{"label", st.label},
                     {"stripped", fmt(st.stripped)},
                     {"nu", fmt(st.nu)},
                     {"n", integer_text(st.n)},
                     {"numerators", nums},
                     {"gcds", gcds},
                     {"bound", fmt(st.bound.generator())},
                     {"running", fmt(st.running.generator())}});
  }
  text << "\nfinal G0(" << fmt(rep.final.generator()) << ") with h " << rep.h;
  r.j = {{"schema", "hecke.explain/1"},
         {"input", fmt(rep.input.generator())},
         {"half_power_bound", fmt(rep.half_power_bound.generator())},
         {"steps", steps},
         {"final", fmt(rep.final.generator())},
         {"h", rep.h}};
  r.text = text.str();
  return r;
}

json verdict_json(const ElementaryVerdict& v) {
  bool found = v.verdict == ElementaryOutcome::CounterexampleFound;
  json j = {{"r", fmt(v.r)},
            {"verdict", found ? "counterexample" : "none"},
            {"bound", v.bound},
            {"source", v.source}};
  if (v.witness) j["witness"] = {{"x", fmt(v.witness->first)}, {"y", fmt(v.witness->second)}};
  return j;
}

std::string verdict_text(const ElementaryVerdict& v) {
  if (v.verdict == ElementaryOutcome::NoCounterexampleUpTo) {
    return "r " + fmt(v.r) + ": no counterexample up to bound " + std::to_string(v.bound);
  }
  const auto& [x, y] = *v.witness;
  return "r " + fmt(v.r) + ": counterexample x " + fmt(x) + ", y " + fmt(y) + " (" +
         v.source + ")";
}

Rendered do_elementary(const Command& cmd) {
  RingElt x = elt(cmd, 0);
  long bound = cmd.bound.value_or(kDefaultElementaryBound);
  Rendered r;
  if (cmd.strong) {
    StrongVerdict sv = strongly_elementary(x, bound);
    json divs = json::array();
    for (const RingElt& d : sv.divisors) divs.push_back(fmt(d));
    r.j = {{"schema", "hecke.elementary/1"},
           {"r", fmt(x)},
           {"strong", true},
           {"holds", sv.holds},
           {"bound", bound},
           {"divisors", divs}};
    r.text = std::string("strongly elementary up to bound ") + std::to_string(bound) + ": " +
             (sv.holds ? "yes" : "no");
    if (sv.failure) {
      r.j["failure"] = verdict_json(*sv.failure);
      r.text += "\n" + verdict_text(*sv.failure);
    }
    if (!sv.holds) r.exit_code = kExitRefuted;
    return r;
  }
  ElementaryVerdict v = is_g5_elementary(x, bound);
  r.j = {{"schema", "hecke.elementary/1"}};
  json body = verdict_json(v);
  for (auto& [key, value] : body.items()) r.j[key] = value;
  r.text = verdict_text(v);
  if (v.verdict == ElementaryOutcome::CounterexampleFound) r.exit_code = kExitRefuted;
  return r;
}

Rendered do_quotient(const Command& cmd) {
  RingElt t = elt(cmd, 0);
  QuotientTable q = quotient_table(
      t, cmd.bound ? static_cast<std::size_t>(*cmd.bound) : kDefaultCosetBound);
  Rendered r;
  json reps = json::array(), profile = json::object();
  for (const Word& w : q.reps) reps.push_back(w.to_string());
  for (const auto& [order, count] : q.order_profile) profile[std::to_string(order)] = count;
  r.j = {{"schema", "hecke.quotient/1"},
         {"modulus", fmt(q.modulus.generator())},
         {"h", q.h},
         {"order", q.order()},
         {"type", std::string(quotient_name(q.type))},
         {"abelian", q.abelian},
         {"identity", q.identity},
         {"reps", reps},
         {"element_orders", q.element_orders},
         {"profile", profile},
         {"table", q.table}};
  std::ostringstream text;
  text << "modulus " << fmt(q.modulus.generator()) << "\norder " << q.order() << "\ntype "
       << quotient_name(q.type) << "\nprofile";
  for (const auto& [order, count] : q.order_profile) text << " " << order << ":" << count;
  for (std::size_t i = 0; i < q.order(); ++i) {
    text << "\n" << i << " [" << (q.reps[i].empty() ? "1" : q.reps[i].to_string()) << "]";
    for (std::uint32_t v : q.table[i]) text << " " << v;
  }
  r.text = text.str();
  return r;
}

Rendered do_selftest(const Command& cmd) {
  SelftestOptions opts;
  opts.only = cmd.only;
  if (cmd.inject == "tie-lower") opts.tie = TieRule::LowerClosed;
  if (cmd.inject == "tie-floor") opts.tie = TieRule::Floor;
  SelftestReport rep = run_selftest(opts);
  Rendered r;
  json checks = json::array();
  std::ostringstream text;
  for (const SelftestLine& l : rep.lines) {
    checks.push_back(
        {{"item", l.item}, {"label", l.label}, {"pass", l.pass}, {"detail", l.detail}});
    text << (l.pass ? "PASS " : "FAIL ") << l.item << " | " << l.label << " | " << l.detail
         << "\n";
  }
  text << rep.lines.size() << " checks, " << rep.failures() << " failed";
  r.j = {{"schema", "hecke.selftest/1"},
         {"passed", rep.all_pass()},
         {"failures", rep.failures()},
         {"checks", checks}};
  r.text = text.str();
  if (!rep.all_pass()) r.exit_code = kExitError;
  return r;
}

Rendered dispatch(const Command& cmd) {
  switch (cmd.verb) {
    case Verb::Factor: return do_factor(cmd);
    case Verb::Reduce: return do_reduce(cmd);
    case Verb::Index: return do_index(cmd);
    case Verb::Cosets: return do_cosets(cmd);
    case Verb::Member: return do_member(cmd);
    case Verb::Normalizer: return do_normalizer(cmd);
    case Verb::Explain: return do_explain(cmd);
    case Verb::Elementary: return do_elementary(cmd);
    case Verb::Quotient: return do_quotient(cmd);
    case Verb::Selftest: return do_selftest(cmd);
  }
  throw Error(ErrorCode::SyntaxError, "unknown verb");
}

Outcome render_error(const Error& e, bool as_json) {
  if (as_json) {
    json j = {{"schema", "hecke.error/1"},
              {"code", std::string(error_code_name(e.code()))},
              {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["position"] = pe->position();
    return {kExitError, j.dump(), true};
  }
  return {kExitError, "error [" + std::string(error_code_name(e.code())) + "] " + e.what(), true};
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int worse(int a, int b) {
  auto rank = [](int c) { return c == kExitError ? 2 : c == kExitRefuted ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace

Outcome run(const Command& cmd) {
  try {
    Rendered r = dispatch(cmd);
    return {r.exit_code, cmd.json ? r.j.dump() : r.text};
  } catch (const Error& e) {
    return render_error(e, cmd.json);
  }
}

Outcome run_batch(std::istream& in, bool json_mode) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  std::vector<Outcome> results(lines.size());
  const auto n = static_cast<long>(lines.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    Outcome o;
    try {
      Command cmd = parse_command(split_line(lines[ui]));
      cmd.json = cmd.json || json_mode;
      o = run(cmd);
    } catch (const Error& e) {
      o = render_error(e, json_mode);
    } catch (const HelpRequested&) {
      o = render_error(Error(ErrorCode::SyntaxError, "help is not available in batch mode"),
                       json_mode);
    }
    // one result per line
    for (char& ch : o.output) {
      if (ch == '\n') ch = ';';
    }
    results[ui] = std::move(o);
  }
  Outcome all;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i > 0) all.output += '\n';
    all.output += results[i].output;
    all.exit_code = worse(all.exit_code, results[i].exit_code);
  }
  return all;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> tokens(argv + 1, argv + argc);

  // --batch <file> replaces the verb
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] != "--batch") continue;
    if (i + 1 >= tokens.size()) {
      err << "error [SyntaxError] --batch needs a file\n";
      return kExitError;
    }
    std::string path = tokens[i + 1];
    bool json_mode = false;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
      if (k == i || k == i + 1) continue;
      if (tokens[k] == "--json") {
        json_mode = true;
      } else {
        err << "error [SyntaxError] unexpected argument with --batch: " << tokens[k] << "\n";
        return kExitError;
      }
    }
    std::ifstream file(path);
    if (!file) {
      err << "error [SyntaxError] cannot open " << path << "\n";
      return kExitError;
    }
    Outcome o = run_batch(file, json_mode);
    if (!o.output.empty()) out << o.output << "\n";
    return o.exit_code;
  }

  bool json_mode = false;
  for (const std::string& t : tokens) json_mode = json_mode || t == "--json";
  Command cmd;
  try {
    cmd = parse_command(tokens);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kExitOk;
  } catch (const Error& e) {
    Outcome o = render_error(e, json_mode);
    (json_mode ? out : err) << o.output << "\n";
    return o.exit_code;
  }
  Outcome o = run(cmd);
  (o.is_error && !cmd.json ? err : out) << o.output << "\n";
  return o.exit_code;
}

}  // namespace hecke::cli
