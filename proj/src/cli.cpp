#include "waldkit/cli.hpp"

#include "waldkit/decomposition.hpp"
#include "waldkit/error.hpp"
#include "waldkit/families.hpp"
#include "waldkit/powers.hpp"
#include "waldkit/text_format.hpp"
#include "waldkit/waldschmidt.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

namespace waldkit {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::vector<std::string> input;
  bool json = false;
  std::optional<std::size_t> cap;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> r;
  std::string window = "6,4";
  std::string suite = "all";
};

struct Limits {
  std::size_t primes = kDefaultMaxPrimes;
  std::size_t generators = kDefaultMaxGenerators;
};

struct Input {
  std::string descriptor;
  SquarefreeIdeal ideal;
  std::optional<FamilyInstance> family;
};

class UsageError : public Error {
public:
  using Error::Error;
};

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text.front() == '-') {
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

Limits resolve_limits(const Options& opts) {
  Limits limits;
  if (const char* env = std::getenv("WALDKIT_CAP"); env && *env) {
    limits.primes = limits.generators = parse_count(env, "WALDKIT_CAP");
  }
  if (opts.cap) limits.primes = limits.generators = *opts.cap;
  return limits;
}

Input resolve_input(const std::vector<std::string>& words) {
  if (words.empty()) throw UsageError("missing input: give an ideal file or 'family <name> <params>'");
  if (words.front() == "family") {
    std::vector<std::string> spec(words.begin() + 1, words.end());
    auto instance = family_from_spec(spec);
    std::string descriptor = "family " + instance.name;
    auto ideal = instance.ideal;
    return {descriptor, std::move(ideal), std::move(instance)};
  }
  if (words.size() != 1) throw UsageError("expected a single ideal file, got " + std::to_string(words.size()) + " words");
  std::ifstream in(words.front());
  if (!in) throw UsageError("cannot open '" + words.front() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  SquarefreeIdeal ideal(parse_ideal(buffer.str()));
  return {words.front(), std::move(ideal), std::nullopt};
}

std::string exact(const BigRational& q) { return q.to_string(); }

std::string shown(const BigRational& q) { return q.to_string() + " (" + q.to_decimal() + ")"; }

Json exact_or_null(const std::optional<BigRational>& q) { return q ? Json(exact(*q)) : Json(nullptr); }

Json rational_array(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(exact(q));
  return a;
}

struct Session {
  Options opts;
  Limits limits;
  Input input;
  Decomposition decomposition;
  WaldschmidtReport report;
  Json results = Json::array();
  std::vector<std::string> lines;
  int code = kExitOk;

  Json header() const {
    Json j;
    j["input"] = input.descriptor;
    Json primes = Json::array();
    for (const auto& p : decomposition.primes()) {
      Json names = Json::array();
      for (auto v : p.variables()) names.push_back(decomposition.context()->name(v));
      primes.push_back(std::move(names));
    }
    j["primes"] = std::move(primes);
    j["big_height"] = report.big_height;
    j["alpha"] = report.alpha;
    j["alpha_hat"] = exact(report.alpha_hat);
    j["chi_star"] = exact_or_null(report.chi_star);
    j["chudnovsky_bound"] = exact(report.chudnovsky_bound);
    j["results"] = results;
    return j;
  }

  void print(std::ostream& out) const {
    if (opts.json) {
      out << header().dump(2) << '\n';
      return;
    }
    out << "input: " << input.descriptor << '\n';
    out << "primes: " << decomposition.size() << " (big height " << report.big_height << ")\n";
    out << "alpha: " << report.alpha << '\n';
    out << "alpha_hat: " << shown(report.alpha_hat) << '\n';
    out << "chi_star: " << (report.chi_star ? shown(*report.chi_star) : "none") << '\n';
    out << "chudnovsky_bound: " << shown(report.chudnovsky_bound) << '\n';
    for (const auto& line : lines) out << line << '\n';
  }
};

Session open_session(const Options& opts) {
  const auto limits = resolve_limits(opts);
  auto input = resolve_input(opts.input);
  auto d = minimal_primes(input.ideal, limits.primes);
  auto report = waldschmidt_report(d);
  return Session{opts, limits, std::move(input), std::move(d), std::move(report), Json::array(), {}, kExitOk};
}

void cmd_alpha_hat(Session& s) {
  Json w;
  w["kind"] = "witness";
  w["primal"] = rational_array(s.report.primal_witness);
  w["dual"] = rational_array(s.report.dual_witness);
  w["lcm_denominator"] = s.report.lcm_denominator.get_str();
  s.results.push_back(std::move(w));
  std::string primal;
  for (std::size_t i = 0; i < s.report.primal_witness.size(); ++i) {
    primal += (i ? " " : "") + s.decomposition.context()->name(i) + "=" + exact(s.report.primal_witness[i]);
  }
  s.lines.push_back("primal witness: " + primal);
  s.lines.push_back("lcm of denominators: " + s.report.lcm_denominator.get_str());
  if (s.input.family && s.input.family->expected_alpha_hat) {
    s.lines.push_back("expected alpha_hat: " + exact(*s.input.family->expected_alpha_hat));
  }
}

void cmd_chi_star(Session& s) {
  Json j;
  j["kind"] = "chi_star";
  j["value"] = exact_or_null(s.report.chi_star);
  if (!s.report.chi_star) {
    j["note"] = s.input.ideal.has_nontrivial_edge() ? "unbounded: some generator is a single variable"
                                                    : "not applicable: every generator is a single variable";
    s.lines.push_back("note: " + j["note"].get<std::string>());
  }
  s.results.push_back(std::move(j));
}

void cmd_decompose(Session& s) {
  const auto& ctx = *s.decomposition.context();
  Json j;
  j["kind"] = "independent_sets";
  Json sets = Json::array();
  for (const auto& set : maximal_independent_sets(s.decomposition)) {
    Json names = Json::array();
    for (auto v : set) names.push_back(ctx.name(v));
    sets.push_back(std::move(names));
  }
  j["maximal_independent_sets"] = std::move(sets);
  s.results.push_back(std::move(j));
  for (const auto& p : s.decomposition.primes()) s.lines.push_back("prime: " + p.to_string());
}

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag) {
  if (!v || *v == 0) throw UsageError(std::string(flag) + " is required and must be at least 1");
  return *v;
}

void cmd_alpha_symbolic(Session& s) {
  const auto m = need(s.opts.m, "--m");
  const auto value = alpha_symbolic(s.decomposition, m);
  const BigRational ratio = BigRational(value) / BigRational(m);
  Json j;
  j["kind"] = "alpha_symbolic";
  j["m"] = m;
  j["value"] = value;
  j["ratio"] = exact(ratio);
  s.results.push_back(std::move(j));
  s.lines.push_back("alpha(I^(" + std::to_string(m) + ")): " + std::to_string(value));
  s.lines.push_back("ratio: " + shown(ratio));
}

Json containment_json(const ContainmentResult& c) {
  Json j;
  j["kind"] = "containment";
  j["m"] = c.m;
  j["r"] = c.r;
  j["contained"] = c.contained;
  j["witness"] = c.witness ? Json(c.witness->to_string()) : Json(nullptr);
  j["ratio"] = exact(c.ratio);
  return j;
}

void cmd_containment(Session& s) {
  const auto m = need(s.opts.m, "--m");
  const auto r = need(s.opts.r, "--r");
  const auto c = check_containment(s.decomposition, s.input.ideal.ideal(), m, r, s.limits.generators);
  s.results.push_back(containment_json(c));
  const auto label = "I^(" + std::to_string(m) + ") in I^" + std::to_string(r) + ": ";
  s.lines.push_back(label + (c.contained ? "CONTAINED" : "NOT CONTAINED, witness " + c.witness->to_string()));
}

std::pair<std::uint64_t, std::uint64_t> parse_window(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--window expects M,R");
  const auto m = parse_count(text.substr(0, comma), "window M");
  const auto r = parse_count(text.substr(comma + 1), "window R");
  if (m == 0 || r == 0) throw UsageError("--window bounds must be at least 1");
  return {m, r};
}

Json resurgence_json(const ResurgenceEstimate& est, const std::optional<BigRational>& expected) {
  Json j;
  j["kind"] = "resurgence_scan";
  j["window"] = {est.window_m, est.window_r};
  j["lower_bound"] = exact(est.lower_bound);
  j["certified_lower_bound"] = exact(est.certified_lower_bound);
  j["alpha_ratio"] = exact(est.alpha_ratio);
  j["omega_ratio"] = exact(est.omega_ratio);
  j["expected_resurgence"] = exact_or_null(expected);
  Json cells = Json::array();
  for (const auto& c : est.non_containments) {
    cells.push_back({{"m", c.m}, {"r", c.r}, {"ratio", exact(c.ratio)}, {"witness", c.witness->to_string()}});
  }
  j["non_containments"] = std::move(cells);
  Json skipped = Json::array();
  for (const auto& [m, r] : est.skipped) skipped.push_back({m, r});
  j["skipped"] = std::move(skipped);
  return j;
}

std::optional<BigRational> expected_resurgence(const Session& s) {
  return s.input.family ? s.input.family->expected_resurgence : std::nullopt;
}

void cmd_resurgence_scan(Session& s) {
  const auto [wm, wr] = parse_window(s.opts.window);
  const auto est = resurgence_search(s.decomposition, s.input.ideal.ideal(), wm, wr, s.limits.generators);
  s.results.push_back(resurgence_json(est, expected_resurgence(s)));
  for (const auto& c : est.non_containments) {
    s.lines.push_back("not contained: I^(" + std::to_string(c.m) + ") in I^" + std::to_string(c.r) + ", witness " +
                      c.witness->to_string());
  }
  for (const auto& [m, r] : est.skipped) {
    s.lines.push_back("skipped (cap): m=" + std::to_string(m) + " r=" + std::to_string(r));
  }
  s.lines.push_back("window lower bound: " + shown(est.lower_bound));
  s.lines.push_back("alpha/alpha_hat: " + shown(est.alpha_ratio));
  s.lines.push_back("omega/alpha_hat: " + shown(est.omega_ratio));
  s.lines.push_back("certified lower bound: " + shown(est.certified_lower_bound));
  if (auto rho = expected_resurgence(s)) s.lines.push_back("expected resurgence: " + shown(*rho));
}

struct Check {
  std::string suite;
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

void run_chromatic(const Session& s, std::vector<Check>& out) {
  if (!s.input.ideal.has_nontrivial_edge()) {
    out.push_back({"chromatic", "alpha_hat = chi*/(chi*-1)", true, true, "every generator is a single variable"});
    return;
  }
  const auto c = check_chromatic_identity(s.input.ideal);
  const auto chi = c.chi_star ? exact(*c.chi_star) : std::string("unbounded");
  out.push_back({"chromatic", "alpha_hat = chi*/(chi*-1)", c.equal, false,
                 exact(c.lhs) + " vs " + exact(c.rhs) + ", chi* = " + chi});
}

void run_chudnovsky(const Session& s, std::vector<Check>& out) {
  const auto c = chudnovsky_check(s.decomposition, s.report.alpha_hat);
  out.push_back({"chudnovsky", "alpha_hat >= (alpha+e-1)/e", c.holds, false,
                 exact(c.alpha_hat) + " >= " + exact(c.bound) + (c.tight ? ", tight" : ", not tight")});
}

void run_graph(const Session& s, std::vector<Check>& out) {
  const auto& gens = s.input.ideal.generators();
  if (!std::all_of(gens.begin(), gens.end(), [](const Monomial& g) { return g.degree() == 2; })) {
    out.push_back({"graph", "chi/(chi-1) <= alpha_hat <= omega/(omega-1)", true, true, "not the edge ideal of a graph"});
    return;
  }
  const auto b = graph_bounds(s.input.ideal);
  out.push_back({"graph", "chi/(chi-1) <= alpha_hat <= omega/(omega-1)", b.sandwich_holds, false,
                 exact(b.lower) + " <= " + exact(b.alpha_hat) + " <= " + exact(b.upper) + " (chi " +
                     std::to_string(b.chi) + ", omega " + std::to_string(b.omega) + ")"});
  out.push_back({"graph", "chi/(chi-1) >= (e+1)/e", b.improved_bound_holds, false,
                 exact(b.lower) + " >= " + exact(BigRational(b.big_height + 1) / BigRational(b.big_height))});
}

// Splits the generators into two groups on disjoint variables, if possible.
std::optional<std::pair<SquarefreeIdeal, SquarefreeIdeal>> split(const SquarefreeIdeal& ideal) {
  const auto n = ideal.variable_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (const auto& g : ideal.generators()) {
    const auto support = g.support();
    for (auto v : support) parent[find(v)] = find(support.front());
  }
  const auto root = find(ideal.generators().front().support().front());
  std::vector<Monomial> first;
  std::vector<Monomial> rest;
  for (const auto& g : ideal.generators()) (find(g.support().front()) == root ? first : rest).push_back(g);
  if (rest.empty()) return std::nullopt;
  return std::make_pair(SquarefreeIdeal::make(ideal.context(), std::move(first)),
                        SquarefreeIdeal::make(ideal.context(), std::move(rest)));
}

void run_binomial(const Session& s, std::vector<Check>& out) {
  const auto parts = split(s.input.ideal);
  const std::string name = "(I1+I2)^(m) = sum I1^(m-j) I2^(j)";
  if (!parts) {
    out.push_back({"binomial", name, true, true, "ideal does not split over disjoint variables"});
    return;
  }
  const auto top = s.opts.m.value_or(2);
  for (std::uint64_t m = 1; m <= top; ++m) {
    const auto c = symbolic_binomial_check(parts->first, parts->second, m, s.limits.generators);
    out.push_back({"binomial", name + ", m=" + std::to_string(m), c.equal, false,
                   std::to_string(c.lhs.size()) + " vs " + std::to_string(c.rhs.size()) + " generators"});
  }
}

void run_alpha_ratio(const Session& s, std::vector<Check>& out) {
  const auto [wm, wr] = parse_window(s.opts.window);
  const auto est = resurgence_search(s.decomposition, s.input.ideal.ideal(), wm, wr, s.limits.generators);
  out.push_back({"alpha-ratio", "1 <= alpha/alpha_hat", est.alpha_ratio >= BigRational(1), false,
                 "alpha/alpha_hat = " + exact(est.alpha_ratio) + ", window lower bound " + exact(est.lower_bound) +
                     ", certified lower bound " + exact(est.certified_lower_bound)});
  if (const auto rho = expected_resurgence(s)) {
    out.push_back({"alpha-ratio", "alpha/alpha_hat <= rho", est.alpha_ratio <= *rho, false,
                   exact(est.alpha_ratio) + " <= " + exact(*rho)});
    out.push_back({"alpha-ratio", "window lower bound <= rho", est.lower_bound <= *rho, false,
                   exact(est.lower_bound) + " <= " + exact(*rho) + " over window " + s.opts.window});
  }
}

void run_golden(const Session& s, std::vector<Check>& out) {
  if (!s.input.family || !s.input.family->expected_alpha_hat) {
    out.push_back({"golden", "alpha_hat matches the closed form", true, true, "no closed form for this input"});
    return;
  }
  const auto& expected = *s.input.family->expected_alpha_hat;
  out.push_back({"golden", "alpha_hat matches the closed form", s.report.alpha_hat == expected, false,
                 exact(s.report.alpha_hat) + " vs " + exact(expected)});
}

using SuiteRunner = void (*)(const Session&, std::vector<Check>&);

const std::vector<std::pair<std::string, SuiteRunner>>& suites() {
  static const std::vector<std::pair<std::string, SuiteRunner>> table = {
      {"chromatic", run_chromatic}, {"chudnovsky", run_chudnovsky}, {"graph", run_graph},
      {"binomial", run_binomial},   {"alpha-ratio", run_alpha_ratio}, {"golden", run_golden},
  };
  return table;
}

void cmd_verify(Session& s) {
  auto suite = s.opts.suite;
  if (suite == "thm46") suite = "chromatic";
  std::vector<Check> checks;
  bool known = suite == "all";
  for (const auto& [name, runner] : suites()) {
    if (suite == "all" || suite == name) {
      known = true;
      runner(s, checks);
    }
  }
  if (!known) throw UsageError("unknown suite '" + s.opts.suite + "'");
  for (const auto& c : checks) {
    Json j;
    j["kind"] = "check";
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["status"] = c.skipped ? "skip" : c.pass ? "pass" : "fail";
    j["detail"] = c.detail;
    s.results.push_back(std::move(j));
    s.lines.push_back(std::string(c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") + " [" + c.suite + "] " + c.name +
                      ": " + c.detail);
    if (!c.pass) s.code = kExitViolation;
  }
}

int cmd_family(const Options& opts, std::ostream& out) {
  if (opts.input.empty()) throw UsageError("family expects 'list' or 'emit <name> <params>'");
  if (opts.input.front() == "list") {
    Json list = Json::array();
    for (const auto& f : family_names()) {
      if (opts.json) {
        list.push_back({{"name", f.name}, {"parameters", f.parameters}, {"description", f.description}});
      } else {
        out << f.name << ' ' << f.parameters << "  " << f.description << '\n';
      }
    }
    if (opts.json) out << list.dump(2) << '\n';
    return kExitOk;
  }
  if (opts.input.front() != "emit") throw UsageError("family expects 'list' or 'emit <name> <params>'");
  const auto instance = family_from_spec({opts.input.begin() + 1, opts.input.end()});
  if (!opts.json) {
    out << "# " << instance.name << ": " << instance.provenance << '\n' << format_ideal(instance.ideal.ideal());
    return kExitOk;
  }
  Json j;
  j["name"] = instance.name;
  j["vars"] = instance.ideal.context()->names();
  Json gens = Json::array();
  for (const auto& g : instance.ideal.generators()) gens.push_back(g.to_string());
  j["generators"] = std::move(gens);
  j["expected_alpha_hat"] = exact_or_null(instance.expected_alpha_hat);
  j["expected_resurgence"] = exact_or_null(instance.expected_resurgence);
  j["provenance"] = instance.provenance;
  out << j.dump(2) << '\n';
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Waldschmidt constants and symbolic powers of squarefree monomial ideals", "waldkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_flag("--json", opts.json, "Machine-readable output with exact rationals");
  app.add_option("--cap", opts.cap, "Cap on primes and intermediate generators");

  using Verb = void (*)(Session&);
  const std::vector<std::tuple<std::string, std::string, Verb>> verbs = {
      {"alpha-hat", "Waldschmidt constant from the covering program", cmd_alpha_hat},
      {"chi-star", "Fractional chromatic number of the hypergraph", cmd_chi_star},
      {"decompose", "Minimal primes and maximal independent sets", cmd_decompose},
      {"alpha-symbolic", "Initial degree of the m-th symbolic power", cmd_alpha_symbolic},
      {"containment", "Decide I^(m) in I^r", cmd_containment},
      {"resurgence-scan", "Search a window of (m, r) for non-containments", cmd_resurgence_scan},
      {"verify", "Run identity suites", cmd_verify},
  };
  std::vector<std::pair<CLI::App*, Verb>> handlers;
  for (const auto& [name, description, verb] : verbs) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("input", opts.input, "Ideal file, or: family <name> <params>")->required();
    if (name == "alpha-symbolic" || name == "containment" || name == "verify") {
      sub->add_option("--m", opts.m, "Symbolic power exponent");
    }
    if (name == "containment") sub->add_option("--r", opts.r, "Ordinary power exponent");
    if (name == "resurgence-scan" || name == "verify") sub->add_option("--window", opts.window, "Window M,R");
    if (name == "verify") {
      sub->add_option("--suite", opts.suite,
                      "thm46 | chromatic | chudnovsky | graph | binomial | alpha-ratio | golden | all");
    }
    handlers.emplace_back(sub, verb);
  }
  auto* family = app.add_subcommand("family", "List families or emit one as an ideal file");
  family->add_option("words", opts.input, "list | emit <name> <params>")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (family->parsed()) return cmd_family(opts, out);
    for (const auto& [sub, verb] : handlers) {
      if (!sub->parsed()) continue;
      auto session = open_session(opts);
      verb(session);
      session.print(out);
      return session.code;
    }
    return kExitUsage;
  } catch (const CapExceededError& e) {
    err << "waldkit: " << e.what() << '\n';
    return kExitCap;
  } catch (const ParseError& e) {
    err << "waldkit: parse error at " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "waldkit: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace waldkit
