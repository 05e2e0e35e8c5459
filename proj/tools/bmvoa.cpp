// Command-line front end: each subcommand runs one group of checks and
// prints a text summary or a JSON report. Exit codes: 0 pass, 1 failure,
// 2 inconclusive, 3 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "bmvoa/code/code_io.hpp"
#include "bmvoa/code/codes.hpp"
#include "bmvoa/fock/fock.hpp"
#include "bmvoa/framed/pipeline.hpp"
#include "bmvoa/fusion/fusion.hpp"
#include "bmvoa/fusion/ring.hpp"
#include "bmvoa/qseries/characters.hpp"
#include "bmvoa/qseries/modular.hpp"

using nlohmann::ordered_json;
using namespace bmvoa;

namespace {

constexpr int kUsageError = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  long order = 200;
  double tol = 1e-6;
  std::vector<std::string> taus;
  std::string format = "text";
  std::string pair = "moonshine";
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

int exit_code(Status s) {
  switch (s) {
    case Status::pass:
      return 0;
    case Status::fail:
      return 1;
    case Status::inconclusive:
      return 2;
  }
  return 1;
}

// Accepts "a+bi", "a-bi", "bi", "i" and "-i".
qs::Complex parse_tau(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ') t += c;
  }
  if (t.empty() || t.back() != 'i') throw UsageError("--tau: expected a+bi, got '" + text + "'");
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  try {
    std::size_t used = 0;
    const double b = std::stod(im, &used);
    if (used != im.size()) throw UsageError("--tau: bad imaginary part in '" + text + "'");
    double a = 0;
    if (!re.empty()) {
      a = std::stod(re, &used);
      if (used != re.size()) throw UsageError("--tau: bad real part in '" + text + "'");
    }
    if (!(b > 0)) throw UsageError("--tau: Im(tau) must be positive in '" + text + "'");
    return {a, b};
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const UsageError*>(&e) != nullptr) throw;
    throw UsageError("--tau: cannot parse '" + text + "'");
  }
}

std::vector<qs::Complex> taus_of(const RunConfig& cfg) {
  if (cfg.taus.empty()) return framed::VerifyAllOptions{}.taus;
  std::vector<qs::Complex> out;
  for (const auto& t : cfg.taus) out.push_back(parse_tau(t));
  return out;
}

void validate(const RunConfig& cfg) {
  if (cfg.order < 2) throw UsageError("--order must be at least 2");
  if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
  if (cfg.format != "text" && cfg.format != "json") throw UsageError("--format must be text or json");
  for (const auto& t : cfg.taus) parse_tau(t);
}

code::CodePair load_pair(const std::string& arg) {
  if (arg == "moonshine") return code::moonshine_pair();
  if (arg == "baby") return code::baby_pair();
  if (arg.rfind("file:", 0) == 0) {
    const auto comma = arg.find(",file:");
    if (comma == std::string::npos) throw UsageError("--pair: expected file:D,file:S");
    const std::string d_path = arg.substr(5, comma - 5);
    const std::string s_path = arg.substr(comma + 6);
    try {
      code::CodePair p{code::load_code_file(d_path), code::load_code_file(s_path)};
      if (p.d.length() != p.s.length()) throw UsageError("--pair: D and S have different lengths");
      return p;
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(std::string("--pair: ") + e.what());
    }
  }
  throw UsageError("--pair: unknown pair '" + arg + "' (moonshine, baby or file:D,file:S)");
}

void emit(const RunConfig& cfg, const ordered_json& report, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Random codes with the dual-of-dual and dimension identities checked.
ordered_json random_code_checks(std::uint64_t seed, int count, bool& ok) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (int k = 0; k < count; ++k) {
    const std::size_t n = 1 + rng() % 24;
    const std::size_t gens = rng() % (n + 1);
    std::vector<code::BitWord> g;
    for (std::size_t i = 0; i < gens; ++i) {
      code::BitWord w(n);
      for (std::size_t j = 0; j < n; ++j) {
        if (rng() & 1U) w.set(j);
      }
      g.push_back(std::move(w));
    }
    const auto c = code::LinearCode::span(n, g);
    const auto d = c.dual();
    if (!(d.dual() == c) || c.dim() + d.dim() != n || !c.orthogonal_to(d)) ++failures;
  }
  ok = failures == 0;
  return {{"seed", seed}, {"codes", count}, {"failures", failures}};
}

int run_codes(const RunConfig& cfg, int random_checks) {
  ordered_json report;
  std::string text;
  auto add = [&](const std::string& key, const std::string& label, const code::LinearCode& c) {
    report[key] = framed::code_summary(label, c);
    text += label + ": length " + std::to_string(c.length()) + ", dim " + std::to_string(c.dim()) +
            ", even " + yes_no(c.is_even()) + ", doubly even " + yes_no(c.is_doubly_even()) + ", self-dual " +
            yes_no(c.is_self_dual()) + "\n";
  };
  bool ok = true;
  if (cfg.pair.rfind("file:", 0) == 0) {
    const auto p = load_pair(cfg.pair);
    add("d", "D", p.d);
    add("s", "S", p.s);
  } else {
    const auto h8 = code::hamming_h8();
    const auto moon = code::moonshine_pair();
    const auto baby = code::baby_pair();
    add("h8", "H8", h8);
    add("rm41", "RM(4,1)", code::rm41());
    add("s_natural", "S_natural", moon.s);
    add("d_natural", "D_natural", moon.d);
    add("s_flat", "S_flat", baby.s);
    add("d_flat0", "D_flat0", baby.d);
    ok = h8.dim() == 4 && h8.is_doubly_even() && h8.is_self_dual() && moon.s.dim() == 7 && moon.d.dim() == 41 &&
         baby.d.dim() == 40 && baby.s.dim() == 6;
  }
  if (random_checks > 0) {
    bool rok = false;
    report["random_checks"] = random_code_checks(cfg.seed, random_checks, rok);
    text += "random dual-of-dual checks (seed " + std::to_string(cfg.seed) + "): " + (rok ? "pass" : "fail") + "\n";
    ok = ok && rok;
  }
  report["status"] = name(status_of(ok));
  emit(cfg, report, text);
  return exit_code(status_of(ok));
}

int run_hypothesis(const RunConfig& cfg) {
  const auto pair = load_pair(cfg.pair);
  auto h = framed::hypothesis_report(pair, cfg.threads);
  h.report["pair"] = cfg.pair;
  const auto& c1 = h.report["condition1"];
  std::string text = "pair " + cfg.pair + "\n";
  text += "condition (1): " + std::string(h.condition1 ? "pass" : "fail") + " (" + c1["covered"].dump() + " of " +
          c1["alphas"].dump() + " words covered";
  if (c1.contains("first_failure")) text += ", first uncovered " + c1["first_failure"].get<std::string>();
  text += ")\n";
  text += "condition (3): " + std::string(h.condition3 ? "pass" : "fail");
  if (h.report["condition3"].contains("error")) text += " (" + h.report["condition3"]["error"].get<std::string>() + ")";
  text += "\n";
  emit(cfg, h.report, text);
  return exit_code(status_of(h.passed()));
}

std::string table_text(const fusion::FusionRing& ring) {
  std::string text;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    for (std::size_t j = i; j < ring.size(); ++j) {
      text += fusion::to_string(ring.labels()[i]) + " x " + fusion::to_string(ring.labels()[j]) + " = " +
              ring.product(i, j).to_string() + "\n";
    }
  }
  return text;
}

int run_fusion(const RunConfig& cfg, const std::string& ring_name) {
  ordered_json report;
  std::string text;
  bool ok = true;
  if (ring_name == "ising") {
    const auto ring = fusion::FusionRing::closure(
        std::vector<fusion::ModuleLabel>(std::begin(fusion::kIsingLabels), std::end(fusion::kIsingLabels)));
    report = ring.to_json();
    text = table_text(ring);
    ok = ring.is_commutative() && ring.is_associative();
  } else if (ring_name == "h8") {
    const auto h8p = fusion::hamming_code_ptr();
    std::vector<fusion::ModuleLabel> gens{fusion::HammingTwistedLabel::make(code::BitWord(8))};
    for (std::size_t i = 0; i < 8; ++i) gens.push_back(fusion::CosetLabel::make(h8p, code::BitWord::unit(8, i)));
    const auto ring = fusion::FusionRing::closure(gens);
    report = ring.to_json();
    auto currents = ordered_json::array();
    for (const auto& l : ring.labels()) {
      const auto sc = fusion::is_simple_current(l, ring);
      ordered_json c{{"label", fusion::to_string(l)}, {"simple_current", sc.simple}};
      if (sc.witness) c["witness"] = fusion::to_string(*sc.witness);
      ok = ok && sc.simple;
      text += fusion::to_string(l) + (sc.simple ? " simple current, witness " + fusion::to_string(*sc.witness)
                                                : std::string(" not a simple current")) +
              "\n";
      currents.push_back(std::move(c));
    }
    report["simple_currents"] = std::move(currents);
    ok = ok && ring.is_commutative() && ring.is_associative();
  } else {
    const auto ring = framed::vb_fusion_ring();
    const auto cert = framed::ring_isomorphism_to_ising();
    report = ring.to_json();
    report["isomorphism_to_ising"] = cert.to_json();
    for (const auto& c : cert.comparisons) {
      text += c.product + " = " + c.vb_result + "    (Ising: " + c.ising_result + ")\n";
    }
    ok = ring.is_commutative() && ring.is_associative() && ring.vb0_is_unit() && cert.passed();
  }
  report["status"] = name(status_of(ok));
  emit(cfg, report, text);
  return exit_code(status_of(ok));
}

int run_chars(const RunConfig& cfg, bool sign_flipped) {
  const auto taus = taus_of(cfg);
  const auto conv = sign_flipped ? qs::SixteenthConvention::sign_flipped : qs::SixteenthConvention::corrected;
  ordered_json report;
  report["order"] = cfg.order;
  const auto ising = framed::ising_triple(cfg.order, conv);
  report["ising"] = {{"h0", ising[0].to_json()}, {"h1/2", ising[1].to_json()}, {"h1/16", ising[2].to_json()}};
  report["j"] = qs::j_series(cfg.order).to_json();
  report["t2a"] = qs::t2a_series(cfg.order).to_json();
  std::string text = "j    = " + qs::j_series(cfg.order).to_string(4) + "\n";
  text += "T_2A = " + qs::t2a_series(cfg.order).to_string(4) + "\n";
  Status status = Status::pass;
  try {
    const auto t = qs::solve_baby_characters(cfg.order, {.convention = conv});
    report["baby"] = {{"b0", t.b0.to_json()}, {"b1", t.b1.to_json()}, {"bT", t.bT.to_json()}};
    text += "b0   = " + t.b0.to_string(4) + "\n";
    text += "b1   = " + t.b1.to_string(4) + "\n";
    text += "bT   = " + t.bT.to_string(4) + "\n";
    const auto dp = framed::dual_pair_verification(t, cfg.order, taus, cfg.tol, conv);
    report["modular"] = dp.to_json();
    status = dp.status();
    char buf[160];
    std::snprintf(buf, sizeof buf, "S-transform: Ising %s (max residual %.3g), baby %s (max residual %.3g)\n",
                  std::string(name(dp.ising.status)).c_str(), dp.ising.max_residual(),
                  std::string(name(dp.baby.status)).c_str(), dp.baby.max_residual());
    text += buf;
  } catch (const qs::DerivationInconsistency& e) {
    report["error"] = e.what();
    text += std::string("derivation inconsistency: ") + e.what() + "\n";
    status = Status::fail;
  }
  report["status"] = name(status);
  emit(cfg, report, text);
  return exit_code(status);
}

int run_fock(const RunConfig& cfg, long max_weight) {
  if (max_weight < 0) throw UsageError("--max-weight must be nonnegative");
  ordered_json report;
  std::string text;
  bool ok = true;
  for (auto s : {fock::Sector::ns, fock::Sector::ramond}) {
    const auto r = fock::fock_report(s, Rational(max_weight));
    report[std::string(fock::name(s))] = r.to_json();
    ok = ok && r.passed();
    text += std::string(fock::name(s)) + " dims:";
    for (const auto& d : r.weights) text += " " + std::to_string(d.dim);
    text += r.passed() ? "  (checks pass)\n" : "  (checks FAIL)\n";
  }
  const auto cmp = framed::compare_fock_with_characters(Rational(max_weight));
  report["character_comparison"] = {{"weights_compared", cmp.weights_compared}, {"mismatches", cmp.mismatches}};
  ok = ok && cmp.passed();
  text += "graded dimensions vs characters: " + std::string(cmp.passed() ? "match" : "MISMATCH") + "\n";
  report["status"] = name(status_of(ok));
  emit(cfg, report, text);
  return exit_code(status_of(ok));
}

int run_verify_all(const RunConfig& cfg) {
  framed::VerifyAllOptions o;
  o.order = cfg.order;
  o.tol = cfg.tol;
  o.taus = taus_of(cfg);
  o.threads = cfg.threads;
  const auto r = framed::verify_all(o);
  std::string text;
  for (const auto& c : r.report["checks"]) {
    text += c["status"].get<std::string>() + "  " + c["name"].get<std::string>() + "\n";
  }
  text += "overall: " + std::string(name(r.status)) + "\n";
  emit(cfg, r.report, text);
  return exit_code(r.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for framed VOAs, the Ising fusion ring and the baby-monster characters"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--order", cfg.order, "Truncation order K of the q-series")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Numeric tolerance")->capture_default_str();
  app.add_option("--tau", cfg.taus, "Sample point a+bi in the upper half plane (repeatable)");
  app.add_option("--format", cfg.format, "Output format: text or json")->capture_default_str();
  app.add_option("--pair", cfg.pair, "Code pair: moonshine, baby or file:D,file:S")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
  app.fallthrough();

  int random_checks = 0;
  auto* codes = app.add_subcommand("codes", "Built-in codes and their statistics");
  codes->add_option("--random-checks", random_checks, "Random codes to test against the duality identities");
  app.add_subcommand("hypothesis", "Condition (1) and the module-level conditions on a code pair");
  std::string ring = "ising";
  app.add_subcommand("fusion", "A fusion table")
      ->add_option("--ring", ring, "ising, h8 or vb")
      ->check(CLI::IsMember({"ising", "h8", "vb"}))
      ->capture_default_str();
  bool flipped = false;
  app.add_subcommand("chars", "Characters, the solved baby triple and S-transform reports")
      ->add_flag("--sign-flipped", flipped, "Use the sign-flipped 1/16 character");
  long max_weight = 8;
  app.add_subcommand("fock", "Free-fermion graded dimensions and Virasoro checks")
      ->add_option("--max-weight", max_weight, "Highest weight")
      ->capture_default_str();
  app.add_subcommand("verify-all", "Run every check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    validate(cfg);
    const auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    if (cmd == "codes") return run_codes(cfg, random_checks);
    if (cmd == "hypothesis") return run_hypothesis(cfg);
    if (cmd == "fusion") return run_fusion(cfg, ring);
    if (cmd == "chars") return run_chars(cfg, flipped);
    if (cmd == "fock") return run_fock(cfg, max_weight);
    return run_verify_all(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
