#include "effmodel_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "effmodel/error.hpp"
#include "effmodel/hopf/classify.hpp"
#include "effmodel/hopf/presentation.hpp"
#include "effmodel/model/report.hpp"
#include "effmodel/ring/parse.hpp"
#include "effmodel/ring/prime_field.hpp"
#include "effmodel/witt/identities.hpp"

namespace effmodel::cli {

namespace {

using ring::BaseElement;
using ring::parse_base;
using witt::WittPair;

void require_prime(std::uint32_t p) {
  if (!ring::PrimeField::is_prime(p)) throw UsageError("p must be prime (got " + std::to_string(p) + ")");
}

Format format_of(const std::string& s) { return s == "json" ? Format::Json : Format::Text; }

// The ring of all variables mentioned by the operands, in order of first
// appearance.
std::vector<WittPair> parse_operands(std::uint32_t p, const std::vector<std::string>& coords) {
  std::vector<std::string> names;
  for (const auto& c : coords) {
    for (auto& v : ring::scan_variables(c)) {
      if (std::find(names.begin(), names.end(), v) == names.end()) names.push_back(std::move(v));
    }
  }
  auto r = ring::Ring::make(p, names);
  std::vector<WittPair> out;
  for (std::size_t i = 0; i + 1 < coords.size(); i += 2) {
    out.push_back({ring::parse_poly(coords[i], r), ring::parse_poly(coords[i + 1], r)});
  }
  return out;
}

std::vector<model::ConductorSpec> sweep_specs(const std::vector<std::uint32_t>& primes,
                                              const std::vector<std::string>& regimes, std::int64_t n1_max) {
  std::vector<model::ConductorSpec> out;
  for (auto p : primes) {
    require_prime(p);
    for (const auto& r : regimes) {
      if (r == "A") {
        out.push_back(model::ConductorSpec::make(p, 0, -static_cast<std::int64_t>(p)));
      } else {
        for (std::int64_t n1 = 1; n1 <= n1_max; ++n1) {
          out.push_back(model::ConductorSpec::make(p, -static_cast<std::int64_t>(p) * p * n1, 0));
        }
      }
    }
  }
  return out;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Effective models of Z/p^2 actions under degeneration", "effmodel"};
  app.require_subcommand(1);

  std::uint32_t p = 0;
  std::string lambda = "1", nu = "1", format = "text";
  std::string a1, a2, b1, b2;

  auto* witt = app.add_subcommand("witt", "Arithmetic in twisted Witt vectors of length 2");
  witt->require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> ops{
      {"add", "a + b"}, {"neg", "-a"}, {"sub", "a - b"}, {"frobenius", "F(a)"}, {"phi", "phi_{lambda,nu}(a)"}};
  for (const auto& [name, what] : ops) {
    auto* sc = witt->add_subcommand(name, what);
    sc->add_option("--p", p, "prime")->required();
    sc->add_option("--lambda", lambda, "twist parameter")->capture_default_str();
    if (name == "phi") sc->add_option("--nu", nu, "scaling parameter")->capture_default_str();
    sc->add_option("--a1", a1, "first coordinate of a")->required();
    sc->add_option("--a2", a2, "second coordinate of a")->required();
    if (name == "add" || name == "sub") {
      sc->add_option("--b1", b1, "first coordinate of b")->required();
      sc->add_option("--b2", b2, "second coordinate of b")->required();
    }
    sc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  }

  auto* hopf = app.add_subcommand("hopf", "Hopf algebra of the kernel of phi_{lambda,nu}");
  hopf->require_subcommand(1);
  auto* check = hopf->add_subcommand("check", "Verify the Hopf axioms and classify the special fiber");
  check->add_option("--p", p, "prime")->required();
  check->add_option("--lambda", lambda)->capture_default_str();
  check->add_option("--nu", nu)->capture_default_str();
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::int64_t m1 = 0, m2 = 0;
  auto* degen = app.add_subcommand("degenerate", "Degeneration report for a conductor pair");
  degen->add_option("--p", p, "prime")->required();
  degen->add_option("--m1", m1)->required();
  degen->add_option("--m2", m2)->required();
  degen->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::vector<std::uint32_t> primes{3, 5, 7};
  std::vector<std::string> regimes{"A", "B"};
  std::int64_t n1_max = 2;
  std::string out;
  auto* sweep = app.add_subcommand("sweep", "Degeneration reports over a grid, as a JSON array");
  sweep->add_option("--p-list", primes)->delimiter(',')->capture_default_str();
  sweep->add_option("--regimes", regimes)->delimiter(',')->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  sweep->add_option("--n1-max", n1_max)->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--out", out, "output file")->required();

  auto* verify = app.add_subcommand("verify", "Run the identity and example suites per prime");
  verify->add_option("--primes", primes)->delimiter(',')->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
    throw HelpRequested{leaf->help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (witt->parsed()) {
    WittCommand c;
    c.op = witt->get_subcommands().front()->get_name();
    require_prime(p);
    c.p = p;
    c.lambda = parse_base(lambda, p);
    c.nu = parse_base(nu, p);
    std::vector<std::string> coords{a1, a2};
    if (c.op == "add" || c.op == "sub") coords.insert(coords.end(), {b1, b2});
    c.operands = parse_operands(p, coords);
    c.format = format_of(format);
    return c;
  }
  if (check->parsed()) {
    require_prime(p);
    return HopfCheckCommand{p, parse_base(lambda, p), parse_base(nu, p), format_of(format)};
  }
  if (degen->parsed()) {
    require_prime(p);
    return DegenerateCommand{model::ConductorSpec::make(p, m1, m2), format_of(format)};
  }
  if (sweep->parsed()) {
    return SweepCommand{sweep_specs(primes, regimes, n1_max), out};
  }
  for (auto q : primes) require_prime(q);
  return VerifyCommand{primes};
}

namespace {

int run_witt(const WittCommand& c, std::ostream& out) {
  const auto& a = c.operands[0];
  auto r = [&] {
    if (c.op == "add") return witt::w2_add(c.lambda, a, c.operands[1]);
    if (c.op == "sub") return witt::w2_sub(c.lambda, a, c.operands[1]);
    if (c.op == "neg") return witt::w2_neg(c.lambda, a);
    if (c.op == "frobenius") return witt::frobenius(a);
    return witt::phi(c.lambda, c.nu, a);
  }();
  if (c.format == Format::Json) {
    out << nlohmann::json{{"first", r.first.to_string()}, {"second", r.second.to_string()}}.dump(2) << "\n";
  } else {
    out << r.to_string() << "\n";
  }
  return kOk;
}

int run_hopf(const HopfCheckCommand& c, std::ostream& out) {
  auto h = hopf::make_kernel(c.lambda, c.nu);
  auto rep = hopf::check_axioms(h);
  std::string fiber = h.is_integral() ? hopf::classify_fiber(hopf::special_fiber(h)).to_string() : "non-integral";
  if (c.format == Format::Json) {
    nlohmann::json j{{"rank", rep.rank},         {"coassoc", rep.coassoc.ok},
                     {"counit", rep.counit.ok},  {"relations", rep.relations.ok},
                     {"antipode", rep.antipode.ok}, {"fiber_class", fiber}};
    out << j.dump(2) << "\n";
  } else {
    auto row = [&](const char* name, const hopf::CheckResult& r) {
      out << std::left << std::setw(12) << name << (r.ok ? "ok" : "FAIL " + r.generator + ": " + r.residual) << "\n";
    };
    out << std::left << std::setw(12) << "rank" << rep.rank << "\n";
    row("coassoc", rep.coassoc);
    row("counit", rep.counit);
    row("relations", rep.relations);
    row("antipode", rep.antipode);
    out << std::left << std::setw(12) << "fiber_class" << fiber << "\n";
  }
  return rep.all_ok() ? kOk : kVerificationFailed;
}

int run_degenerate(const DegenerateCommand& c, std::ostream& out) {
  auto j = model::to_json(model::degenerate(c.spec));
  out << (c.format == Format::Json ? j.dump(2) + "\n" : model::json_to_text(j));
  return kOk;
}

int run_sweep(const SweepCommand& c, std::ostream& log) {
  std::vector<std::future<model::DegenerationReport>> jobs;
  for (const auto& spec : c.specs) {
    jobs.push_back(std::async(std::launch::async, [spec] { return model::degenerate(spec); }));
  }
  std::vector<model::DegenerationReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot open " + c.out.string() + " for writing");
  f << model::reports_to_json(reports).dump(2) << "\n";
  if (!f.flush()) throw UsageError("failed writing " + c.out.string());
  log << "sweep: " << reports.size() << " reports written to " << c.out.string() << "\n";
  return kOk;
}

struct Cell {
  bool skipped = false;
  std::vector<std::string> failures;
};

Cell witt_law_cell(std::uint32_t p) {
  Cell c;
  for (const char* l : {"0", "1", "pi", "1 + pi"}) {
    for (const auto& r : witt::group_law_checks(parse_base(l, p))) {
      if (!r.ok) c.failures.push_back(r.name + " at lambda=" + l + ": " + r.residual);
    }
  }
  return c;
}

Cell cocycle_cell(std::uint32_t p) {
  Cell c;
  if (auto r = witt::cocycle_check(p); !r.ok) c.failures.push_back(r.residual);
  return c;
}

Cell phi_hom_cell(std::uint32_t p) {
  Cell c;
  for (const char* l : {"0", "1", "pi"}) {
    for (const char* n : {"1", "pi"}) {
      auto r = witt::check_hom(witt::phi_map(parse_base(l, p), parse_base(n, p)));
      if (!r.ok) c.failures.push_back(std::string("lambda=") + l + ", nu=" + n + ": " + r.residual);
    }
  }
  return c;
}

Cell axioms_cell(const hopf::HopfPresentation& h, const std::string& label, Cell c = {}) {
  auto rep = hopf::check_axioms(h);
  if (rep.rank != static_cast<std::size_t>(h.p()) * h.p()) c.failures.push_back(label + ": rank " + std::to_string(rep.rank));
  for (const auto* r : {&rep.coassoc, &rep.counit, &rep.relations, &rep.antipode}) {
    if (!r->ok) c.failures.push_back(label + " " + r->generator + ": " + r->residual);
  }
  return c;
}

Cell kernel_cell(std::uint32_t p) {
  Cell c;
  if (p == 2) return {true, {}};
  for (const char* l : {"0", "1", "pi", "pi^4"}) {
    for (const char* n : {"0", "1", "pi", "pi^2"}) {
      try {
        c = axioms_cell(hopf::make_kernel(parse_base(l, p), parse_base(n, p)),
                        std::string("lambda=") + l + ", nu=" + n, std::move(c));
      } catch (const VerificationFailure& e) {
        c.failures.push_back(e.what());
      }
    }
  }
  return c;
}

Cell examples_cell(std::uint32_t p) {
  Cell c;
  if (p == 2) return {true, {}};
  auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
    if (got != want) c.failures.push_back(what + ": got " + got + ", expected " + want);
  };
  try {
    auto a = model::degenerate(model::ConductorSpec::regime_a(p));
    expect("A lambda", a.lambda, "pi");
    expect("A nu", a.nu, "1");
    expect("A verdict", a.verdict, "Torsor");
    auto b = model::degenerate(model::ConductorSpec::regime_b(p, 1));
    expect("B lambda", b.lambda, "pi^" + std::to_string((p - 1) * (p - 1)));
    expect("B nu", b.nu, "pi^" + std::to_string(p - 1));
    expect("B verdict", b.verdict, "FaithfulNotFree");
    expect("B stabilizer order", std::to_string(b.stabilizer_order), std::to_string(p));
  } catch (const Error& e) {
    c.failures.push_back(e.what());
  }
  return c;
}

int run_verify(const VerifyCommand& c, std::ostream& out, std::ostream& log) {
  const std::vector<std::string> columns{"witt_law", "cocycle", "phi_hom", "hopf_zp2", "hopf_kernel", "examples"};
  out << std::left << std::setw(5) << "p";
  for (const auto& col : columns) out << std::setw(16) << col;
  out << "\n";
  std::vector<std::string> residuals;
  for (auto p : c.primes) {
    log << "verify: p=" << p << "\n";
    std::vector<Cell> row{witt_law_cell(p), cocycle_cell(p), phi_hom_cell(p),
                          axioms_cell(hopf::make_zp2(p), "zp2"), kernel_cell(p), examples_cell(p)};
    out << std::setw(5) << p;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& cell = row[i];
      out << std::setw(16) << (cell.skipped ? "skipped (p=2)" : cell.failures.empty() ? "pass" : "FAIL");
      for (const auto& f : cell.failures) residuals.push_back("p=" + std::to_string(p) + " " + columns[i] + ": " + f);
    }
    out << "\n";
  }
  for (const auto& r : residuals) out << r << "\n";
  return residuals.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& log) {
  return std::visit(
      [&](const auto& c) -> int {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, WittCommand>) return run_witt(c, out);
        if constexpr (std::is_same_v<T, HopfCheckCommand>) return run_hopf(c, out);
        if constexpr (std::is_same_v<T, DegenerateCommand>) return run_degenerate(c, out);
        if constexpr (std::is_same_v<T, SweepCommand>) return run_sweep(c, log);
        if constexpr (std::is_same_v<T, VerifyCommand>) return run_verify(c, out, log);
      },
      cmd);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& log) {
  try {
    return run(parse_args(args), out, log);
  } catch (const HelpRequested& h) {
    out << h.text;
    return kOk;
  } catch (const UnsupportedRegime& e) {
    log << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const VerificationFailure& e) {
    log << "error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    log << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace effmodel::cli
