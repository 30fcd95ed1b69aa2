#include "effbounds/cli/config.hpp"

#include <CLI11.hpp>
#include <regex>
#include <sstream>

namespace effbounds::cli {

namespace {

mpz_class parse_int(const std::string& text, const std::string& what) {
  static const std::regex re(R"(-?[0-9]+)");
  if (!std::regex_match(text, re)) throw error(errc::invalid_params, what + ": '" + text + "' is not an integer");
  return mpz_class(text);
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  const mpz_class v = parse_int(text, what);
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw error(errc::invalid_params, what + " must fit in 64 unsigned bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace

const char* format_name(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
  }
  return "?";
}

Range parse_range(const std::string& text, const std::string& name) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const mpz_class v = parse_int(text, "--" + name);
    return {v, v};
  }
  Range r{parse_int(text.substr(0, dots), "--" + name), parse_int(text.substr(dots + 2), "--" + name)};
  if (r.lo > r.hi) throw error(errc::invalid_params, "--" + name + ": empty range " + text);
  return r;
}

std::map<std::string, mpz_class> parse_inject(const std::string& text) {
  std::map<std::string, mpz_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw error(errc::invalid_params, "--inject expects key=value pairs, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const mpz_class v = parse_int(item.substr(eq + 1), "--inject " + key);
    if (v < 0) throw error(errc::invalid_params, "--inject " + key + " must be nonnegative");
    out[key] = v;
  }
  return out;
}

void apply_grid(RunConfig& cfg, const std::string& text) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw error(errc::invalid_params, "--grid expects g=..,q=..,s=.., got '" + item + "'");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "g") cfg.g = parse_range(val, "g");
    else if (key == "q") cfg.q = parse_range(val, "q");
    else if (key == "s") cfg.s = parse_range(val, "s");
    else throw error(errc::invalid_params, "--grid: unknown axis '" + key + "'");
  }
}

ParseOutcome parse_args(int argc, const char* const* argv, const char* env_seed) {
  CLI::App app{"Effective finiteness bounds for families of curves, and desk-scale checks of the projective geometry behind them."};
  app.name("bounds");
  app.require_subcommand(1);

  struct Raw {
    std::string g = "2", q = "2", s = "0", grid, seed, threshold, digits, format = "json", trace = "full", inject;
    std::string suite = "all", curves;
    std::optional<int> trials, degree;
    bool constants_only = false;
  } raw;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", raw.seed, "RNG seed (falls back to BOUNDS_SEED, then 1)");
    sub->add_option("--format", raw.format, "json | csv | text");
    sub->add_option("--exact-threshold-bits", raw.threshold, "largest exact integer size in bits (>= 1024)");
    sub->add_option("--precision-digits", raw.digits, "significant digits of tower bodies");
  };
  auto bound_opts = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--g", raw.g, "fibre genus, or a range a..b");
    sub->add_option("--q", raw.q, "base genus, or a range a..b");
    sub->add_option("--s", raw.s, "number of degenerate fibres, or a range a..b");
    sub->add_option("--grid", raw.grid, "grid as g=a..b,q=a..b,s=a..b");
    sub->add_option("--inject", raw.inject, "toy mode: key=value,... replacing derived quantities");
    sub->add_option("--trace", raw.trace, "none | top | full");
    sub->add_flag("--constants-only", raw.constants_only, "stop after the base constants");
  };
  CLI::App* shaf = app.add_subcommand("shafarevich", "bound on nonisotrivial families with fixed degeneracy");
  bound_opts(shaf);
  CLI::App* mord = app.add_subcommand("mordell", "bound on rational points through the cover construction");
  bound_opts(mord);
  CLI::App* geo = app.add_subcommand("geom-verify", "seeded property suites for the projective geometry");
  common(geo);
  geo->add_option("--suite", raw.suite, "all | recovery | cramer | matching | nondegeneracy | degree-law | segre");
  geo->add_option("--trials", raw.trials, "trials per suite");
  geo->add_option("--degree", raw.degree, "fixed curve degree for the recovery suite");
  geo->add_option("--curves", raw.curves, "two named curves for the matching suite, e.g. twisted-cubic,line");

  ParseOutcome res;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    res.message = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.message = e.what();
    return res;
  }

  try {
    RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.g = parse_range(raw.g, "g");
    cfg.q = parse_range(raw.q, "q");
    cfg.s = parse_range(raw.s, "s");
    if (!raw.grid.empty()) apply_grid(cfg, raw.grid);
    if (!raw.seed.empty()) {
      cfg.seed = parse_u64(raw.seed, "--seed");
      cfg.seed_source = "flag";
    } else if (env_seed && *env_seed) {
      cfg.seed = parse_u64(env_seed, "BOUNDS_SEED");
      cfg.seed_source = "env";
    }
    if (!raw.threshold.empty()) {
      cfg.ctx.exact_threshold_bits = parse_u64(raw.threshold, "--exact-threshold-bits");
      if (cfg.ctx.exact_threshold_bits < 1024)
        throw error(errc::invalid_params, "--exact-threshold-bits must be at least 1024");
    }
    if (!raw.digits.empty()) {
      const mpz_class d = parse_int(raw.digits, "--precision-digits");
      if (d < 5 || d > 2000) throw error(errc::invalid_params, "--precision-digits must be in 5..2000");
      cfg.ctx.precision_digits = static_cast<int>(d.get_si());
    }
    if (raw.format == "json") cfg.format = Format::Json;
    else if (raw.format == "csv") cfg.format = Format::Csv;
    else if (raw.format == "text") cfg.format = Format::Text;
    else throw error(errc::invalid_params, "--format must be json, csv or text");
    if (raw.trace == "full") cfg.trace = TraceLevel::Full;
    else if (raw.trace == "top") cfg.trace = TraceLevel::Top;
    else if (raw.trace == "none") cfg.trace = TraceLevel::None;
    else throw error(errc::invalid_params, "--trace must be none, top or full");
    cfg.constants_only = raw.constants_only;
    if (!raw.inject.empty()) cfg.inject = parse_inject(raw.inject);
    cfg.suite = raw.suite;
    cfg.trials = raw.trials;
    cfg.degree = raw.degree;
    if (!raw.curves.empty()) {
      const auto comma = raw.curves.find(',');
      if (comma == std::string::npos) throw error(errc::invalid_params, "--curves expects two names separated by a comma");
      cfg.curves = std::make_pair(raw.curves.substr(0, comma), raw.curves.substr(comma + 1));
    }
    res.config = std::move(cfg);
  } catch (const error& e) {
    res.exit_code = 2;
    res.message = e.what();
  }
  return res;
}

}  // namespace effbounds::cli
