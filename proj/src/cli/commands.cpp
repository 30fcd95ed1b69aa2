#include "effbounds/cli/commands.hpp"

#include <chrono>
#include <functional>

#include "effbounds/geometry/verify.hpp"
#include "effbounds/parshin.hpp"

namespace effbounds::cli {

using nlohmann::json;

namespace {

std::string range_text(const Range& r) {
  return r.single() ? r.lo.get_str() : r.lo.get_str() + ".." + r.hi.get_str();
}

const char* trace_name(TraceLevel t) {
  switch (t) {
    case TraceLevel::None: return "none";
    case TraceLevel::Top: return "top";
    case TraceLevel::Full: return "full";
  }
  return "?";
}

std::string params_text(const FamilyParams& p) {
  return "(" + p.g.get_str() + "," + p.q.get_str() + "," + p.s.get_str() + ")";
}

Trace trimmed(const Trace& t, TraceLevel level) {
  if (level == TraceLevel::None) return {};
  Trace out = t;
  if (level == TraceLevel::Top)
    for (auto& e : out) e.children.clear();
  return out;
}

// Constants in output order.
using Named = std::vector<std::pair<std::string, Magnitude>>;

Named base_constants(const DerivedConstants& c) {
  Named out;
  auto put = [&](const char* k, const std::optional<Magnitude>& v) {
    if (v) out.emplace_back(k, *v);
  };
  put("m", c.m);
  put("d", c.d);
  put("l", c.l);
  put("delta0", c.delta0);
  put("N", c.N);
  put("C(ld+2,2)", c.choose_ld2);
  put("gq+s", c.gqs);
  put("M", c.M);
  put("Q", c.Q);
  put("D", c.D);
  put("A", c.A);
  return out;
}

json constants_json(const Named& c, const Context& ctx) {
  json out = json::object();
  for (const auto& [k, v] : c) out[k] = v.is_exact() ? json(v.value().get_str()) : to_json(v, ctx);
  return out;
}

void set_injection(Injection& inj, const std::string& key, const mpz_class& v) {
  const Magnitude m(v);
  if (key == "m") inj.m = m;
  else if (key == "d") inj.d = m;
  else if (key == "l") inj.l = m;
  else if (key == "M") inj.M = m;
  else if (key == "delta0") inj.delta0 = m;
  else if (key == "N") inj.N = m;
  else if (key == "gqs") inj.gqs = m;
  else if (key == "Q") inj.Q = m;
  else if (key == "D") inj.D = m;
  else if (key == "A") inj.A = m;
  else throw error(errc::invalid_params, "--inject: unknown key '" + key + "'");
}

PipelineOptions pipeline_options(const RunConfig& cfg, MordellInjection* mi) {
  PipelineOptions o;
  for (const auto& [k, v] : cfg.inject) {
    if (mi && (k == "S" || k == "P" || k == "g_prime" || k == "cover_sum")) {
      const Magnitude m(v);
      if (k == "S") mi->S = m;
      else if (k == "P") mi->P = m;
      else if (k == "g_prime") mi->g_prime = m;
      else mi->cover_sum = m;
      continue;
    }
    set_injection(o.inject, k, v);
  }
  return o;
}

// One evaluated grid point.
struct Record {
  FamilyParams params;
  Named constants;
  Trace trace;
  std::optional<Magnitude> result;
  std::vector<std::string> diagnostics;
  std::optional<error> failure;
};

std::vector<FamilyParams> grid_points(const RunConfig& cfg) {
  mpz_class count = (cfg.g.hi - cfg.g.lo + 1) * (cfg.q.hi - cfg.q.lo + 1) * (cfg.s.hi - cfg.s.lo + 1);
  if (count > 1000) throw error(errc::capacity_exceeded, "grid of " + count.get_str() + " points exceeds 1000");
  std::vector<FamilyParams> pts;
  for (mpz_class g = cfg.g.lo; g <= cfg.g.hi; ++g)
    for (mpz_class q = cfg.q.lo; q <= cfg.q.hi; ++q)
      for (mpz_class s = cfg.s.lo; s <= cfg.s.hi; ++s) pts.push_back({g, q, s});
  return pts;
}

json record_json(const Record& r, const RunConfig& cfg) {
  json j;
  j["params"] = {{"g", r.params.g.get_str()}, {"q", r.params.q.get_str()}, {"s", r.params.s.get_str()}};
  if (r.failure) {
    j["error"] = {{"code", errc_name(r.failure->code())}, {"message", r.failure->what()}};
    return j;
  }
  j["constants"] = constants_json(r.constants, cfg.ctx);
  for (const auto& [k, v] : r.constants)
    if (k == "g_prime") j["g_prime"] = v.value().get_str();
  j["trace"] = trace_to_json(trimmed(r.trace, cfg.trace), cfg.ctx);
  j["result"] = r.result ? to_json(*r.result, cfg.ctx) : json(nullptr);
  j["diagnostics"] = r.diagnostics;
  return j;
}

void text_trace(std::ostream& out, const Trace& t, const Context& ctx, int depth) {
  for (const TraceEntry& e : t) {
    out << std::string(static_cast<std::size_t>(2 * depth + 2), ' ') << e.name << " = " << render(e.value, ctx);
    if (!e.citation.empty()) out << "   [" << e.citation << "]";
    if (!e.note.empty()) out << "   (" << e.note << ")";
    out << "\n";
    text_trace(out, e.children, ctx, depth + 1);
  }
}

void csv_row(std::ostream& out, const RunConfig& cfg, const FamilyParams& p, const std::string& name,
             const Magnitude& v) {
  out << cfg.seed << "," << p.g << "," << p.q << "," << p.s << ",\"" << name << "\",";
  if (v.is_exact()) {
    out << "exact,0," << v.value() << "," << v.value() << "\n";
  } else {
    const json j = to_json(v, cfg.ctx);
    out << "tower," << v.height() << "," << j["lo"].get<std::string>() << "," << j["hi"].get<std::string>() << "\n";
  }
}

// Adjacent grid points (one axis +1) compared by their bounds.
json monotone_summary(const std::vector<Record>& recs, const Context& ctx) {
  json comps = json::array();
  bool monotone = true;
  for (std::size_t i = 0; i < recs.size(); ++i)
    for (std::size_t j = 0; j < recs.size(); ++j) {
      const FamilyParams &a = recs[i].params, &b = recs[j].params;
      const int diff = (b.g - a.g == 1) + (b.q - a.q == 1) + (b.s - a.s == 1);
      const int same = (a.g == b.g) + (a.q == b.q) + (a.s == b.s);
      if (diff != 1 || same != 2 || !recs[i].result || !recs[j].result) continue;
      const Ordering o = compare(*recs[i].result, *recs[j].result, ctx);
      monotone = monotone && (o == Ordering::Less || o == Ordering::Equal);
      comps.push_back({{"from", params_text(a)}, {"to", params_text(b)}, {"ordering", ordering_name(o)}});
    }
  return {{"comparisons", comps}, {"nondecreasing", monotone}};
}

int emit_bounds(const RunConfig& cfg, const std::vector<Record>& recs, std::ostream& out, std::ostream& err) {
  int code = kOk;
  for (const Record& r : recs)
    if (r.failure) {
      err << "error at " << params_text(r.params) << ": " << r.failure->what() << "\n";
      if (code == kOk) code = exit_code_for(r.failure->code());
    }
  const bool grid = cfg.is_grid();
  if (!grid && recs.front().failure) return code;

  switch (cfg.format) {
    case Format::Json: {
      json j;
      j["config"] = config_json(cfg);
      if (grid) {
        j["records"] = json::array();
        for (const Record& r : recs) j["records"].push_back(record_json(r, cfg));
        j["summary"] = monotone_summary(recs, cfg.ctx);
      } else {
        json r = record_json(recs.front(), cfg);
        for (auto it = r.begin(); it != r.end(); ++it) j[it.key()] = it.value();
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "seed,g,q,s,quantity,kind,height,lo,hi\n";
      for (const Record& r : recs) {
        if (r.failure) continue;
        for (const auto& [k, v] : r.constants) csv_row(out, cfg, r.params, k, v);
        if (r.result) csv_row(out, cfg, r.params, "bound", *r.result);
      }
      break;
    case Format::Text:
      out << cfg.command << "  seed " << cfg.seed << "\n";
      for (const Record& r : recs) {
        out << params_text(r.params) << "\n";
        if (r.failure) {
          out << "  error: " << r.failure->what() << "\n";
          continue;
        }
        for (const auto& [k, v] : r.constants) out << "  " << k << " = " << render(v, cfg.ctx) << "\n";
        const Trace t = trimmed(r.trace, cfg.trace);
        if (!t.empty()) {
          out << " trace:\n";
          text_trace(out, t, cfg.ctx, 0);
        }
        if (r.result) out << " bound: " << render(*r.result, cfg.ctx) << "\n";
        for (const auto& d : r.diagnostics) out << " note: " << d << "\n";
      }
      if (grid) {
        const json s = monotone_summary(recs, cfg.ctx);
        for (const auto& c : s["comparisons"])
          out << "compare " << c["from"].get<std::string>() << " -> " << c["to"].get<std::string>() << ": "
              << c["ordering"].get<std::string>() << "\n";
        out << "nondecreasing: " << (s["nondecreasing"].get<bool>() ? "yes" : "no") << "\n";
      }
      break;
  }
  return code;
}

std::vector<Record> sweep(const RunConfig& cfg, const std::function<void(const FamilyParams&, Record&)>& eval) {
  std::vector<Record> recs;
  for (const FamilyParams& p : grid_points(cfg)) {
    Record r;
    r.params = p;
    try {
      eval(p, r);
    } catch (const error& e) {
      r = Record{};
      r.params = p;
      r.failure = e;
    }
    recs.push_back(std::move(r));
  }
  return recs;
}

}  // namespace

int exit_code_for(errc code) {
  switch (code) {
    case errc::capacity_exceeded:
    case errc::depth_exceeds_value:
      return kCapacity;
    case errc::invalid_params:
    case errc::invalid_magnitude:
    case errc::invalid_betas:
    case errc::shape_mismatch:
    case errc::inner_params_invalid:
    case errc::nonpositive_genus:
    case errc::zero_vector:
      return kInvalidInput;
    default:
      return kPropertyFailure;
  }
}

json config_json(const RunConfig& cfg) {
  json j{{"command", cfg.command},
         {"seed", cfg.seed},
         {"seed_source", cfg.seed_source},
         {"exact_threshold_bits", cfg.ctx.exact_threshold_bits},
         {"precision_digits", cfg.ctx.precision_digits},
         {"format", format_name(cfg.format)}};
  if (cfg.command == "geom-verify") {
    j["suite"] = cfg.suite;
    j["trials"] = cfg.trials ? json(*cfg.trials) : json(nullptr);
    j["degree"] = cfg.degree ? json(*cfg.degree) : json(nullptr);
    j["curves"] = cfg.curves ? json::array({cfg.curves->first, cfg.curves->second}) : json(nullptr);
    return j;
  }
  j["g"] = range_text(cfg.g);
  j["q"] = range_text(cfg.q);
  j["s"] = range_text(cfg.s);
  j["trace"] = trace_name(cfg.trace);
  j["constants_only"] = cfg.constants_only;
  json inj = json::object();
  for (const auto& [k, v] : cfg.inject) inj[k] = v.get_str();
  j["inject"] = inj;
  return j;
}

int cmd_shafarevich(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PipelineOptions opts = pipeline_options(cfg, nullptr);
  const auto recs = sweep(cfg, [&](const FamilyParams& p, Record& r) {
    if (cfg.constants_only) {
      FamilyParams base = p;
      if (p.q == 0 || p.q == 1) {
        base = {p.g, 2, 2 * p.s};
        r.diagnostics.push_back("base genus below 2: constants shown for " + params_text(base) +
                                " (q replaced by 2 and s by 2s)");
      }
      DerivedConstants c = derive_base(base, opts, cfg.ctx);
      r.constants = base_constants(c);
      r.trace = c.trace;
      for (auto& d : c.diagnostics) r.diagnostics.push_back(d);
      return;
    }
    ShafarevichResult s = evaluate_shafarevich_any(p, opts, cfg.ctx);
    r.constants = base_constants(s.constants);
    r.trace = s.trace;
    r.result = s.bound;
    r.diagnostics = s.diagnostics;
  });
  return emit_bounds(cfg, recs, out, err);
}

int cmd_mordell(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  MordellInjection mi;
  const PipelineOptions opts = pipeline_options(cfg, &mi);
  const auto recs = sweep(cfg, [&](const FamilyParams& p, Record& r) {
    if (cfg.constants_only) {
      const Magnitude gp = g_prime(p.g), theta = rho_degree_bound(p.g), C = parshin_C(p);
      r.constants = {{"g_prime", gp}, {"Theta", theta}, {"C(g,q,s)", C}};
      r.constants.emplace_back("cover_sum", cover_sum_bound(p.q, p.s, C, cfg.ctx).bound);
      return;
    }
    MordellResult m = evaluate_mordell(p, mi, opts, cfg.ctx);
    if (m.constants) {
      r.constants = {{"g_prime", m.constants->g_prime},
                     {"Theta", m.constants->theta_bound},
                     {"C(g,q,s)", m.constants->C_gqs},
                     {"cover_sum", m.constants->cover_sum},
                     {"S(g')", m.constants->S_of_gprime}};
    }
    if (m.P) r.constants.emplace_back("P", *m.P);
    r.trace = m.trace;
    r.result = m.bound;
    r.diagnostics = m.diagnostics;
  });
  return emit_bounds(cfg, recs, out, err);
}

int cmd_geom_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = geom::suite_names();
  } else {
    const auto& known = geom::suite_names();
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end())
      throw error(errc::invalid_params, "unknown suite '" + cfg.suite + "'");
    names = {cfg.suite};
  }
  geom::SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  opt.degree = cfg.degree;
  opt.curves = cfg.curves;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<geom::SuiteResult> results;
  for (const auto& n : names) results.push_back(geom::run_suite(n, opt));
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int ok = 0;
  for (const auto& r : results) ok += r.ok();
  const bool all_ok = ok == static_cast<int>(results.size());

  switch (cfg.format) {
    case Format::Json: {
      json j;
      j["config"] = config_json(cfg);
      j["suites"] = json::array();
      for (const auto& r : results) {
        json f = json::array();
        for (const auto& x : r.failures) f.push_back({{"seed", x.seed}, {"message", x.message}});
        j["suites"].push_back({{"name", r.name},
                               {"trials", r.trials},
                               {"passed", r.passed},
                               {"required_rate", r.required_rate},
                               {"ok", r.ok()},
                               {"seconds", r.seconds},
                               {"failures", f},
                               {"notes", r.notes}});
      }
      j["result"] = {{"ok", all_ok}, {"suites_passed", ok}, {"suites", results.size()}, {"seconds", total}};
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "suite,seed,trials,passed,required_rate,ok,seconds\n";
      for (const auto& r : results)
        out << r.name << "," << cfg.seed << "," << r.trials << "," << r.passed << "," << r.required_rate << ","
            << (r.ok() ? "true" : "false") << "," << r.seconds << "\n";
      break;
    case Format::Text:
      out << "geom-verify  seed " << cfg.seed << "\n";
      for (const auto& r : results) {
        out << "  " << r.name << ": " << r.passed << "/" << r.trials << (r.ok() ? " pass" : " FAIL") << " ("
            << r.seconds << " s)\n";
        for (const auto& n : r.notes) out << "      " << n << "\n";
        for (const auto& f : r.failures) out << "      seed " << f.seed << ": " << f.message << "\n";
      }
      out << "  " << ok << "/" << results.size() << " suites pass in " << total << " s\n";
      break;
  }
  if (!all_ok) err << "property failure in " << (results.size() - ok) << " suite(s)\n";
  return all_ok ? kOk : kPropertyFailure;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "shafarevich") return cmd_shafarevich(cfg, out, err);
    if (cfg.command == "mordell") return cmd_mordell(cfg, out, err);
    if (cfg.command == "geom-verify") return cmd_geom_verify(cfg, out, err);
    err << "unknown command '" << cfg.command << "'\n";
    return kInvalidInput;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kPropertyFailure;
  }
}

}  // namespace effbounds::cli
