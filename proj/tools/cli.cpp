#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "cache.hpp"
#include "fk/alexjones.hpp"
#include "fk/cabling.hpp"
#include "fk/error.hpp"
#include "fk/json.hpp"
#include "fk/surgery.hpp"

namespace fk::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_io(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "json or text")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}}))
      ->option_text("json|text");
  sub->add_option("--output,-o", c.output, "write to this file instead of stdout");
}

void add_knot(CLI::App* sub, RunConfig& c) {
  sub->add_option("--p", c.p, "cable winding number (2 or 3)");
  sub->add_option("--r", c.r, "cable parameter r = p w + 1");
  sub->add_option("--w", c.w, "cable parameter w");
  sub->add_option("--knot", c.knot, "cable or 4_1")->check(CLI::IsMember({"cable", "4_1"}));
}

bool is_cable(const RunConfig& c) { return c.knot == "cable"; }

// fills in p, r, w consistently
void resolve_knot(RunConfig& c) {
  if (!is_cable(c)) return;
  if (c.p != 2 && c.p != 3) throw UsageError("--p must be 2 or 3");
  if (c.r == 0 && c.w == 0) c.w = c.p == 2 ? 5 : 4;
  if (c.r != 0 && c.w != 0 && c.r != c.p * c.w + 1)
    throw UsageError("--r " + std::to_string(c.r) + " is not p*w+1 for --p " + std::to_string(c.p) + " --w " +
                     std::to_string(c.w));
  if (c.w == 0) c.w = w_from_r(c.p, c.r);
  c.r = c.p * c.w + 1;
  cable_params(c.p, c.w);
}

void require_odd_mmax(long m_max) {
  if (m_max < 1 || m_max % 2 == 0) throw UsageError("--mmax must be a positive odd integer");
}

KnotDescriptor descriptor(const RunConfig& c) {
  return is_cable(c) ? KnotDescriptor::cable(c.p, c.r) : KnotDescriptor::figure_eight();
}

FkSeries series_for(const RunConfig& c, long m_max, HTable& table) {
  return is_cable(c) ? gen_cable(c.p, c.w, m_max, table) : figure_eight_series(m_max, table);
}

SymLaurent alexander_for(const RunConfig& c) {
  return is_cable(c) ? alexander_cable(c.p, c.r) : alexander_figure_eight();
}

FkSeries read_series(const std::string& path) {
  json j;
  if (path == "-") {
    j = json::parse(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    j = json::parse(in);
  }
  return fk_series_from_json(j);
}

LPoly x_series_poly(const std::map<long, BigInt>& c) {
  std::map<long, BigInt> t(c.begin(), c.end());
  return LPoly::from_terms(2, t);
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

struct Output {
  std::string body;
  int status = 0;
};

Output cmd_h(const RunConfig& c, std::ostream& log) {
  if (c.h_max < 1 || c.h_max % 2 == 0) throw UsageError("--max must be a positive odd integer");
  HTable table = cache::load_htable(log);
  table.extend(c.h_max);
  cache::store_htable(table, log);
  if (c.format == Format::text) {
    std::string s;
    for (long k = 1; k <= c.h_max; k += 2) s += "h_" + std::to_string(k) + "(q) = " + table.h(k).to_string() + "\n";
    return {s};
  }
  json arr = json::array();
  for (long k = 1; k <= c.h_max; k += 2) arr.push_back({{"k", k}, {"poly", to_json(table.h(k))}});
  return {emit({{"kmax", c.h_max}, {"h", arr}})};
}

Output series_output(const FkSeries& f, Format fmt) {
  return {fmt == Format::text ? format_series(f) : emit(to_json(f))};
}

Output cmd_cable(RunConfig c, std::ostream& log) {
  resolve_knot(c);
  long m_max = c.m_max ? c.m_max : 105;
  require_odd_mmax(m_max);
  HTable table = cache::load_htable(log);
  FkSeries f = series_for(c, m_max, table);
  cache::store_htable(table, log);
  if (c.mirrored) f = mirror(f);
  return series_output(f, c.format);
}

Output cmd_mirror(RunConfig c, std::ostream& log) {
  if (!c.input.empty()) return series_output(mirror(read_series(c.input)), c.format);
  c.mirrored = true;
  return cmd_cable(c, log);
}

MRecursion recursion_for(RunConfig& c, std::ostream& log) {
  if (c.p != 2) throw UsageError("recursion is available for 2-cables only");
  resolve_knot(c);
  log << "deriving the m-recursion for r=" << c.r << "\n";
  return cache::recursion(c.r, c.variant, log);
}

Output cmd_recursion(RunConfig c, std::ostream& log) {
  MRecursion rec = recursion_for(c, log);
  if (c.command == Command::recursion_derive) {
    if (c.format == Format::json) return {emit(to_json(rec))};
    std::ostringstream os;
    os << "r = " << rec.r << "\nspan = " << rec.span << "\nwindow = f_1 .. f_" << rec.window
       << "\nleading = " << rec.leading_form().to_string() << "\noffsets =";
    for (long o : rec.offsets()) os << " " << o;
    os << "\nremoved content M-degree = " << rec.removed_m_degree << "\n";
    return {os.str()};
  }
  long m_max = c.m_max ? c.m_max : 129;
  require_odd_mmax(m_max);
  HTable table = cache::load_htable(log);
  if (c.command == Command::recursion_solve) {
    FkSeries init = c.input.empty() ? gen_cable(2, c.w, rec.window, table) : read_series(c.input);
    log << "solving forward from f_" << rec.window + 2 << " to f_" << m_max << "\n";
    FkSeries f = solve_forward(rec, init, m_max);
    cache::store_htable(table, log);
    return series_output(f, c.format);
  }
  FkSeries f = c.input.empty() ? gen_cable(2, c.w, m_max, table) : read_series(c.input);
  cache::store_htable(table, log);
  AnnihilationReport rep = verify_annihilation(rec, f);
  Output out;
  out.status = rep.ok() ? 0 : 1;
  if (c.format == Format::text) {
    std::ostringstream os;
    os << "r = " << rec.r << ", m_max = " << f.m_max << ": " << rep.instances << " relation instances, largest v = "
       << rep.largest_v << ", " << rep.entries.size() << " nonzero residuals\n";
    for (const auto& e : rep.entries) os << "  v = " << e.v << ": " << e.residual.to_string() << "\n";
    out.body = os.str();
  } else {
    json bad = json::array();
    for (const auto& e : rep.entries) bad.push_back({{"v", e.v}, {"residual", to_json(e.residual)}});
    out.body = emit({{"r", rec.r},
                     {"m_max", f.m_max},
                     {"instances", rep.instances},
                     {"largest_v", rep.largest_v},
                     {"nonzero", bad},
                     {"pass", rep.ok()}});
  }
  return out;
}

Output cmd_alexander(RunConfig c, std::ostream&) {
  resolve_knot(c);
  SymLaurent d = alexander_for(c);
  if (c.format == Format::text) return {"Δ(t) = " + d.to_string("t") + "\n"};
  return {emit({{"knot", to_json(descriptor(c))}, {"alexander", to_json(d)}})};
}

Output cmd_selimit(RunConfig c, std::ostream& log) {
  resolve_knot(c);
  long m_max = c.m_max ? c.m_max : 45;
  require_odd_mmax(m_max);
  XSeries e = symmetric_expansion(alexander_for(c), m_max);
  HTable table = cache::load_htable(log);
  FkSeries f = series_for(c, m_max, table);
  auto lim = q1_limit(f);
  std::vector<long> bad;
  for (long m = 1; m <= m_max; m += 2) {
    BigInt l = lim.count(m) ? lim[m] : BigInt(0);
    if (l != 2 * e.at(m)) bad.push_back(m);
  }
  Output out;
  out.status = bad.empty() ? 0 : 1;
  if (c.format == Format::text) {
    std::map<long, BigInt> lm;
    for (auto& [m, v] : lim)
      if (m > 0 && sgn(v) != 0) lm[m] = v;
    out.body = "s.e. (x^(1/2) - x^(-1/2))/Δ(x) = " + x_series_poly(e.coeffs).to_string("x") + " + ...\n" +
               "f_m(1) x^(m/2) = " + x_series_poly(lm).to_string("x") + " + ...\n" +
               (bad.empty() ? "f_m(1) = 2 E_m for all m <= " + std::to_string(m_max) + "\n"
                            : std::to_string(bad.size()) + " mismatches\n");
  } else {
    json lj = json::object();
    for (auto& [m, v] : lim)
      if (m > 0 && sgn(v) != 0) lj[std::to_string(m)] = v.get_str();
    out.body = emit({{"knot", to_json(descriptor(c))},
                     {"m_max", m_max},
                     {"expansion", to_json(e)},
                     {"q1_limit", lj},
                     {"mismatches", bad},
                     {"pass", bad.empty()}});
  }
  return out;
}

Output cmd_jones(RunConfig c, std::ostream&) {
  resolve_knot(c);
  if (c.n < 1) throw UsageError("--n must be positive");
  LPoly j = is_cable(c) ? colored_jones_cable(c.p, c.r, c.n) : colored_jones_figure_eight(c.n);
  if (c.format == Format::text) return {"J_" + std::to_string(c.n) + "(q) = " + j.to_string() + "\n"};
  return {emit({{"knot", to_json(descriptor(c))}, {"n", c.n}, {"jones", to_json(j)}})};
}

Output cmd_jones_hbar(RunConfig c, std::ostream&) {
  if (!is_cable(c)) throw UsageError("jones-hbar is implemented for cables");
  resolve_knot(c);
  if (c.order < 0) throw UsageError("--order must be non-negative");
  HbarSeries s = hbar_jones(c.p, c.r, c.order);
  if (c.format == Format::text) return {"J_n(e^ħ) = " + s.to_string() + "\n"};
  return {emit({{"knot", to_json(descriptor(c))}, {"series", to_json(s)}})};
}

Output cmd_zhat(RunConfig c, std::ostream& log) {
  resolve_knot(c);
  SurgerySlope slope;
  try {
    slope = parse_slope(c.slope, c.b);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (c.q_max < 0) throw UsageError("--qmax must be non-negative");
  HTable table = cache::load_htable(log);
  QSeries q;
  if (c.m_max) {
    require_odd_mmax(c.m_max);
    q = laplace_zhat(series_for(c, c.m_max, table), slope, c.q_max);
  } else {
    for (long m_max = 21;; m_max += 10) {
      try {
        q = laplace_zhat(series_for(c, m_max, table), slope, c.q_max);
        log << "m_max = " << m_max << " suffices for q_max = " << c.q_max << "\n";
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::TruncationInsufficient || m_max >= 4001) throw;
      }
    }
  }
  cache::store_htable(table, log);
  if (c.format == Format::text) return {q.to_string(1000) + "\n"};
  json j = to_json(q);
  j["knot"] = to_json(descriptor(c));
  j["slope"] = c.slope;
  j["b"] = c.b;
  return {emit(j)};
}

Output cmd_verify_all(RunConfig c, std::ostream& log) {
  resolve_knot(c);
  acceptance::Options o;
  o.progress = &log;
  std::vector<acceptance::CriterionResult> results;
  if (c.only) {
    using Fn = acceptance::CriterionResult (*)(const acceptance::Options&);
    const Fn fns[] = {acceptance::h_table_criterion, acceptance::generator_p2_criterion,
                      acceptance::generator_p3_criterion, acceptance::recursion_criterion,
                      acceptance::limit_criterion, acceptance::jones_criterion,
                      acceptance::surgery_criterion, acceptance::property_criterion};
    if (c.only < 1 || c.only > 8) throw UsageError("--only takes a criterion number 1..8");
    results.push_back(fns[c.only - 1](o));
    log << results.back().line() << std::endl;
  } else {
    results = acceptance::run_all(o);
    results.push_back(acceptance::target_checks(c.p, c.w, o));
    log << results.back().line() << std::endl;
  }
  json rep = acceptance::report_json(results);
  Output out;
  out.status = rep["pass"].get<bool>() ? 0 : 1;
  if (c.format == Format::text) {
    std::string s;
    for (const auto& r : results) {
      s += r.line() + "\n";
      for (const auto& n : r.notes) s += "    " + n + "\n";
    }
    s += std::string(out.status == 0 ? "all criteria pass" : "some criteria fail") + "\n";
    out.body = s;
  } else {
    out.body = emit(rep);
  }
  return out;
}

}  // namespace

Parsed parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact F_K series of cabled figure-eight knots"};
  app.name("fk");
  app.require_subcommand(1);

  auto* h = app.add_subcommand("h", "figure-eight coefficients h_1, h_3, ...");
  h->add_option("--max", c.h_max, "largest odd index");
  add_io(h, c);

  auto* cable = app.add_subcommand("cable", "coefficients f_m of F_K for a cable");
  add_knot(cable, c);
  cable->add_option("--mmax", c.m_max, "truncation (odd)");
  cable->add_flag("--mirror", c.mirrored, "emit the mirror image");
  add_io(cable, c);

  auto* mir = app.add_subcommand("mirror", "mirror a series read from JSON, or a generated cable");
  add_knot(mir, c);
  mir->add_option("--mmax", c.m_max, "truncation (odd)");
  mir->add_option("--input,-i", c.input, "FkSeries JSON file, - for stdin");
  add_io(mir, c);

  auto* rec = app.add_subcommand("recursion", "m-recursion from the quantum A-polynomial (2-cables)");
  rec->add_option("--r", c.r, "cable parameter r");
  rec->add_option("--w", c.w, "cable parameter w");
  rec->add_option("--mmax", c.m_max, "solve/verify up to this m (odd)");
  rec->add_option("--input,-i", c.input, "FkSeries JSON with initial data (solve) or the series to check (verify)");
  rec->add_option("--variant", c.variant, "operator text: corrected or printed")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OperatorVariant>{
          {"corrected", OperatorVariant::corrected}, {"printed", OperatorVariant::as_printed}}))
      ->option_text("corrected|printed");
  add_io(rec, c);
  rec->require_subcommand(1);
  auto* rd = rec->add_subcommand("derive", "derive the recursion");
  auto* rs = rec->add_subcommand("solve", "solve forward from the initial window");
  auto* rv = rec->add_subcommand("verify", "check every relation instance on the generated series");
  for (auto* s : {rd, rs, rv}) s->fallthrough();

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial");
  add_knot(alex, c);
  add_io(alex, c);

  auto* sel = app.add_subcommand("selimit", "symmetric expansion of 1/Δ against f_m(1)");
  add_knot(sel, c);
  sel->add_option("--mmax", c.m_max, "truncation (odd)");
  add_io(sel, c);

  auto* jones = app.add_subcommand("jones", "normalized colored Jones polynomial");
  add_knot(jones, c);
  jones->add_option("--n", c.n, "color");
  add_io(jones, c);

  auto* jh = app.add_subcommand("jones-hbar", "large-color hbar expansion of the colored Jones polynomial");
  add_knot(jh, c);
  jh->add_option("--order", c.order, "hbar order");
  add_io(jh, c);

  auto* z = app.add_subcommand("zhat", "Z-hat of a negative surgery");
  add_knot(z, c);
  z->add_option("--slope", c.slope, "-p/r");
  z->add_option("--b", c.b, "Spin^c label");
  z->add_option("--qmax", c.q_max, "q-order relative to the leading term");
  z->add_option("--mmax", c.m_max, "truncation of F_K (default: smallest sufficient)");
  add_io(z, c);

  auto* va = app.add_subcommand("verify-all", "run the acceptance suite");
  va->add_option("--p", c.p, "target cable p");
  va->add_option("--w", c.w, "target cable w");
  va->add_option("--r", c.r, "target cable r");
  va->add_option("--only", c.only, "run a single criterion 1..8");
  add_io(va, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? 0 : 2};
  }

  if (*h) c.command = Command::h;
  else if (*cable) c.command = Command::cable;
  else if (*mir) c.command = Command::mirror;
  else if (*rd) c.command = Command::recursion_derive;
  else if (*rs) c.command = Command::recursion_solve;
  else if (*rv) c.command = Command::recursion_verify;
  else if (*alex) c.command = Command::alexander;
  else if (*sel) c.command = Command::selimit;
  else if (*jones) c.command = Command::jones;
  else if (*jh) c.command = Command::jones_hbar;
  else if (*z) c.command = Command::zhat;
  else c.command = Command::verify_all;
  return {c, 0};
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Output o;
  try {
    switch (cfg.command) {
      case Command::h: o = cmd_h(cfg, err); break;
      case Command::cable: o = cmd_cable(cfg, err); break;
      case Command::mirror: o = cmd_mirror(cfg, err); break;
      case Command::recursion_derive:
      case Command::recursion_solve:
      case Command::recursion_verify: o = cmd_recursion(cfg, err); break;
      case Command::alexander: o = cmd_alexander(cfg, err); break;
      case Command::selimit: o = cmd_selimit(cfg, err); break;
      case Command::jones: o = cmd_jones(cfg, err); break;
      case Command::jones_hbar: o = cmd_jones_hbar(cfg, err); break;
      case Command::zhat: o = cmd_zhat(cfg, err); break;
      case Command::verify_all: o = cmd_verify_all(cfg, err); break;
    }
  } catch (const UsageError& e) {
    err << "fk: usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "fk: " << e.what() << "\n";
    return e.kind() == ErrorKind::BadParameter || e.kind() == ErrorKind::UnsupportedW ? 2 : 1;
  } catch (const json::exception& e) {
    err << "fk: malformed JSON input: " << e.what() << "\n";
    return 2;
  }
  if (cfg.output.empty()) {
    out << o.body;
  } else {
    std::ofstream f(cfg.output);
    if (!f) {
      err << "fk: cannot write " << cfg.output << "\n";
      return 2;
    }
    f << o.body;
  }
  return o.status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Parsed p = parse(argc, argv, out, err);
  if (!p.config) return p.exit_code;
  return run(*p.config, out, err);
}

}  // namespace fk::cli
