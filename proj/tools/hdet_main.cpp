// Command-line front end: evaluate any exposed function over points or
// grids, run the verification suites, emit CSV/JSON tables, and summarize
// spectrum files. Exit codes: 0 success, 1 verification failure, 2 evaluation
// error rows, 3 verification crash, 4 unwritable output, 5 spectrum parse
// failure.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdet/gammafactor.hpp"
#include "hdet/hurwitz.hpp"
#include "hdet/multigamma.hpp"
#include "hdet/numkernel.hpp"
#include "hdet/selberg.hpp"
#include "hdet/types.hpp"
#include "hdet/verify.hpp"

namespace {

using hdet::CValue;

// ---- formatting -------------------------------------------------------------

std::string num17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_number(double x) {
  if (!std::isfinite(x)) return "null";
  return num17(x);
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += "\"";
  return out;
}

// ---- argument parsing -------------------------------------------------------

// Complex literals: "1.5", "-2", "1.5+0.25i", "-1e-3-2i", "0.7i".
bool parse_cvalue(const std::string& text, CValue* out) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return false;
  const char* p = s.c_str();
  char* end = nullptr;
  double first = std::strtod(p, &end);
  if (end == p) {
    // Allow a bare "i" / "+i" / "-i".
    double sign = 1.0;
    if (*p == '+' || *p == '-') {
      if (*p == '-') sign = -1.0;
      ++p;
    }
    if (std::string(p) == "i") {
      *out = CValue(0.0, sign);
      return true;
    }
    return false;
  }
  if (*end == '\0') {
    *out = CValue(first, 0.0);
    return true;
  }
  if (*end == 'i' && end[1] == '\0') {
    *out = CValue(0.0, first);
    return true;
  }
  const char* q = end;
  if (*q != '+' && *q != '-') return false;
  char* end2 = nullptr;
  double second = std::strtod(q, &end2);
  if (end2 == q) {
    // "A+i" / "A-i"
    if ((q[0] == '+' || q[0] == '-') && q[1] == 'i' && q[2] == '\0') {
      *out = CValue(first, q[0] == '+' ? 1.0 : -1.0);
      return true;
    }
    return false;
  }
  if (*end2 == 'i' && end2[1] == '\0') {
    *out = CValue(first, second);
    return true;
  }
  return false;
}

struct Bindings {
  std::map<std::string, std::string> kv;  // last value wins except "s"
  std::vector<CValue> points;             // every s= occurrence, in order

  bool has(const std::string& k) const { return kv.count(k) != 0; }

  std::string str(const std::string& k, const std::string& dflt = "") const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  }

  int integer(const std::string& k, bool required, int dflt = 0) const {
    auto it = kv.find(k);
    if (it == kv.end()) {
      if (required) throw hdet::domain_error("missing binding: " + k);
      return dflt;
    }
    try {
      size_t pos = 0;
      int v = std::stoi(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument(k);
      return v;
    } catch (const std::exception&) {
      throw hdet::domain_error("binding " + k + " must be an integer, got '" +
                               it->second + "'");
    }
  }

  double real(const std::string& k, bool required, double dflt = 0.0) const {
    auto it = kv.find(k);
    if (it == kv.end()) {
      if (required) throw hdet::domain_error("missing binding: " + k);
      return dflt;
    }
    CValue v;
    if (!parse_cvalue(it->second, &v) || v.imag() != 0.0) {
      throw hdet::domain_error("binding " + k + " must be a real number");
    }
    return v.real();
  }

  CValue cval(const std::string& k, bool required,
              CValue dflt = CValue(0, 0)) const {
    auto it = kv.find(k);
    if (it == kv.end()) {
      if (required) throw hdet::domain_error("missing binding: " + k);
      return dflt;
    }
    CValue v;
    if (!parse_cvalue(it->second, &v)) {
      throw hdet::domain_error("binding " + k +
                               " is not a number: " + it->second);
    }
    return v;
  }
};

Bindings parse_bindings(const std::vector<std::string>& tokens) {
  Bindings b;
  for (const std::string& tok : tokens) {
    size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw hdet::domain_error("bindings must look like key=value: " + tok);
    }
    std::string key = tok.substr(0, eq);
    std::string val = tok.substr(eq + 1);
    if (key == "s") {
      CValue v;
      if (!parse_cvalue(val, &v)) {
        throw hdet::domain_error("point is not a number: " + val);
      }
      b.points.push_back(v);
    } else {
      b.kv[key] = val;
    }
  }
  return b;
}

// ---- shared evaluation harness ----------------------------------------------

struct CommonOpts {
  double tol = -1.0;      // < 0: keep defaults
  double fd_step = -1.0;
  int kmax = -1;
  int nmax = -1;
  std::string spectrum_path;
  std::string format = "csv";
  std::string out_path;
};

void attach_common(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--tol", o->tol, "residual tolerance override");
  cmd->add_option("--fd-step", o->fd_step, "finite-difference base step");
  cmd->add_option("--kmax", o->kmax, "cap on primitive-power index");
  cmd->add_option("--nmax", o->nmax, "cap on product shift index");
  cmd->add_option("--spectrum", o->spectrum_path, "length-spectrum JSON file");
  cmd->add_option("--format", o->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o->out_path, "write output to this file");
}

hdet::ToleranceConfig make_cfg(const CommonOpts& o) {
  hdet::ToleranceConfig cfg;
  if (o.tol > 0) cfg.abs_tol = o.tol;
  if (o.fd_step > 0) cfg.fd_step = o.fd_step;
  return cfg;
}

hdet::TruncationPolicy make_policy(const CommonOpts& o) {
  hdet::TruncationPolicy pol;
  if (o.kmax > 0) pol.k_max = o.kmax;
  if (o.nmax > 0) pol.n_max = o.nmax;
  return pol;
}

const hdet::LengthSpectrum& resolve_spectrum(
    const CommonOpts& o, std::optional<hdet::LengthSpectrum>& storage) {
  if (o.spectrum_path.empty()) return hdet::builtin_spectrum();
  storage = hdet::load_spectrum_file(o.spectrum_path);
  return *storage;
}

struct Row {
  CValue s{0, 0};
  CValue val{0, 0};
  double err_bound = 0.0;  // 0 = no certified bound reported
  std::string error;       // non-empty marks a failed row
};

using Evaluator = std::function<Row(CValue)>;

hdet::PhiForm parse_form(const std::string& name) {
  if (name == "milnor") return hdet::PhiForm::MilnorForm;
  if (name == "barnes") return hdet::PhiForm::BarnesForm;
  if (name == "vigneras") return hdet::PhiForm::VignerasForm;
  throw hdet::domain_error("form must be milnor|barnes|vigneras, got '" +
                           name + "'");
}

double require_real(CValue s, const char* what) {
  if (s.imag() != 0.0) {
    throw hdet::domain_error(std::string(what) +
                             " takes a real point; got nonzero imaginary part");
  }
  return s.real();
}

// Builds the per-point evaluator; binding errors surface immediately.
Evaluator make_evaluator(const std::string& fn, const Bindings& b,
                         const CommonOpts& opts,
                         std::optional<hdet::LengthSpectrum>& spec_storage) {
  using namespace hdet;
  const ToleranceConfig cfg = make_cfg(opts);
  const TruncationPolicy pol = make_policy(opts);

  auto plain = [](std::function<CValue(CValue)> f) -> Evaluator {
    return [f](CValue s) { return Row{s, f(s), 0.0, ""}; };
  };

  if (fn == "hurwitz_zeta" || fn == "hurwitz_zeta_dw") {
    CValue z = b.cval("z", true);
    bool dw = fn == "hurwitz_zeta_dw";
    return plain([z, dw](CValue w) {
      return dw ? hurwitz_zeta_dw(w, z) : hurwitz_zeta(w, z);
    });
  }
  if (fn == "barnes_zeta") {
    int n = b.integer("n", true);
    CValue z = b.cval("z", true);
    return plain([n, z](CValue w) { return barnes_zeta(n, w, z); });
  }
  if (fn == "log_multigamma") {
    int n = b.integer("n", true);
    int r = b.integer("r", false, 1);
    return plain([n, r](CValue z) { return log_multigamma(n, r, z).value; });
  }
  if (fn == "log_vigneras_G") {
    int n = b.integer("n", true);
    return plain([n](CValue z) { return log_vigneras_G(n, z).value; });
  }
  if (fn == "log_mult_sine") {
    int n = b.integer("n", true);
    return plain([n](CValue z) { return log_mult_sine(n, z).value; });
  }
  if (fn == "log_basic_sine" || fn == "log_basic_cosine") {
    int n = b.integer("n", true);
    bool cosine = fn == "log_basic_cosine";
    return plain([n, cosine, cfg](CValue z) {
      double x = require_real(z, "basic sine/cosine");
      return cosine ? log_basic_cosine(n, x, cfg).value
                    : log_basic_sine(n, x, cfg).value;
    });
  }
  if (fn == "digamma") return plain([](CValue z) { return digamma(z); });
  if (fn == "lgamma") {
    return plain([](CValue z) { return lgamma_complex(z); });
  }
  if (fn == "branch_log_j") {
    double lam = b.real("lambda", true);
    return plain([lam](CValue s) { return branch_log_j(lam, s); });
  }
  if (fn == "polylog") {
    int m = b.integer("m", true);
    return plain([m](CValue z) { return polylog(m, z); });
  }
  if (fn == "J_direct" || fn == "J_decomposed" || fn == "J_m1_quadrature" ||
      fn == "J_m1_beta_series" || fn == "J_m2_series") {
    int m = b.integer("m", true);
    double t = b.real("t", true);
    return plain([fn, m, t, cfg](CValue w) {
      if (fn == "J_direct") return J_direct(m, w, t, cfg);
      if (fn == "J_decomposed") return J_decomposed(m, w, t, cfg);
      if (fn == "J_m1_quadrature") return J_m1_quadrature(m, w, t, cfg);
      if (fn == "J_m1_beta_series") return J_m1_beta_series(m, w, t);
      return J_m2_series(m, w, t);
    });
  }
  if (fn == "J_dw0_closed") {
    int m = b.integer("m", true);
    return plain([m](CValue s) {
      return J_dw0_closed(m, require_real(s, "J_dw0_closed"));
    });
  }
  if (fn == "R_series" || fn == "R_closed") {
    int m = b.integer("m", true);
    int terms = b.integer("terms", false, 0);
    bool series = fn == "R_series";
    return plain([m, terms, series](CValue s) {
      double t = require_real(s, "remainder series");
      return series ? R_series(m, t, terms) : R_closed(m, t);
    });
  }
  if (fn == "Phi_integral" || fn == "Phi_closed") {
    int m = b.integer("m", true);
    double t = b.real("t", true);
    bool integral = fn == "Phi_integral";
    return plain([m, t, integral, cfg](CValue z) {
      return integral ? Phi_integral(m, t, z, cfg) : Phi_closed(m, t, z);
    });
  }
  if (fn == "log_phi") {
    int r = b.integer("r", true);
    PhiForm form = parse_form(b.str("form", "barnes"));
    return plain([r, form](CValue s) { return log_phi(r, s, form).value; });
  }
  if (fn == "log_phi_from_moments") {
    int r = b.integer("r", true);
    return plain([r](CValue s) {
      return log_phi_from_moments(r, require_real(s, "moment assembly")).value;
    });
  }
  if (fn == "phi_fe_residual") {
    int r = b.integer("r", true);
    return plain([r](CValue s) { return phi_fe_residual(r, s); });
  }

  // Spectrum-backed functions.
  const LengthSpectrum& spec = resolve_spectrum(opts, spec_storage);
  if (fn == "log_poly_selberg" || fn == "log_poly_selberg_product") {
    int m = b.integer("m", true);
    bool product = fn == "log_poly_selberg_product";
    return [m, product, &spec, pol](CValue s) {
      double tail = 0.0;
      CValue v = product ? log_poly_selberg_product(m, s, spec, pol, &tail)
                         : log_poly_selberg(m, s, spec, pol, &tail);
      return Row{s, v, tail, ""};
    };
  }
  if (fn == "log_milnor_selberg") {
    int r = b.integer("r", true);
    return plain(
        [r, &spec, pol](CValue s) {
          return log_milnor_selberg(r, s, spec, pol);
        });
  }
  if (fn == "log_higher_det_geom") {
    int r = b.integer("r", true);
    return plain([r, &spec, pol](CValue s) {
      return log_higher_det_geom(r, s, spec, pol);
    });
  }
  if (fn == "log_complete_MS") {
    int r = b.integer("r", true);
    return plain(
        [r, &spec, pol](CValue s) { return log_complete_MS(r, s, spec, pol); });
  }
  if (fn == "ladder_residual_poly") {
    int m = b.integer("m", true);
    return plain([m, &spec, pol, cfg](CValue s) {
      return ladder_residual_poly(m, s, spec, pol, cfg);
    });
  }
  if (fn == "ladder_residual_MS") {
    int r = b.integer("r", true);
    return plain([r, &spec, pol, cfg](CValue s) {
      return ladder_residual_MS(r, s, spec, pol, cfg);
    });
  }
  if (fn == "iterated_integral_check") {
    int m = b.integer("m", true);
    CValue a = b.cval("a", true);
    return plain([m, a, &spec, pol, cfg](CValue s) {
      return iterated_integral_check(m, s, a, spec, pol, cfg);
    });
  }
  if (fn == "fe_diagnostic_MS") {
    int r = b.integer("r", true);
    CValue left = b.cval("left", false, CValue(0, 0));
    return plain([r, left, &spec, pol](CValue s) {
      return fe_diagnostic_MS(r, s, left, spec, pol);
    });
  }
  throw hdet::domain_error("unknown function: " + fn);
}

Row evaluate_row(const Evaluator& ev, CValue s) {
  try {
    return ev(s);
  } catch (const hdet::accuracy_error& e) {
    Row row{s, e.best_estimate, e.err_bound, e.what()};
    return row;
  } catch (const std::exception& e) {
    Row row;
    row.s = s;
    row.val = CValue(std::nan(""), std::nan(""));
    row.err_bound = std::numeric_limits<double>::infinity();
    row.error = e.what();
    return row;
  }
}

// ---- output writers ---------------------------------------------------------

std::string rows_to_csv(const std::vector<Row>& rows) {
  std::string out = "re_s,im_s,re_val,im_val,err_bound\n";
  for (const Row& r : rows) {
    out += num17(r.s.real()) + "," + num17(r.s.imag()) + "," +
           num17(r.val.real()) + "," + num17(r.val.imag()) + "," +
           num17(r.err_bound) + "\n";
  }
  return out;
}

std::string rows_to_json(const std::vector<Row>& rows) {
  std::string out = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    out += i ? ",\n " : "\n ";
    out += "{\"re_s\":" + json_number(r.s.real()) +
           ",\"im_s\":" + json_number(r.s.imag()) +
           ",\"re_val\":" + json_number(r.val.real()) +
           ",\"im_val\":" + json_number(r.val.imag()) +
           ",\"err_bound\":" + json_number(r.err_bound);
    if (!r.error.empty()) out += ",\"error\":" + json_escape(r.error);
    out += "}";
  }
  out += rows.empty() ? "]" : "\n]";
  out += "\n";
  return out;
}

std::string reports_to_json(const std::vector<hdet::VerificationReport>& reps) {
  std::string out = "{\"suites\":[";
  bool all = true;
  for (size_t i = 0; i < reps.size(); ++i) {
    const auto& rep = reps[i];
    all = all && rep.all_passed();
    out += i ? ",\n " : "\n ";
    out += "{\"suite\":" + json_escape(rep.suite) + ",\"cases\":[";
    for (size_t j = 0; j < rep.cases.size(); ++j) {
      const auto& c = rep.cases[j];
      out += j ? ",\n   " : "\n   ";
      out += "{\"name\":" + json_escape(c.name) +
             ",\"point\":" + json_escape(c.point) +
             ",\"residual\":" + json_number(c.residual) +
             ",\"tolerance\":" + json_number(c.tolerance) +
             ",\"passed\":" + (c.passed ? std::string("true")
                                        : std::string("false")) +
             "}";
    }
    out += "],\"cases_passed\":" + std::to_string(rep.cases_passed()) +
           ",\"cases_total\":" + std::to_string(rep.cases_total()) +
           ",\"max_residual\":" + json_number(rep.max_residual()) + "}";
  }
  out += "],\"all_passed\":";
  out += all ? "true" : "false";
  out += "}\n";
  return out;
}

// Returns false when the path cannot be opened for writing.
bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) return false;
  f << text;
  f.flush();
  return f.good();
}

// ---- subcommand drivers -------------------------------------------------------

int run_eval(const std::string& fn, const std::vector<std::string>& tokens,
             const CommonOpts& opts) {
  Bindings b;
  std::optional<hdet::LengthSpectrum> storage;
  Evaluator ev;
  try {
    b = parse_bindings(tokens);
    if (b.points.empty()) {
      throw hdet::domain_error("no evaluation points; pass s=VALUE bindings");
    }
    ev = make_evaluator(fn, b, opts, storage);
  } catch (const hdet::spectrum_parse_error& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line << ", column "
              << e.column << ")\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<Row> rows;
  bool any_error = false;
  for (CValue s : b.points) {
    rows.push_back(evaluate_row(ev, s));
    if (!rows.back().error.empty()) {
      any_error = true;
      std::cerr << "error row s=(" << num17(s.real()) << ","
                << num17(s.imag()) << "): " << rows.back().error << "\n";
    }
  }
  std::string text =
      opts.format == "json" ? rows_to_json(rows) : rows_to_csv(rows);
  if (!emit(text, opts.out_path)) {
    std::cerr << "error: cannot write " << opts.out_path << "\n";
    return 4;
  }
  return any_error ? 2 : 0;
}

int run_table(const std::string& fn, const std::vector<std::string>& tokens,
              const CommonOpts& opts) {
  Bindings b;
  std::optional<hdet::LengthSpectrum> storage;
  Evaluator ev;
  struct Axis {
    double start = 0, stop = 0;
    int count = 1;
  };
  auto parse_axis = [](const std::string& text, const char* what) {
    Axis ax;
    char trailing = 0;
    int got = std::sscanf(text.c_str(), "%lf:%lf:%d%c", &ax.start, &ax.stop,
                          &ax.count, &trailing);
    if (got != 3 || ax.count < 1 || (ax.count > 1 && ax.stop < ax.start)) {
      throw hdet::domain_error(std::string(what) +
                               " axis must be START:STOP:COUNT with count >= "
                               "1 and stop >= start");
    }
    return ax;
  };
  Axis re_ax, im_ax;
  try {
    b = parse_bindings(tokens);
    if (!b.has("re")) {
      throw hdet::domain_error("table needs re=START:STOP:COUNT");
    }
    re_ax = parse_axis(b.kv.at("re"), "re");
    if (b.has("im")) im_ax = parse_axis(b.kv.at("im"), "im");
    b.kv.erase("re");
    b.kv.erase("im");
    ev = make_evaluator(fn, b, opts, storage);
  } catch (const hdet::spectrum_parse_error& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line << ", column "
              << e.column << ")\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<Row> rows;
  for (int i = 0; i < re_ax.count; ++i) {
    double re = re_ax.count == 1
                    ? re_ax.start
                    : re_ax.start + (re_ax.stop - re_ax.start) * i /
                          (re_ax.count - 1);
    for (int j = 0; j < im_ax.count; ++j) {
      double im = im_ax.count == 1
                      ? im_ax.start
                      : im_ax.start + (im_ax.stop - im_ax.start) * j /
                            (im_ax.count - 1);
      rows.push_back(evaluate_row(ev, CValue(re, im)));
    }
  }
  std::string text =
      opts.format == "json" ? rows_to_json(rows) : rows_to_csv(rows);
  if (!emit(text, opts.out_path)) {
    std::cerr << "error: cannot write " << opts.out_path << "\n";
    return 4;
  }
  return 0;
}

int run_verify(const std::string& selector, const CommonOpts& opts) {
  std::vector<hdet::VerificationReport> reports;
  hdet::ToleranceConfig cfg = make_cfg(opts);
  try {
    if (selector == "all") {
      reports = hdet::run_all(cfg);
    } else {
      reports.push_back(hdet::run_suite(selector, cfg));
    }
  } catch (const std::exception& e) {
    std::cerr << "verification crashed: " << e.what() << "\n";
    return 3;
  }
  std::string text = reports_to_json(reports);
  std::cout << text;
  if (!opts.out_path.empty() && !emit(text, opts.out_path)) {
    std::cerr << "warning: cannot write " << opts.out_path << "\n";
  }
  for (const auto& rep : reports) std::cerr << hdet::format_report(rep);
  bool ok = true;
  for (const auto& rep : reports) ok = ok && rep.all_passed();
  return ok ? 0 : 1;
}

int run_spectrum_info(const std::string& path) {
  try {
    hdet::LengthSpectrum spec = hdet::load_spectrum_file(path);
    double lo = spec.primitives.front().norm;
    double hi = spec.primitives.back().norm;
    std::cout << "label: " << spec.label << "\n"
              << "genus: " << spec.genus << "\n"
              << "primitives: " << spec.primitives.size() << "\n"
              << "norm_min: " << num17(lo) << "\n"
              << "norm_max: " << num17(hi) << "\n"
              << "spectral_gap: " << num17(spec.spectral_gap()) << "\n";
    return 0;
  } catch (const hdet::spectrum_parse_error& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line << ", column "
              << e.column << ")\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hdet: multiple gamma / multiple sine special functions, "
      "higher-order Selberg zetas, and their verification suites"};
  app.require_subcommand(1);

  std::string eval_fn;
  std::vector<std::string> eval_tokens;
  CommonOpts eval_opts;
  CLI::App* eval = app.add_subcommand(
      "eval", "evaluate a function at s=... points (key=value bindings)");
  eval->add_option("function", eval_fn, "function id")->required();
  eval->add_option("bindings", eval_tokens,
                   "key=value bindings; repeat s=POINT for each point");
  attach_common(eval, &eval_opts);

  std::string table_fn;
  std::vector<std::string> table_tokens;
  CommonOpts table_opts;
  CLI::App* table = app.add_subcommand(
      "table", "evaluate over a grid re=A:B:N [im=C:D:M] (row-major)");
  table->add_option("function", table_fn, "function id")->required();
  table->add_option("bindings", table_tokens,
                    "axis specs and key=value bindings");
  attach_common(table, &table_opts);

  std::string suite = "all";
  CommonOpts verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "run verification suites and emit a JSON report");
  verify
      ->add_option("suite", suite,
                   "combinatorics|hurwitz|multigamma|gammafactor|selberg|all")
      ->default_val("all");
  attach_common(verify, &verify_opts);

  std::string info_path;
  CLI::App* info = app.add_subcommand(
      "spectrum-info", "summarize a length-spectrum JSON file");
  info->add_option("path", info_path, "spectrum file")->required();

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) return run_eval(eval_fn, eval_tokens, eval_opts);
  if (table->parsed()) return run_table(table_fn, table_tokens, table_opts);
  if (verify->parsed()) return run_verify(suite, verify_opts);
  if (info->parsed()) return run_spectrum_info(info_path);
  return 0;
}
