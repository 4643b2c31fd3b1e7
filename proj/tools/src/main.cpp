// mudom: command line front end for the membership oracles, mu, boundary
// sets, Schwarz conditions, separation certificates, and slice plots.
// Output is JSON on stdout with every double at 17 significant digits, so a
// fixed invocation is byte-identical across runs. Exit codes: 0 ok,
// 2 violation (a tested mathematical claim failed), 1 error.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mudom/boundary.hpp"
#include "mudom/domain312.hpp"
#include "mudom/domain333.hpp"
#include "mudom/geometry.hpp"
#include "mudom/json_io.hpp"
#include "mudom/rng.hpp"
#include "mudom/schwarz.hpp"
#include "mudom/tetrablock.hpp"

namespace {

using namespace mudom;
using jsonio::Writer;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

void emit(const Writer& w) { std::fputs((w.str() + "\n").c_str(), stdout); }

int emit_error(const char* command, const char* fault, const std::string& message) {
  Writer w;
  w.begin_object();
  w.key("command");
  w.value(command);
  w.key("status");
  w.value("error");
  w.key("fault");
  w.value(fault);
  w.key("message");
  w.value(message);
  w.end_object();
  emit(w);
  return kExitError;
}

// Complex entries in CLI positions reuse the file syntax: a bare number or
// an [re, im] pair.
Complex parse_complex_arg(const std::string& text) { return jsonio::parse_complex(text); }

std::vector<Complex> parse_complex_array(const std::string& text, size_t want, const char* what) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(Fault::DomainViolation, std::string("JSON parse failure: ") + e.what());
  }
  if (j.is_object() && j.contains("point")) j = j.at("point");
  if (!j.is_array() || j.size() != want)
    throw DomainError(Fault::DomainViolation,
                      std::string(what) + " needs an array of " + std::to_string(want) + " entries");
  std::vector<Complex> out;
  out.reserve(want);
  for (const auto& e : j) out.push_back(parse_complex_arg(e.dump()));
  return out;
}

struct CommonFlags {
  int grid = 0;        // 0 keeps the ScanConfig default
  double tol = 0.0;    // idem
};

ScanConfig make_config(const CommonFlags& flags) {
  ScanConfig cfg;
  if (flags.grid > 0) {
    cfg.torus_n = std::max(8, flags.grid);
    cfg.disc_ntheta = std::max(8, flags.grid);
    cfg.disc_nr = std::max(2, flags.grid / 4);
  }
  if (flags.tol > 0.0) {
    cfg.tol = flags.tol;
    cfg.boundary_band = std::max(cfg.boundary_band, flags.tol);
  }
  validate(cfg);
  return cfg;
}

void write_kv_verdict(Writer& w, const char* key, const Verdict& v) {
  w.key(key);
  write_verdict(w, v);
}

// ---------------------------------------------------------------------------
// membership

int run_membership(const std::string& domain, const std::string& file, bool closure,
                   const CommonFlags& flags) {
  const ScanConfig cfg = make_config(flags);
  const std::string text = jsonio::slurp(file);
  Writer w;
  w.begin_object();
  w.key("command");
  w.value("membership");
  w.key("status");
  w.value("ok");
  w.key("domain");
  w.value(domain);
  w.key("closure");
  w.value(closure);
  w.key("point");
  Verdict v;
  if (domain == "e333") {
    const Point7 p = jsonio::parse_point7_text(text);
    jsonio::write_point7(w, p);
    v = closure ? in_Gamma_333(p, cfg) : in_G_333(p, cfg);
  } else if (domain == "e312") {
    const Point5 p = jsonio::parse_point5_text(text);
    jsonio::write_point5(w, p);
    v = closure ? in_Gamma_312(p, cfg) : in_G_312(p, cfg);
  } else if (domain == "tetra") {
    const auto e = parse_complex_array(text, 3, "tetra point");
    const Point3 p{e[0], e[1], e[2]};
    jsonio::write_point3(w, p);
    v = closure ? in_Gamma_tetra(p, cfg) : in_G_tetra(p, cfg);
  } else {  // bidisc
    const auto e = parse_complex_array(text, 2, "bidisc point");
    const Point2 p{e[0], e[1]};
    w.begin_array();
    w.value(p.s);
    w.value(p.p);
    w.end_array();
    v = closure ? in_Gamma_bidisc(p, cfg) : in_G_bidisc(p, cfg);
  }
  write_kv_verdict(w, "verdict", v);
  w.end_object();
  emit(w);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// mu

int run_mu(const std::string& file, const CommonFlags& flags) {
  const ScanConfig cfg = make_config(flags);
  const Matrix3 a = jsonio::matrix3_from_file(file);
  const MuResult m = mu_E333(a, cfg);
  Writer w;
  w.begin_object();
  w.key("command");
  w.value("mu");
  w.key("status");
  w.value("ok");
  w.key("mu");
  w.value(m.mu);
  w.key("witness_r");
  w.value(m.witness_r);
  w.key("iterations");
  w.value(m.iterations);
  w.key("degenerate");
  w.value(m.degenerate);
  w.end_object();
  emit(w);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// crosscheck

struct OracleRow {
  const char* name;
  Verdict verdict;
};

bool crosscheck_point(const Point7& x, const ScanConfig& cfg, int index, Writer& w) {
  const OracleRow rows[5] = {
      {"psi_torus", in_G_333(x, cfg)},
      {"fiber_x", in_G_333_fiberwise(x, FiberKind::X, cfg)},
      {"fiber_y", in_G_333_fiberwise(x, FiberKind::Y, cfg)},
      {"fiber_z", in_G_333_fiberwise(x, FiberKind::Z, cfg)},
      {"eta_bridge", in_G_via_eta(x, cfg)},
  };
  const Verdict evidence = r_poly_scan(x, cfg);

  double min_abs_margin = std::abs(rows[0].verdict.margin);
  bool states_equal = true;
  for (int i = 1; i < 5; ++i) {
    min_abs_margin = std::min(min_abs_margin, std::abs(rows[i].verdict.margin));
    if (rows[i].verdict.state != rows[0].verdict.state) states_equal = false;
  }
  const bool decisive = min_abs_margin > std::max(1e-6, 10.0 * cfg.boundary_band);
  // An interior zero of R_x is an unconditional exclusion; no oracle may
  // claim Inside across it.
  bool rpoly_consistent = true;
  if (evidence.state == Region::Outside) {
    for (const OracleRow& r : rows)
      if (r.verdict.state == Region::Inside) rpoly_consistent = false;
  }
  const bool agree = !decisive || (states_equal && rpoly_consistent);

  w.begin_object();
  w.key("index");
  w.value(index);
  w.key("point");
  jsonio::write_point7(w, x);
  w.key("oracles");
  w.begin_object();
  for (const OracleRow& r : rows) {
    w.key(r.name);
    w.begin_object();
    w.key("state");
    w.value(jsonio::region_name(r.verdict.state));
    w.key("margin");
    w.value(r.verdict.margin);
    w.end_object();
  }
  w.end_object();
  w.key("r_poly");
  w.begin_object();
  w.key("state");
  w.value(jsonio::region_name(evidence.state));
  w.key("margin");
  w.value(evidence.margin);
  w.end_object();
  w.key("decisive");
  w.value(decisive);
  w.key("agree");
  w.value(agree);
  w.end_object();
  return agree;
}

int run_crosscheck(const std::string& file, int samples, std::uint64_t seed, double bound,
                   const CommonFlags& flags) {
  const ScanConfig cfg = make_config(flags);
  std::vector<Point7> points;
  if (!file.empty()) {
    points.push_back(jsonio::point7_from_file(file));
  } else {
    if (samples <= 0)
      throw DomainError(Fault::DomainViolation, "crosscheck: --sample must be positive");
    if (!(bound > 0.0))
      throw DomainError(Fault::DomainViolation, "crosscheck: --norm-bound must be positive");
    for (int j = 0; j < samples; ++j) {
      Matrix3 a = random_contraction(seed + static_cast<std::uint64_t>(j), std::min(bound, 1.0));
      if (bound > 1.0)
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) a(r, c) *= bound;
      points.push_back(pi333(a));
    }
  }

  Writer w;
  w.begin_object();
  w.key("command");
  w.value("crosscheck");
  int disagreements = 0;
  {
    Writer body;
    body.begin_array();
    for (size_t i = 0; i < points.size(); ++i)
      if (!crosscheck_point(points[i], cfg, static_cast<int>(i), body)) ++disagreements;
    body.end_array();
    w.key("status");
    w.value(disagreements == 0 ? "ok" : "violation");
    w.key("seed");
    w.value(static_cast<int>(seed));
    w.key("samples");
    w.value(static_cast<int>(points.size()));
    w.key("norm_bound");
    w.value(bound);
    w.key("disagreements");
    w.value(disagreements);
    w.key("points");
    w.raw(body.str());
  }
  w.end_object();
  emit(w);
  return disagreements == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// boundary

int run_boundary(const std::string& set, const std::string& file, int unitaries,
                 std::uint64_t seed, const CommonFlags& flags) {
  const ScanConfig cfg = make_config(flags);
  Writer w;
  w.begin_object();
  w.key("command");
  w.value("boundary");
  if (!file.empty()) {
    w.key("status");
    w.value("ok");
    w.key("set");
    w.value(set);
    if (set == "K") {
      const Point7 p = jsonio::point7_from_file(file);
      w.key("point");
      jsonio::write_point7(w, p);
      w.key("deviation");
      w.value(k_deviation(p));
      write_kv_verdict(w, "verdict", in_K(p, cfg));
      const BridgeReport br = k_bridge_check(p, cfg);
      w.key("bridge");
      w.begin_object();
      w.key("k_state");
      w.value(jsonio::region_name(br.k_state));
      w.key("k1_joint_state");
      w.value(jsonio::region_name(br.k1_joint_state));
      w.key("agree");
      w.value(br.agree);
      w.key("worst_eta");
      w.value(br.worst_eta);
      w.key("worst_deviation");
      w.value(br.worst_deviation);
      w.end_object();
    } else {
      const Point5 p = jsonio::point5_from_file(file);
      w.key("point");
      jsonio::write_point5(w, p);
      w.key("deviation");
      w.value(k1_deviation(p));
      write_kv_verdict(w, "verdict", in_K1(p, cfg));
    }
    w.end_object();
    emit(w);
    return kExitOk;
  }

  if (unitaries <= 0)
    throw DomainError(Fault::DomainViolation, "boundary: need a point file or --unitaries");
  const UnitaryImageReport rep = unitary_image_checks(seed, unitaries, cfg);
  const bool ok = set == "K" ? rep.all_inside_k : rep.all_inside_k1;
  w.key("status");
  w.value(ok ? "ok" : "violation");
  w.key("set");
  w.value(set);
  w.key("unitaries");
  w.value(rep.count);
  w.key("seed");
  w.value(static_cast<int>(seed));
  w.key("report");
  w.begin_object();
  w.key("worst_k_deviation");
  w.value(rep.worst_k_deviation);
  w.key("worst_k1_deviation");
  w.value(rep.worst_k1_deviation);
  w.key("all_inside_k");
  w.value(rep.all_inside_k);
  w.key("all_inside_k1");
  w.value(rep.all_inside_k1);
  w.end_object();
  w.end_object();
  emit(w);
  return ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// schwarz

int run_schwarz(const std::string& lambda_text, const std::string& file,
                const CommonFlags& flags) {
  const ScanConfig cfg = make_config(flags);
  const Complex lambda0 = parse_complex_arg(lambda_text);
  const std::string text = jsonio::slurp(file);

  nlohmann::json probe;
  try {
    probe = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(Fault::DomainViolation, std::string("JSON parse failure: ") + e.what());
  }
  if (probe.is_object() && probe.contains("point")) probe = probe.at("point");
  const size_t arity = probe.is_array() ? probe.size() : 0;

  Writer w;
  w.begin_object();
  w.key("command");
  w.value("schwarz");
  bool ok = false;
  if (arity == 7) {
    const Point7 p = jsonio::parse_point7_text(text);
    const SchwarzReport333 rep = schwarz_necessary_333(lambda0, p, cfg);
    ok = rep.necessary_ok;
    w.key("status");
    w.value(ok ? "ok" : "violation");
    w.key("domain");
    w.value("e333");
    w.key("lambda0");
    w.value(rep.lambda0);
    w.key("quantities");
    w.begin_object();
    w.key("g1");
    w.value(rep.g1);
    w.key("g2");
    w.value(rep.g2);
    w.key("h1");
    w.value(rep.h1);
    w.key("h2");
    w.value(rep.h2);
    w.key("i1");
    w.value(rep.i1);
    w.key("i2");
    w.value(rep.i2);
    w.end_object();
    w.key("necessary_ok");
    w.value(rep.necessary_ok);
    static const char* kKindNames[6] = {"g1", "g2", "h1", "h2", "i1", "i2"};
    w.key("worst");
    w.value(kKindNames[static_cast<int>(rep.worst)]);
    w.key("worst_witness");
    w.value(rep.worst_witness);
  } else if (arity == 5) {
    const Point5 p = jsonio::parse_point5_text(text);
    const SchwarzReport312 rep = schwarz_necessary_312(lambda0, p, cfg);
    ok = rep.necessary_ok;
    w.key("status");
    w.value(ok ? "ok" : "violation");
    w.key("domain");
    w.value("e312");
    w.key("lambda0");
    w.value(rep.lambda0);
    w.key("quantities");
    w.begin_object();
    w.key("gt1");
    w.value(rep.gt1);
    w.key("gt2");
    w.value(rep.gt2);
    w.end_object();
    w.key("necessary_ok");
    w.value(rep.necessary_ok);
    w.key("worst_witness");
    w.value(rep.worst_witness);
  } else {
    throw DomainError(Fault::DomainViolation, "schwarz: point must have 7 or 5 entries");
  }
  w.end_object();
  emit(w);
  return ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// separate

int run_separate(const std::string& file, const CommonFlags& flags) {
  const ScanConfig cfg = make_config(flags);
  const Point7 p = jsonio::point7_from_file(file);
  SeparationCertificate cert;
  try {
    cert = separate(p, cfg);
  } catch (const DomainError& e) {
    if (e.fault() == Fault::SeparationNotCertified) {
      Writer w;
      w.begin_object();
      w.key("command");
      w.value("separate");
      w.key("status");
      w.value("violation");
      w.key("message");
      w.value(e.what());
      w.end_object();
      emit(w);
      return kExitViolation;
    }
    throw;
  }
  Writer w;
  w.begin_object();
  w.key("command");
  w.value("separate");
  w.key("status");
  w.value("ok");
  w.key("kind");
  w.value(cert.kind == CertKind::FNPolynomial ? "fn_polynomial" : "tetra_lift");
  if (cert.kind == CertKind::FNPolynomial) {
    w.key("z0");
    w.value(cert.z0);
    w.key("w0");
    w.value(cert.w0);
    w.key("n");
    w.value(cert.n);
    w.key("epsilon");
    w.value(cert.epsilon);
    w.key("sup_on_sample");
    w.value(cert.sup_on_sample);
    w.key("value_at_target");
    w.value(cert.value_at_target);
  } else {
    w.key("triple");
    w.value(cert.triple);
    w.key("triple_margin");
    w.value(cert.triple_margin);
  }
  w.end_object();
  emit(w);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// slice

struct PlaneSpec {
  std::string domain;  // e333 | e312
  int i = 1, j = 2;    // 1-based coordinate indices swept with real values
};

PlaneSpec parse_plane(const std::string& spec) {
  PlaneSpec p;
  const size_t c1 = spec.find(':');
  const size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw DomainError(Fault::DomainViolation, "slice: --plane must look like e333:1:7");
  p.domain = spec.substr(0, c1);
  try {
    p.i = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
    p.j = std::stoi(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw DomainError(Fault::DomainViolation, "slice: coordinate indices must be integers");
  }
  const int arity = p.domain == "e333" ? 7 : (p.domain == "e312" ? 5 : 0);
  if (arity == 0)
    throw DomainError(Fault::DomainViolation, "slice: plane domain must be e333 or e312");
  if (p.i < 1 || p.i > arity || p.j < 1 || p.j > arity || p.i == p.j)
    throw DomainError(Fault::DomainViolation, "slice: coordinate indices out of range");
  return p;
}

int run_slice(const std::string& plane, int res, double range, const std::string& base_file,
              bool closure, const std::string& format, const std::string& out_file,
              const CommonFlags& flags) {
  CommonFlags adjusted = flags;
  if (adjusted.grid == 0) adjusted.grid = 64;  // plot grids favor speed
  const ScanConfig cfg = make_config(adjusted);
  const PlaneSpec p = parse_plane(plane);
  if (res < 2) throw DomainError(Fault::DomainViolation, "slice: --res must be at least 2");
  if (!(range > 0.0)) throw DomainError(Fault::DomainViolation, "slice: --range must be positive");

  Point7 base7;
  Point5 base5;
  if (!base_file.empty()) {
    if (p.domain == "e333") base7 = jsonio::point7_from_file(base_file);
    else base5 = jsonio::point5_from_file(base_file);
  }

  auto classify = [&](double a, double b) {
    if (p.domain == "e333") {
      Point7 x = base7;
      x[p.i - 1] = Complex(a, x[p.i - 1].imag());
      x[p.j - 1] = Complex(b, x[p.j - 1].imag());
      return closure ? in_Gamma_333(x, cfg).state : in_G_333(x, cfg).state;
    }
    Point5 x = base5;
    Complex* slots[5] = {&x.x1, &x.x2, &x.x3, &x.y1, &x.y2};
    *slots[p.i - 1] = Complex(a, slots[p.i - 1]->imag());
    *slots[p.j - 1] = Complex(b, slots[p.j - 1]->imag());
    return closure ? in_Gamma_312(x, cfg).state : in_G_312(x, cfg).state;
  };

  auto coord = [&](int k) { return -range + 2.0 * range * k / (res - 1); };

  std::string payload;
  if (format == "csv") {
    payload = "i,j,a,b,state\n";
    for (int ii = 0; ii < res; ++ii) {
      for (int jj = 0; jj < res; ++jj) {
        const double a = coord(ii), b = coord(jj);
        payload += std::to_string(ii) + "," + std::to_string(jj) + "," +
                   jsonio::format_double(a) + "," + jsonio::format_double(b) + "," +
                   jsonio::region_name(classify(a, b)) + "\n";
      }
    }
  } else {
    Writer w;
    w.begin_object();
    w.key("command");
    w.value("slice");
    w.key("status");
    w.value("ok");
    w.key("plane");
    w.value(plane);
    w.key("closure");
    w.value(closure);
    w.key("res");
    w.value(res);
    w.key("range");
    w.value(range);
    w.key("rows");
    w.begin_array();
    for (int ii = 0; ii < res; ++ii) {
      w.begin_array();
      for (int jj = 0; jj < res; ++jj) w.value(jsonio::region_name(classify(coord(ii), coord(jj))));
      w.end_array();
    }
    w.end_array();
    w.end_object();
    payload = w.str() + "\n";
  }

  if (out_file.empty()) {
    std::fputs(payload.c_str(), stdout);
  } else {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw DomainError(Fault::DomainViolation, "slice: cannot write " + out_file);
    out << payload;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"membership, mu, boundary, Schwarz, and separation oracles for the "
               "E(3;3;1,1,1) and E(3;2;1,2) quotient domains"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  app.add_option("--grid", flags.grid, "scan grid size (torus points per axis)");
  app.add_option("--tol", flags.tol, "numerical tolerance for scans and guards");

  std::string domain, point_file, set = "K", lambda_text, plane, base_file, format = "csv",
              out_file;
  bool closure = false;
  int samples = 0, unitaries = 0, res = 41;
  std::uint64_t seed = 1;
  double bound = 0.95, range = 1.5;

  CLI::App* c_member = app.add_subcommand("membership", "domain membership verdict for a point");
  c_member->add_option("domain", domain, "e333 | e312 | tetra | bidisc")
      ->required()
      ->check(CLI::IsMember({"e333", "e312", "tetra", "bidisc"}));
  c_member->add_option("point-file", point_file, "JSON point file")->required();
  c_member->add_flag("--closure", closure, "test the closed domain instead of the open one");

  CLI::App* c_mu = app.add_subcommand("mu", "structured singular value of a 3x3 matrix");
  c_mu->add_option("matrix-file", point_file, "JSON matrix file")->required();

  CLI::App* c_cross = app.add_subcommand("crosscheck", "run all equivalent membership oracles");
  c_cross->add_option("point-file", point_file, "JSON point file (omit to sample)");
  c_cross->add_option("--sample", samples, "number of sampled pi-images");
  c_cross->add_option("--seed", seed, "sampling seed");
  c_cross->add_option("--norm-bound", bound, "contraction norm bound (>1 scales the matrix)");

  CLI::App* c_bound = app.add_subcommand("boundary", "candidate distinguished-boundary checks");
  c_bound->add_option("--set", set, "K | K1")->check(CLI::IsMember({"K", "K1"}));
  c_bound->add_option("point-file", point_file, "JSON point file (omit with --unitaries)");
  c_bound->add_option("--unitaries", unitaries, "number of Haar unitaries to push through");
  c_bound->add_option("--seed", seed, "sampling seed");

  CLI::App* c_schwarz = app.add_subcommand("schwarz", "Schwarz-lemma necessary conditions");
  c_schwarz->add_option("--lambda0", lambda_text, "interpolation node, number or [re,im]")
      ->required();
  c_schwarz->add_option("point-file", point_file, "JSON point file (7 or 5 entries)")->required();

  CLI::App* c_sep = app.add_subcommand("separate", "separation certificate for an outside point");
  c_sep->add_option("point-file", point_file, "JSON point file (7 entries)")->required();

  CLI::App* c_slice = app.add_subcommand("slice", "verdict grid over a 2-D real affine slice");
  c_slice->add_option("--plane", plane, "slice spec, e.g. e333:1:7 (1-based coordinates)")
      ->required();
  c_slice->add_option("--res", res, "grid resolution per axis");
  c_slice->add_option("--range", range, "half width of the swept square");
  c_slice->add_option("--base", base_file, "JSON base point for the fixed coordinates");
  c_slice->add_flag("--closure", closure, "classify against the closed domain");
  c_slice->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  c_slice->add_option("--out", out_file, "write the grid to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  const char* command = "mudom";
  try {
    if (c_member->parsed()) {
      command = "membership";
      return run_membership(domain, point_file, closure, flags);
    }
    if (c_mu->parsed()) {
      command = "mu";
      return run_mu(point_file, flags);
    }
    if (c_cross->parsed()) {
      command = "crosscheck";
      return run_crosscheck(point_file, samples, seed, bound, flags);
    }
    if (c_bound->parsed()) {
      command = "boundary";
      return run_boundary(set, point_file, unitaries, seed, flags);
    }
    if (c_schwarz->parsed()) {
      command = "schwarz";
      return run_schwarz(lambda_text, point_file, flags);
    }
    if (c_sep->parsed()) {
      command = "separate";
      return run_separate(point_file, flags);
    }
    command = "slice";
    return run_slice(plane, res, range, base_file, closure, format, out_file, flags);
  } catch (const DomainError& e) {
    return emit_error(command, fault_name(e.fault()), e.what());
  } catch (const std::exception& e) {
    return emit_error(command, "unexpected", e.what());
  }
}
