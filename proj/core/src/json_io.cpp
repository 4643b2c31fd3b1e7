#include "mudom/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mudom::jsonio {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

}  // namespace

void Writer::comma() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (first_.empty()) return;
  if (!first_.back()) out_ += ',';
  first_.back() = false;
}

void Writer::begin_object() {
  comma();
  out_ += '{';
  first_.push_back(true);
}

void Writer::end_object() {
  first_.pop_back();
  out_ += '}';
}

void Writer::begin_array() {
  comma();
  out_ += '[';
  first_.push_back(true);
}

void Writer::end_array() {
  first_.pop_back();
  out_ += ']';
}

void Writer::key(const std::string& k) {
  comma();
  out_ += '"';
  out_ += escape(k);
  out_ += "\":";
  pending_key_ = true;
}

void Writer::value(const std::string& v) {
  comma();
  out_ += '"';
  out_ += escape(v);
  out_ += '"';
}

void Writer::value(const char* v) { value(std::string(v)); }

void Writer::value(double v) {
  comma();
  out_ += format_double(v);
}

void Writer::value(int v) {
  comma();
  out_ += std::to_string(v);
}

void Writer::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
}

void Writer::value(Complex z) {
  begin_array();
  value(z.real());
  value(z.imag());
  end_array();
}

void Writer::raw(const std::string& fragment) {
  comma();
  out_ += fragment;
}

void write_point3(Writer& w, const Point3& p) {
  w.begin_array();
  w.value(p.c1);
  w.value(p.c2);
  w.value(p.c3);
  w.end_array();
}

void write_point5(Writer& w, const Point5& p) {
  w.begin_array();
  w.value(p.x1);
  w.value(p.x2);
  w.value(p.x3);
  w.value(p.y1);
  w.value(p.y2);
  w.end_array();
}

void write_point7(Writer& w, const Point7& p) {
  w.begin_array();
  for (int i = 0; i < 7; ++i) w.value(p[i]);
  w.end_array();
}

void write_config(Writer& w, const ScanConfig& cfg) {
  w.begin_object();
  w.key("torus_n");
  w.value(cfg.torus_n);
  w.key("disc_nr");
  w.value(cfg.disc_nr);
  w.key("disc_ntheta");
  w.value(cfg.disc_ntheta);
  w.key("refine_iters");
  w.value(cfg.refine_iters);
  w.key("tol");
  w.value(cfg.tol);
  w.key("boundary_band");
  w.value(cfg.boundary_band);
  w.end_object();
}

void write_verdict(Writer& w, const Verdict& v) {
  w.begin_object();
  w.key("state");
  w.value(region_name(v.state));
  w.key("margin");
  w.value(v.margin);
  w.key("witness");
  w.begin_array();
  for (Complex z : v.witness) w.value(z);
  w.end_array();
  w.key("config");
  write_config(w, v.config);
  w.end_object();
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Inside: return "inside";
    case Region::BoundaryBand: return "boundary_band";
    default: return "outside";
  }
}

namespace {

using nlohmann::json;

Complex complex_from(const json& j) {
  Complex z;
  if (j.is_number()) {
    z = Complex(j.get<double>(), 0.0);
  } else if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
    if (!j[0].is_number() || (j.size() == 2 && !j[1].is_number()))
      throw DomainError(Fault::DomainViolation, "complex entries must be numbers");
    z = Complex(j[0].get<double>(), j.size() == 2 ? j[1].get<double>() : 0.0);
  } else if (j.is_object() && j.contains("re")) {
    z = Complex(j.at("re").get<double>(), j.value("im", 0.0));
  } else {
    throw DomainError(Fault::DomainViolation,
                      "expected a number, [re, im] pair, or {re, im} object");
  }
  if (!is_finite(z)) throw DomainError(Fault::NonFiniteInput, "complex entry is not finite");
  return z;
}

// Accepts either a bare array or an object wrapping it under `key`.
json unwrap(const std::string& text, const char* key, size_t want) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(Fault::DomainViolation, std::string("JSON parse failure: ") + e.what());
  }
  if (j.is_object() && j.contains(key)) j = j.at(key);
  if (!j.is_array())
    throw DomainError(Fault::DomainViolation, std::string("expected an array under '") + key + "'");
  if (want != 0 && j.size() != want)
    throw DomainError(Fault::DomainViolation, "array has the wrong number of entries");
  return j;
}

}  // namespace

Complex parse_complex(const std::string& json_text) {
  try {
    return complex_from(json::parse(json_text));
  } catch (const json::exception& e) {
    throw DomainError(Fault::DomainViolation, std::string("JSON parse failure: ") + e.what());
  }
}

Point5 parse_point5_text(const std::string& json_text) {
  const json j = unwrap(json_text, "point", 5);
  Point5 p;
  p.x1 = complex_from(j[0]);
  p.x2 = complex_from(j[1]);
  p.x3 = complex_from(j[2]);
  p.y1 = complex_from(j[3]);
  p.y2 = complex_from(j[4]);
  return p;
}

Point7 parse_point7_text(const std::string& json_text) {
  const json j = unwrap(json_text, "point", 7);
  Point7 p;
  for (int i = 0; i < 7; ++i) p[i] = complex_from(j[static_cast<size_t>(i)]);
  return p;
}

Matrix3 parse_matrix3_text(const std::string& json_text) {
  const json j = unwrap(json_text, "matrix", 0);
  Matrix3 m;
  if (j.size() == 9) {
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) m(i, k) = complex_from(j[static_cast<size_t>(3 * i + k)]);
    return m;
  }
  if (j.size() == 3) {
    for (int i = 0; i < 3; ++i) {
      const json& row = j[static_cast<size_t>(i)];
      if (!row.is_array() || row.size() != 3)
        throw DomainError(Fault::DomainViolation, "matrix rows must have three entries");
      for (int k = 0; k < 3; ++k) m(i, k) = complex_from(row[static_cast<size_t>(k)]);
    }
    return m;
  }
  throw DomainError(Fault::DomainViolation, "matrix must have 9 flat or 3x3 nested entries");
}

Point5 point5_from_file(const std::string& path) { return parse_point5_text(slurp(path)); }

Point7 point7_from_file(const std::string& path) { return parse_point7_text(slurp(path)); }

Matrix3 matrix3_from_file(const std::string& path) { return parse_matrix3_text(slurp(path)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError(Fault::DomainViolation, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mudom::jsonio
