// JSON encodings shared by the CLI and tests. Complex -> [re, im];
// Point5/Point7 -> arrays of complex; Matrix3 -> row-major array of 9.
// Output goes through a fixed-schema writer that prints every double with
// 17 significant digits, so repeated runs are byte-identical.
#pragma once

#include <string>

#include "mudom/domain333.hpp"
#include "mudom/types.hpp"

namespace mudom::jsonio {

std::string format_double(double v);

// Minimal ordered JSON writer (objects/arrays/strings/numbers/bools).
class Writer {
 public:
  std::string str() const { return out_; }
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void value(const std::string& v);
  void value(const char* v);
  void value(double v);
  void value(int v);
  void value(bool v);
  void value(Complex z);
  void raw(const std::string& fragment);

 private:
  void comma();
  std::string out_;
  std::vector<bool> first_;
  bool pending_key_ = false;
};

void write_point3(Writer& w, const Point3& p);
void write_point5(Writer& w, const Point5& p);
void write_point7(Writer& w, const Point7& p);
void write_config(Writer& w, const ScanConfig& cfg);
void write_verdict(Writer& w, const Verdict& v);

const char* region_name(Region r);

// Parsers throw DomainError(DomainViolation / NonFiniteInput) on malformed input.
Complex parse_complex(const std::string& json_text);
Point5 parse_point5_text(const std::string& json_text);
Point7 parse_point7_text(const std::string& json_text);
Matrix3 parse_matrix3_text(const std::string& json_text);

Point5 point5_from_file(const std::string& path);
Point7 point7_from_file(const std::string& path);
Matrix3 matrix3_from_file(const std::string& path);

// Reads a whole file; throws DomainError(DomainViolation) when unreadable.
std::string slurp(const std::string& path);

}  // namespace mudom::jsonio
