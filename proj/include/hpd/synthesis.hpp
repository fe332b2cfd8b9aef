#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "hpd/profile.hpp"

namespace hpd {

using Rational = boost::rational<long long>;
std::string to_string(const Rational& q);

enum class ReportTarget { Y, T, XT, YS };
std::string to_string(ReportTarget t);

struct ReportComponent {
  std::string description;
  std::optional<long long> euler;  // empty for the symbolic chi(E)
};

struct DecompositionReport {
  ReportTarget target = ReportTarget::XT;
  std::vector<ReportComponent> components;
  int omitted = 0;  // zero components dropped from the list

  bool has_E() const;
  long long ambient_euler() const;  // sum over the non-symbolic components
  int ambient_count() const;
  std::string total_expr() const;  // "chi(E) + 12" or "15"
};

struct SpecMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

DecompositionReport decompose_Y(const LefschetzProfile& pX);
DecompositionReport decompose_T(const LefschetzProfile& pS);
// (XT report, YS report); both carry the shared chi(E).
std::pair<DecompositionReport, DecompositionReport> intersect_decompositions(const LefschetzProfile& pX,
                                                                             const LefschetzProfile& pS);

struct PluckerResult {
  bool holds = false;
  Rational lhs, rhs;  // chi(X_T) - chi(X)chi(T)/N and chi(Y_S) - chi(Y)chi(S)/N
};
PluckerResult plucker_check(long long chiX, long long chiY, long long chiS, long long chiT, long long chiXT,
                            long long chiYS, long long N);

struct Prediction {
  Rational value;
  bool integral = true;
  std::string warning;  // set when value is not an integer
};
Prediction plucker_predict(const LefschetzProfile& pX, const LefschetzProfile& pS, long long chiXT);

struct EulerH {
  bool holds = false;
  Rational via_XT, via_YS;  // the two expressions for chi(H)
};
EulerH euler_H_consistency(const LefschetzProfile& pX, const LefschetzProfile& pS, long long chiXT,
                           long long chiYS);

struct ExampleRecord {
  std::string name, title;
  long long N = 0, chiX = 0, chiY = 0, chiS = 0, chiT = 0;
  std::optional<long long> chiXT, chiYS;
  std::optional<std::pair<LefschetzProfile, LefschetzProfile>> profiles;
  std::string source;

  bool complete() const { return chiXT.has_value() && chiYS.has_value(); }
};

struct ExampleDB {
  int version = 0;
  std::vector<ExampleRecord> records;
};

// Schema errors throw ParseError.
ExampleDB parse_examples(const std::string& text);
const ExampleDB& builtin_db();
const std::vector<ExampleRecord>& builtin_examples();
// Matches names ignoring case and punctuation, so "Gr(2,7)" finds "Gr27".
std::optional<ExampleRecord> find_example(const std::vector<ExampleRecord>& db, const std::string& name);

}  // namespace hpd
