#include "hpd/synthesis.hpp"

#include <cctype>

#include "hpd/profile_io.hpp"
#include "json.hpp"

namespace hpd {

extern const char* const kExamplesJson;  // generated from data/examples.json

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(ReportTarget t) {
  switch (t) {
    case ReportTarget::Y: return "Y";
    case ReportTarget::T: return "T";
    case ReportTarget::XT: return "XT";
    case ReportTarget::YS: return "YS";
  }
  return "?";
}

bool DecompositionReport::has_E() const {
  for (const auto& c : components)
    if (!c.euler) return true;
  return false;
}

long long DecompositionReport::ambient_euler() const {
  long long s = 0;
  for (const auto& c : components)
    if (c.euler) s += *c.euler;
  return s;
}

int DecompositionReport::ambient_count() const {
  int n = 0;
  for (const auto& c : components)
    if (c.euler) ++n;
  return n;
}

std::string DecompositionReport::total_expr() const {
  if (!has_E()) return std::to_string(ambient_euler());
  const long long a = ambient_euler();
  if (a == 0) return "chi(E)";
  return "chi(E) " + std::string(a < 0 ? "- " : "+ ") + std::to_string(a < 0 ? -a : a);
}

namespace {

std::string tw(int t) { return "(" + std::to_string(t) + ")"; }

void require_same_N(const LefschetzProfile& a, const LefschetzProfile& b) {
  require_valid(a);
  require_valid(b);
  if (a.N != b.N)
    throw SpecMismatch("N mismatch: " + std::to_string(a.N) + " vs " + std::to_string(b.N));
}

DecompositionReport dual_report(const LefschetzProfile& p, ReportTarget target, const char* sym) {
  require_valid(p);
  DecompositionReport r{target, {}, 0};
  for (int k = 1; k <= p.N - 1; ++k) {
    if (dual_block_is_zero(p, k)) {
      ++r.omitted;
      continue;
    }
    r.components.push_back({std::string(sym) + std::to_string(k) + tw(k + 1 - p.N), chi_dual_block(p, k)});
  }
  return r;
}

}  // namespace

DecompositionReport decompose_Y(const LefschetzProfile& pX) { return dual_report(pX, ReportTarget::Y, "B^"); }
DecompositionReport decompose_T(const LefschetzProfile& pS) { return dual_report(pS, ReportTarget::T, "D^"); }

std::pair<DecompositionReport, DecompositionReport> intersect_decompositions(const LefschetzProfile& pX,
                                                                             const LefschetzProfile& pS) {
  require_same_N(pX, pS);
  const int i = pX.length(), l = pS.length();
  DecompositionReport xt{ReportTarget::XT, {{"E", std::nullopt}}, 0};
  for (int k = 1; k <= i - 1; ++k) {
    if (amb_is_zero(pX, k) || dual_block_is_zero(pS, k)) {
      ++xt.omitted;
      continue;
    }
    xt.components.push_back({"A_" + std::to_string(k) + tw(k) + "xD^" + std::to_string(k),
                             chi_amb(pX, k) * chi_dual_block(pS, k)});
  }
  // chi^H(C^L_k) = chi^H(C_k): Serre functor and twist are equivalences.
  DecompositionReport ys{ReportTarget::YS, {}, 0};
  for (int k = 1; k <= l - 1; ++k) {
    if (dual_block_is_zero(pX, k) || amb_is_zero(pS, k)) {
      ++ys.omitted;
      continue;
    }
    ys.components.push_back({"B^" + std::to_string(k) + "xCL_" + std::to_string(k) + tw(k + 1 - l),
                             chi_dual_block(pX, k) * chi_amb(pS, k)});
  }
  ys.components.push_back({"E", std::nullopt});
  return {xt, ys};
}

PluckerResult plucker_check(long long chiX, long long chiY, long long chiS, long long chiT, long long chiXT,
                            long long chiYS, long long N) {
  if (N <= 0) throw std::invalid_argument("N must be positive");
  PluckerResult r;
  r.lhs = Rational(chiXT) - Rational(chiX * chiT, N);
  r.rhs = Rational(chiYS) - Rational(chiY * chiS, N);
  r.holds = r.lhs == r.rhs;
  return r;
}

Prediction plucker_predict(const LefschetzProfile& pX, const LefschetzProfile& pS, long long chiXT) {
  require_same_N(pX, pS);
  const long long N = pX.N;
  const long long chiX = euler_total(pX), chiS = euler_total(pS);
  const long long chiY = N * euler_ambient(pX) - chiX, chiT = N * euler_ambient(pS) - chiS;
  Prediction p;
  p.value = Rational(chiXT) - Rational(chiX * chiT, N) + Rational(chiY * chiS, N);
  p.integral = p.value.denominator() == 1;
  if (!p.integral) p.warning = "predicted chi(Y_S) = " + to_string(p.value) + " is not an integer";
  return p;
}

EulerH euler_H_consistency(const LefschetzProfile& pX, const LefschetzProfile& pS, long long chiXT,
                           long long chiYS) {
  require_same_N(pX, pS);
  const long long chiX = euler_total(pX), chiS = euler_total(pS);
  EulerH e;
  e.via_XT = Rational(chiXT + chiX * (chiS - euler_ambient(pS)));
  e.via_YS = Rational(chiYS + chiS * (chiX - euler_ambient(pX)));
  e.holds = e.via_XT == e.via_YS;
  return e;
}

namespace {

using json = nlohmann::json;

std::optional<long long> opt_int(const json& e, const char* key) {
  if (!e.contains(key) || e[key].is_null()) return std::nullopt;
  if (!e[key].is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer or null", 0, 0);
  return e[key].get<long long>();
}

long long req_int(const json& e, const char* key) {
  auto v = opt_int(e, key);
  if (!v) throw ParseError(std::string("example needs integer field '") + key + "'", 0, 0);
  return *v;
}

std::string normalize(const std::string& s) {
  std::string out;
  for (unsigned char c : s)
    if (std::isalnum(c)) out.push_back(static_cast<char>(std::tolower(c)));
  return out;
}

}  // namespace

ExampleDB parse_examples(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 0, col = 0;
    offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
    throw ParseError(std::string("malformed example file: ") + e.what(), line, col);
  }
  if (!doc.is_object() || !doc.contains("examples") || !doc["examples"].is_array())
    throw ParseError("example file needs an 'examples' array", 0, 0);
  ExampleDB db;
  db.version = doc.value("version", 0);
  auto& out = db.records;
  for (const auto& e : doc["examples"]) {
    ExampleRecord r;
    if (!e.contains("name") || !e["name"].is_string()) throw ParseError("example needs a string 'name'", 0, 0);
    r.name = e["name"].get<std::string>();
    r.title = e.value("title", "");
    r.source = e.value("source", "");
    r.N = req_int(e, "N");
    r.chiX = req_int(e, "chiX");
    r.chiY = req_int(e, "chiY");
    r.chiS = req_int(e, "chiS");
    r.chiT = req_int(e, "chiT");
    r.chiXT = opt_int(e, "chiXT");
    r.chiYS = opt_int(e, "chiYS");
    if (e.contains("profiles") && !e["profiles"].is_null()) {
      const auto& p = e["profiles"];
      if (!p.contains("X") || !p.contains("S")) throw ParseError("'profiles' needs both X and S", 0, 0);
      r.profiles = std::make_pair(parse_profile(p["X"].dump()), parse_profile(p["S"].dump()));
    }
    out.push_back(std::move(r));
  }
  return db;
}

const ExampleDB& builtin_db() {
  static const ExampleDB db = parse_examples(kExamplesJson);
  return db;
}

const std::vector<ExampleRecord>& builtin_examples() { return builtin_db().records; }

std::optional<ExampleRecord> find_example(const std::vector<ExampleRecord>& db, const std::string& name) {
  const std::string key = normalize(name);
  for (const auto& r : db)
    if (normalize(r.name) == key) return r;
  return std::nullopt;
}

}  // namespace hpd
