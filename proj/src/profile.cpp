#include "hpd/profile.hpp"

#include <algorithm>
#include <set>

namespace hpd {

namespace {

const char* kDualSuffix = "^dual";

std::string zero_label(int m) { return "zero" + std::to_string(m); }

std::string flip_name(const std::string& name) {
  const std::string suf = kDualSuffix;
  if (name.size() >= suf.size() && name.compare(name.size() - suf.size(), suf.size(), suf) == 0)
    return name.substr(0, name.size() - suf.size());
  return name + suf;
}

Orientation flip(Orientation o) {
  return o == Orientation::Lefschetz ? Orientation::DualLefschetz : Orientation::Lefschetz;
}

}  // namespace

std::vector<long long> LefschetzProfile::evec() const {
  std::vector<long long> e;
  e.reserve(blocks.size());
  for (const auto& b : blocks) e.push_back(b.euler);
  return e;
}

std::string to_string(Orientation o) {
  return o == Orientation::Lefschetz ? "lefschetz" : "dual";
}

LefschetzProfile make_profile(std::string name, int N, const std::vector<long long>& e,
                              Orientation o, const std::string& label_prefix) {
  LefschetzProfile p;
  p.name = std::move(name);
  p.N = N;
  p.orientation = o;
  for (size_t j = 0; j < e.size(); ++j) {
    PrimitiveBlock b;
    b.euler = e[j];
    b.nonzero = e[j] != 0 || j + 1 == e.size();
    b.label = b.is_zero() ? zero_label(static_cast<int>(j)) : label_prefix + std::to_string(j);
    p.blocks.push_back(std::move(b));
  }
  return p;
}

std::vector<Violation> validate_profile(const LefschetzProfile& p) {
  using S = Violation::Severity;
  std::vector<Violation> out;
  const int i = p.length();
  if (p.N <= 0) out.push_back({S::Error, "N must be a positive integer (got " + std::to_string(p.N) + ")"});
  if (i < 1) out.push_back({S::Error, "i >= 1 fails: profile has no blocks"});
  if (p.N > 0 && i > p.N - 1)
    out.push_back({S::Error, "i <= N-1 fails: length " + std::to_string(i) + " with N = " +
                                 std::to_string(p.N)});
  if (i >= 1 && p.blocks.back().is_zero())
    out.push_back({S::Error, "length not minimal: last block has euler 0 and no nonzero marker"});
  std::set<std::string> seen;
  for (int j = 0; j < i; ++j) {
    const auto& lab = p.blocks[j].label;
    if (lab.empty()) out.push_back({S::Error, "block " + std::to_string(j) + " has an empty label"});
    else if (!seen.insert(lab).second)
      out.push_back({S::Error, "duplicate label '" + lab + "' at block " + std::to_string(j)});
  }
  if (p.N > 0 && p.N < 3)
    out.push_back({S::Warning, "N >= 3 fails: image of dimension at least 2 needs N >= 3"});
  return out;
}

bool is_valid(const LefschetzProfile& p) {
  for (const auto& v : validate_profile(p))
    if (v.severity == Violation::Severity::Error) return false;
  return true;
}

void require_valid(const LefschetzProfile& p) {
  for (const auto& v : validate_profile(p))
    if (v.severity == Violation::Severity::Error)
      throw ProfileError("invalid profile '" + p.name + "': " + v.reason);
}

long long euler_ambient(const LefschetzProfile& p) {
  long long s = 0;
  for (const auto& b : p.blocks) s += b.euler;
  return s;
}

// Both orientations store the e-vector in Lefschetz index order, so the
// same weights apply. For a dualized profile this is the sum of
// (N-1-j)*e_j over the original indices j.
long long euler_total(const LefschetzProfile& p) {
  long long s = 0;
  for (int m = 0; m < p.length(); ++m) s += static_cast<long long>(m + 1) * p.blocks[m].euler;
  return s;
}

bool is_rectangular(const LefschetzProfile& p) {
  for (int j = 0; j + 1 < p.length(); ++j)
    if (!p.blocks[j].is_zero()) return false;
  return true;
}

long long chi_amb(const LefschetzProfile& p, int k) {
  long long s = 0;
  for (int j = std::max(k, 0); j < p.length(); ++j) s += p.blocks[j].euler;
  return s;
}

long long chi_dual_block(const LefschetzProfile& p, int k) {
  long long s = 0;
  for (int j = 0; j < std::min(k, p.length()); ++j) s += p.blocks[j].euler;
  return s;
}

bool amb_is_zero(const LefschetzProfile& p, int k) {
  for (int j = std::max(k, 0); j < p.length(); ++j)
    if (!p.blocks[j].is_zero()) return false;
  return true;
}

bool dual_block_is_zero(const LefschetzProfile& p, int k) {
  for (int j = 0; j < std::min(k, p.length()); ++j)
    if (!p.blocks[j].is_zero()) return false;
  return true;
}

bool prim_is_zero(const LefschetzProfile& p, int j) {
  return j < 0 || j >= p.length() || p.blocks[j].is_zero();
}

LefschetzProfile dualize(const LefschetzProfile& p) {
  require_valid(p);
  const int N = p.N, i = p.length();
  LefschetzProfile q;
  q.name = flip_name(p.name);
  q.N = N;
  q.orientation = flip(p.orientation);
  for (int m = 0; m <= N - 2; ++m) {
    const int j = N - 2 - m;
    PrimitiveBlock b;
    if (j < i) {
      b = p.blocks[j];
    } else {
      b.euler = 0;
      b.nonzero = false;
    }
    if (b.is_zero()) b.label = zero_label(m);
    q.blocks.push_back(std::move(b));
  }
  while (!q.blocks.empty() && q.blocks.back().is_zero()) q.blocks.pop_back();
  return q;
}

DualProfile dual_widths(const LefschetzProfile& p) {
  DualProfile d;
  d.base = p;
  for (int k = 1; k <= p.N - 1; ++k) d.widths.push_back(std::min(k, p.length()));
  return d;
}

LefschetzProfile dualize_by_widths(const LefschetzProfile& p) {
  require_valid(p);
  const DualProfile d = dual_widths(p);
  const int N = p.N;
  // D(Y) = <B^1(2-N), ..., B^{N-1}>; read from the right, the m-th
  // Lefschetz piece is B^{N-1-m} and its primitive part is the set of
  // blocks of B^{N-1-m} that are not in B^{N-2-m}.
  auto width = [&](int k) { return k <= 0 ? 0 : d.widths[k - 1]; };
  std::vector<long long> e;
  std::vector<bool> nz;
  for (int m = 0; m <= N - 2; ++m) {
    const int hi = width(N - 1 - m), lo = width(N - 2 - m);
    long long s = 0;
    bool any = false;
    for (int j = lo; j < hi; ++j) {
      s += p.blocks[j].euler;
      any = any || !p.blocks[j].is_zero();
    }
    e.push_back(s);
    nz.push_back(any);
  }
  while (!e.empty() && e.back() == 0 && !nz.back()) {
    e.pop_back();
    nz.pop_back();
  }
  LefschetzProfile q = make_profile(flip_name(p.name), N, e, flip(p.orientation));
  for (size_t m = 0; m < e.size(); ++m) q.blocks[m].nonzero = nz[m];
  return q;
}

}  // namespace hpd
