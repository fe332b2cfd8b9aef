#include "hpd/symbols.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

namespace hpd {

FactorSymbol FactorSymbol::twisted(int m) const {
  FactorSymbol g = *this;
  if (kind != Kind::Zero && kind != Kind::Full) g.twist += m;
  return g;
}

FactorSymbol zero_sym(Side s) { return {Kind::Zero, 0, 0, s}; }
FactorSymbol full(Side s) { return {Kind::Full, 0, 0, s}; }
FactorSymbol amb(Side s, int a, int t) { return {Kind::Amb, a, t, s}; }
FactorSymbol ambl(int b, int t) { return {Kind::AmbL, b, t, Side::S}; }
FactorSymbol prim(Side s, int j, int t) { return {Kind::Prim, j, t, s}; }
FactorSymbol prim_star(Side s, int j, int t) { return {Kind::PrimStar, j, t, s}; }
FactorSymbol dual_block(Side s, int k, int t) { return {Kind::DualBlock, k, t, s}; }
FactorSymbol left_perp_amb(Side s, int a, int t) { return {Kind::LeftPerpAmb, a, t, s}; }
FactorSymbol right_perp_dual(Side s, int k, int t) { return {Kind::RightPerpDual, k, t, s}; }

std::string to_string(const FactorSymbol& f) {
  const bool x = f.side == Side::X;
  auto tw = [&](const std::string& head) { return head + "(" + std::to_string(f.twist) + ")"; };
  const std::string i = std::to_string(f.index);
  switch (f.kind) {
    case Kind::Zero: return "0";
    case Kind::Full: return x ? "D(X)" : "D(S)";
    case Kind::Amb: return tw((x ? "A_" : "C_") + i);
    case Kind::AmbL: return tw((x ? "AL_" : "CL_") + i);
    case Kind::Prim: return tw((x ? "a_" : "c_") + i);
    case Kind::PrimStar: return tw((x ? "a*_" : "c*_") + i);
    case Kind::DualBlock: return tw((x ? "B^" : "D^") + i);
    case Kind::LeftPerpAmb: return tw((x ? "perpA_" : "perpC_") + i);
    case Kind::RightPerpDual: return tw((x ? "perpB^" : "perpD^") + i);
  }
  return "?";
}

void check_symbol(const FactorSymbol& f, const LefschetzProfile& p) {
  const int n = p.length(), N = p.N;
  auto bad = [&](const std::string& range) {
    throw SymbolError("index out of profile range: " + to_string(f) + " (expected " + range + ")");
  };
  switch (f.kind) {
    case Kind::Zero:
    case Kind::Full: return;
    case Kind::Amb:
    case Kind::Prim:
    case Kind::PrimStar:
    case Kind::LeftPerpAmb:
      if (f.index < 0 || f.index > n - 1) bad("0.." + std::to_string(n - 1));
      return;
    case Kind::AmbL:
      if (f.side != Side::S) throw SymbolError("C^L symbols live on the S side only");
      if (f.index < 1 || f.index > n - 1) bad("1.." + std::to_string(n - 1));
      return;
    case Kind::DualBlock:
    case Kind::RightPerpDual:
      if (f.index < 1 || f.index > N - 1) bad("1.." + std::to_string(N - 1));
      return;
  }
}

bool denotes_zero(const FactorSymbol& f, const LefschetzProfile& p) {
  switch (f.kind) {
    case Kind::Zero: return true;
    case Kind::Amb:
    case Kind::AmbL: return amb_is_zero(p, f.index);
    case Kind::Prim:
    case Kind::PrimStar: return prim_is_zero(p, f.index);
    case Kind::DualBlock: return dual_block_is_zero(p, f.index);
    default: return false;
  }
}

namespace {

bool same_side_or_throw(const FactorSymbol& a, const FactorSymbol& b) {
  if (a.side != b.side) throw SymbolError("cross-side containment undefined");
  return true;
}

bool contains_core(const FactorSymbol& f1, const FactorSymbol& f2) {
  if (f1.kind == Kind::Zero || f2.kind == Kind::Full) return true;
  if (f1 == f2) return true;
  if (f1.kind == Kind::Full || f2.kind == Kind::Zero) return false;
  if (f1.twist != f2.twist) return false;
  const int a = f1.index, b = f2.index;
  switch (f1.kind) {
    case Kind::Amb: return f2.kind == Kind::Amb && a >= b;
    case Kind::AmbL: return f2.kind == Kind::AmbL && a >= b;
    case Kind::Prim: return f2.kind == Kind::Amb && b <= a;
    case Kind::PrimStar:
      return (f2.kind == Kind::DualBlock && a < b) || (f2.kind == Kind::Amb && b == 0);
    case Kind::DualBlock:
      return (f2.kind == Kind::DualBlock && a <= b) || (f2.kind == Kind::Amb && b == 0);
    case Kind::RightPerpDual: return f2.kind == Kind::Amb && b == 0;
    default: return false;
  }
}

}  // namespace

bool contains(const FactorSymbol& f1, const FactorSymbol& f2) {
  same_side_or_throw(f1, f2);
  return contains_core(f1, f2);
}

bool contains(const FactorSymbol& f1, const FactorSymbol& f2, const LefschetzProfile& p) {
  same_side_or_throw(f1, f2);
  if (denotes_zero(f1, p)) return true;
  for (const auto& c : containers(f1, p))
    if (contains_core(c, f2)) return true;
  return false;
}

std::vector<FactorSymbol> containers(const FactorSymbol& f, const LefschetzProfile& p) {
  const Side s = f.side;
  const int n = p.length(), N = p.N, t = f.twist;
  std::vector<FactorSymbol> out{f};
  // B^k for k >= n is all of A_0.
  auto add_full_dual = [&] {
    for (int k = std::max(n, 1); k <= N - 1; ++k) out.push_back(dual_block(s, k, t));
  };
  switch (f.kind) {
    case Kind::Amb:
      for (int a = 0; a < f.index; ++a) out.push_back(amb(s, a, t));
      if (f.index == n - 1) out.push_back(prim(s, n - 1, t));
      add_full_dual();
      break;
    case Kind::AmbL:
      for (int b = 1; b < f.index; ++b) out.push_back(ambl(b, t));
      break;
    case Kind::Prim:
      for (int a = 0; a <= f.index; ++a) out.push_back(amb(s, a, t));
      add_full_dual();
      break;
    case Kind::PrimStar:
      for (int k = f.index + 1; k <= N - 1; ++k) out.push_back(dual_block(s, k, t));
      out.push_back(amb(s, 0, t));
      break;
    case Kind::DualBlock:
      for (int k = f.index + 1; k <= N - 1; ++k) out.push_back(dual_block(s, k, t));
      out.push_back(amb(s, 0, t));
      break;
    case Kind::RightPerpDual:
      out.push_back(amb(s, 0, t));
      add_full_dual();
      break;
    default: break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Position of the T4 components: C^L_b(b+1-l+w) for b = k..l-1 come
// first, then C_m(m+1+w) for m = 0..k-1.
bool t4_left_of(const FactorSymbol& v, const FactorSymbol& u, int l) {
  // Is there k, w with v strictly left of u in T4_k(w)?
  if (u.kind == Kind::AmbL && v.kind == Kind::AmbL)
    return u.twist - u.index == v.twist - v.index && v.index < u.index;
  if (u.kind == Kind::Amb && v.kind == Kind::AmbL)
    return u.twist - u.index == v.twist - v.index + l && u.index < v.index;
  if (u.kind == Kind::Amb && v.kind == Kind::Amb)
    return u.twist - u.index == v.twist - v.index && v.index < u.index && u.index <= l - 2;
  return false;
}

bool t2_left_of(const FactorSymbol& v, const FactorSymbol& u) {
  if (u.kind != Kind::Prim || v.kind != Kind::Prim) return false;
  for (int w = u.twist - u.index; w <= u.twist; ++w) {
    const int cu = u.twist - w, cv = v.twist - w;
    if (cv < 0 || cv > v.index) continue;
    if (std::pair(cv, v.index) < std::pair(cu, u.index)) return true;
  }
  return false;
}

}  // namespace

HomVerdict hom_vanishes_base(const FactorSymbol& u, const FactorSymbol& v, const LefschetzProfile& p) {
  const int n = p.length();
  const int d = u.twist - v.twist;
  const auto K = [](const FactorSymbol& f, Kind k) { return f.kind == k; };
  auto with = [&](const char* r) { return HomVerdict{TriState::Vanishes, r}; };

  if (K(u, Kind::Amb) && K(v, Kind::Amb) && d >= 1 && d <= u.index) return with("R1");
  // alpha_0^* sends a_p(t+p+1) and A_p(t+p+1) to a*_p(t).
  const bool proj_form = (K(u, Kind::Prim) || K(u, Kind::Amb)) && d == u.index + 1;
  if (proj_form && K(v, Kind::DualBlock) && v.index <= u.index) return with("R2");
  if (K(u, Kind::Prim) && K(v, Kind::Prim) && d == 0 && u.index > v.index) return with("R3");
  if (K(u, Kind::LeftPerpAmb) && K(v, Kind::Amb)) {
    const int m = v.twist - u.twist;
    if (m >= 0 && u.index + m <= n - 1 && v.index == u.index + m) return with("R4");
  }
  if (K(v, Kind::RightPerpDual)) {
    if (K(u, Kind::DualBlock) && d == 0 && u.index <= v.index) return with("R5");
    if (K(u, Kind::PrimStar) && d == 0 && u.index < v.index) return with("R5");
    if (proj_form && u.index < v.index) return with("R5");
  }
  if (t2_left_of(v, u)) return with("T2");
  if (K(u, Kind::PrimStar) && K(v, Kind::PrimStar) && d == 0 && v.index < u.index) return with("T3");
  if (u.side == Side::S && t4_left_of(v, u, n)) return with("T4");
  // Serre: C^L_b(t) = S(C_b(t+l)), so Hom(u, C^L_b(t)) = Hom(C_b(t+l), u)^*.
  if (K(v, Kind::AmbL) && !K(u, Kind::AmbL)) {
    for (const auto& c : containers(amb(Side::S, v.index, v.twist + n), p)) {
      const HomVerdict r = hom_vanishes_base(c, u, p);
      if (r.vanishes()) return {TriState::Vanishes, "S(" + r.rule + ")"};
    }
  }
  return {};
}

namespace {

std::string fingerprint(const LefschetzProfile& p) {
  std::string s = std::to_string(p.N) + ":";
  for (const auto& b : p.blocks) s += std::to_string(b.euler) + (b.nonzero ? "+" : "-") + ",";
  return s;
}

using QueryKey = std::tuple<int, int, int, int, int, int>;  // side, kind1, idx1, tw1-tw2, kind2, idx2

struct QueryHash {
  size_t operator()(const QueryKey& k) const {
    auto [a, b, c, d, e, f] = k;
    size_t h = 1469598103934665603ull;
    for (int x : {a, b, c, d, e, f}) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

struct Cache {
  LefschetzProfile last;
  std::unordered_map<QueryKey, HomVerdict, QueryHash>* cur = nullptr;
  std::map<std::string, std::unordered_map<QueryKey, HomVerdict, QueryHash>> by_profile;
};

// Per-thread, so results never depend on interleaving.
thread_local Cache g_cache;

HomVerdict compute(const FactorSymbol& f1, const FactorSymbol& f2, const LefschetzProfile& p) {
  if (denotes_zero(f1, p) || denotes_zero(f2, p)) return {TriState::Vanishes, "zero"};
  if (f1.kind == Kind::Full || f2.kind == Kind::Full) return {};
  const auto up1 = containers(f1, p), up2 = containers(f2, p);
  for (const auto& u : up1)
    for (const auto& v : up2) {
      HomVerdict r = hom_vanishes_base(u, v, p);
      if (r.vanishes()) {
        if (!(u == f1 && v == f2)) r.rule += "+M";
        return r;
      }
    }
  return {};
}

}  // namespace

HomVerdict hom_vanishes_factor(const FactorSymbol& f1, const FactorSymbol& f2, const LefschetzProfile& p) {
  if (f1.side != f2.side) throw SymbolError("Hom between symbols on different sides");
  check_symbol(f1, p);
  check_symbol(f2, p);
  // Twist equivariance: only the twist difference matters.
  const int dt = (f1.kind == Kind::Full || f2.kind == Kind::Full) ? 0 : f1.twist - f2.twist;
  const QueryKey key{static_cast<int>(f1.side), static_cast<int>(f1.kind), f1.index, dt,
                     static_cast<int>(f2.kind), f2.index};
  if (g_cache.cur == nullptr || !(p == g_cache.last)) {
    g_cache.last = p;
    g_cache.cur = &g_cache.by_profile[fingerprint(p)];
  }
  auto it = g_cache.cur->find(key);
  if (it != g_cache.cur->end()) return it->second;
  const int base = f2.kind == Kind::Full ? 0 : f2.twist;
  HomVerdict r = compute(f1.twisted(-base), f2.twisted(-base), p);
  g_cache.cur->emplace(key, r);
  return r;
}

void clear_factor_cache() {
  g_cache.by_profile.clear();
  g_cache.cur = nullptr;
  g_cache.last = {};
}

size_t factor_cache_size() {
  size_t s = 0;
  for (const auto& [_, m] : g_cache.by_profile) s += m.size();
  return s;
}

DecompositionTemplate template_T1(Side s, const LefschetzProfile& p, int w) {
  DecompositionTemplate t{"T1", w, s, {}};
  for (int c = 0; c < p.length(); ++c) t.components.push_back(amb(s, c, c + w));
  return t;
}

DecompositionTemplate template_T2(Side s, const LefschetzProfile& p, int w) {
  DecompositionTemplate t{"T2", w, s, {}};
  for (int c = 0; c < p.length(); ++c)
    for (int j = c; j < p.length(); ++j) t.components.push_back(prim(s, j, c + w));
  return t;
}

DecompositionTemplate template_T3(Side s, const LefschetzProfile& p, int w) {
  DecompositionTemplate t{"T3", w, s, {}};
  for (int j = 0; j < p.length(); ++j) t.components.push_back(prim_star(s, j, w));
  return t;
}

DecompositionTemplate template_T4(const LefschetzProfile& pS, int k, int w) {
  const int l = pS.length();
  if (k < 1 || k > l - 1) throw SymbolError("T4 needs 1 <= k <= l-1");
  DecompositionTemplate t{"T4:" + std::to_string(k), w, Side::S, {}};
  for (int b = k; b <= l - 1; ++b) t.components.push_back(ambl(b, b + 1 - l + w));
  for (int m = 0; m <= k - 1; ++m) t.components.push_back(amb(Side::S, m, m + 1 + w));
  return t;
}

std::vector<DecompositionTemplate> enumerate_templates(const LefschetzProfile& p, int lo, int hi, Side s) {
  std::vector<DecompositionTemplate> out;
  for (int w = lo; w <= hi; ++w) out.push_back(template_T1(s, p, w));
  for (int w = lo; w <= hi; ++w) out.push_back(template_T2(s, p, w));
  for (int w = lo; w <= hi; ++w) out.push_back(template_T3(s, p, w));
  if (s == Side::S)
    for (int k = 1; k <= p.length() - 1; ++k)
      for (int w = lo; w <= hi; ++w) out.push_back(template_T4(p, k, w));
  return out;
}

}  // namespace hpd
