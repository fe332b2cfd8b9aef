#include "hpd/chessboard.hpp"

#include <algorithm>
#include <map>

namespace hpd {

BoxSymbol tensor(const FactorSymbol& x, const FactorSymbol& s) {
  if (x.side != Side::X || s.side != Side::S) throw SymbolError("tensor box needs an X factor and an S factor");
  return {BoxSymbol::Type::Tensor, x, s};
}
BoxSymbol box_dxt() { return {BoxSymbol::Type::DXT, zero_sym(Side::X), zero_sym(Side::S)}; }
BoxSymbol box_dys() { return {BoxSymbol::Type::DYS, zero_sym(Side::X), zero_sym(Side::S)}; }
BoxSymbol box_e() { return {BoxSymbol::Type::Eprim, zero_sym(Side::X), zero_sym(Side::S)}; }

std::string to_string(const BoxSymbol& b) {
  switch (b.type) {
    case BoxSymbol::Type::DXT: return "D_XT";
    case BoxSymbol::Type::DYS: return "D_YS";
    case BoxSymbol::Type::Eprim: return "E";
    case BoxSymbol::Type::Tensor: break;
  }
  return to_string(b.x) + "x" + to_string(b.s);
}

void validate_spec(const ChessboardSpec& spec) {
  for (const auto* p : {&spec.X, &spec.S})
    for (const auto& v : validate_profile(*p))
      if (v.severity == Violation::Severity::Error)
        throw SpecError("profile '" + p->name + "': " + v.reason);
  if (spec.X.N != spec.S.N)
    throw SpecError("spec mismatch: N differs (" + std::to_string(spec.X.N) + " vs " +
                    std::to_string(spec.S.N) + ")");
}

ChessboardSpec generic_spec(int i, int l, int N) {
  ChessboardSpec spec;
  spec.X = make_profile("X", N, std::vector<long long>(i, 1));
  spec.S = make_profile("S", N, std::vector<long long>(l, 1), Orientation::Lefschetz, "c");
  validate_spec(spec);
  return spec;
}

bool box_is_zero(const BoxSymbol& b, const ChessboardSpec& spec) {
  return b.type == BoxSymbol::Type::Tensor && (denotes_zero(b.x, spec.X) || denotes_zero(b.s, spec.S));
}

void region_insert(Region& r, const BoxSymbol& b, const ChessboardSpec& spec) {
  if (!box_is_zero(b, spec)) r.insert(b);
}

namespace {

// Components of the global decompositions of D(H).
struct GComp {
  enum class T { DYS, DXT, XCol, SCol, SColL } t;
  int k = 0;
};

bool in_comp(const BoxSymbol& b, const GComp& c, const ChessboardSpec& spec) {
  using BT = BoxSymbol::Type;
  switch (c.t) {
    case GComp::T::DYS: return b.type == BT::DYS;
    case GComp::T::DXT: return b.type == BT::DXT || b.type == BT::Eprim;
    case GComp::T::XCol: return b.type == BT::Tensor && contains(b.x, amb(Side::X, c.k, c.k), spec.X);
    case GComp::T::SCol: return b.type == BT::Tensor && contains(b.s, amb(Side::S, c.k, c.k), spec.S);
    case GComp::T::SColL:
      return b.type == BT::Tensor && contains(b.s, ambl(c.k, c.k + 1 - spec.l()), spec.S);
  }
  return false;
}

struct GTemplate {
  std::string id;
  std::vector<GComp> comps;
};

std::vector<GTemplate> global_templates(const ChessboardSpec& spec) {
  const int i = spec.i(), l = spec.l();
  std::vector<GTemplate> out;
  GTemplate gx{"G:sodHX", {{GComp::T::DYS}}};
  for (int k = 1; k <= i - 1; ++k) gx.comps.push_back({GComp::T::XCol, k});
  out.push_back(gx);
  // sod:H:k, k = 0..l-1; k = l-1 is sod:H for S, k = 0 its Serre form.
  for (int k = l - 1; k >= 0; --k) {
    GTemplate g;
    g.id = k == l - 1 ? "G:sodHS" : (k == 0 ? "G:sodHS:Serre" : "G:sodH:" + std::to_string(k));
    for (int b = k + 1; b <= l - 1; ++b) g.comps.push_back({GComp::T::SColL, b});
    g.comps.push_back({GComp::T::DXT});
    for (int m = 1; m <= k; ++m) g.comps.push_back({GComp::T::SCol, m});
    out.push_back(g);
  }
  return out;
}

HomVerdict by_global(const BoxSymbol& b1, const BoxSymbol& b2, const ChessboardSpec& spec) {
  for (const auto& g : global_templates(spec)) {
    int first2 = -1;
    for (int p = 0; p < static_cast<int>(g.comps.size()); ++p) {
      if (first2 >= 0 && in_comp(b1, g.comps[p], spec)) return {TriState::Vanishes, g.id};
      if (first2 < 0 && in_comp(b2, g.comps[p], spec)) first2 = p;
    }
  }
  return {};
}

// All we know about E: it is right orthogonal to every A_k(k)⊠D^k, and to
// A_a(a)⊠<C_0(1), ..., C_{a-1}(a)> (the C_m(m+1) generate the part of A_0
// below the twist on the S side).
HomVerdict into_e(const BoxSymbol& b1, const ChessboardSpec& spec) {
  if (b1.type != BoxSymbol::Type::Tensor) return {};
  const int i = spec.i(), l = spec.l();
  for (int k = 1; k <= i - 1; ++k)
    if (contains(b1.x, amb(Side::X, k, k), spec.X) && contains(b1.s, dual_block(Side::S, k, 0), spec.S))
      return {TriState::Vanishes, "E:def"};
  for (int a = 1; a <= i - 1; ++a) {
    if (!contains(b1.x, amb(Side::X, a, a), spec.X)) continue;
    for (int m = 0; m <= std::min(a, l) - 1; ++m)
      if (contains(b1.s, amb(Side::S, m, m + 1), spec.S)) return {TriState::Vanishes, "E:gen"};
  }
  return {};
}

}  // namespace

namespace {

struct BoxCache {
  LefschetzProfile X, S;
  bool valid = false;
  std::map<std::pair<BoxSymbol, BoxSymbol>, HomVerdict> memo;
};
thread_local BoxCache g_box_cache;

HomVerdict compute_box(const BoxSymbol& b1, const BoxSymbol& b2, const ChessboardSpec& spec) {
  using BT = BoxSymbol::Type;
  if (box_is_zero(b1, spec) || box_is_zero(b2, spec)) return {TriState::Vanishes, "zero"};
  if (b1.type == BT::Tensor && b2.type == BT::Tensor) {
    const auto ux = hom_vanishes_factor(b1.x, b2.x, spec.X);
    const auto us = ux.vanishes() ? HomVerdict{} : hom_vanishes_factor(b1.s, b2.s, spec.S);
    const auto tx = hom_vanishes_factor(b1.x, b2.x.twisted(-1), spec.X);
    const auto ts = tx.vanishes() ? HomVerdict{} : hom_vanishes_factor(b1.s, b2.s.twisted(-1), spec.S);
    if ((ux.vanishes() || us.vanishes()) && (tx.vanishes() || ts.vanishes())) {
      const bool ax = ux.vanishes(), bx = tx.vanishes();
      const char* pattern = ax && bx ? "alpha" : (!ax && !bx ? "beta" : "mixed");
      const std::string u = ax ? "X:" + ux.rule : "S:" + us.rule;
      const std::string t = bx ? "X:" + tx.rule : "S:" + ts.rule;
      return {TriState::Vanishes, std::string(pattern) + "[" + u + ";" + t + "]"};
    }
  }
  if (b2.type == BT::Eprim) {
    auto r = into_e(b1, spec);
    if (r.vanishes()) return r;
  }
  return by_global(b1, b2, spec);
}

}  // namespace

HomVerdict hom_vanishes_box(const BoxSymbol& b1, const BoxSymbol& b2, const ChessboardSpec& spec) {
  auto& c = g_box_cache;
  if (!c.valid || !(c.X == spec.X) || !(c.S == spec.S)) {
    if (spec.X.N != spec.S.N) throw SpecError("spec mismatch: N differs");
    c.X = spec.X;
    c.S = spec.S;
    c.memo.clear();
    c.valid = true;
  }
  const auto key = std::make_pair(b1, b2);
  if (auto it = c.memo.find(key); it != c.memo.end()) return it->second;
  HomVerdict r = compute_box(b1, b2, spec);
  c.memo.emplace(key, r);
  return r;
}

HomVerdict hom_vanishes_box_region(const BoxSymbol& b1, const Region& r, const ChessboardSpec& spec) {
  std::string rule;
  for (const auto& b2 : r) {
    auto v = hom_vanishes_box(b1, b2, spec);
    if (!v.vanishes()) return {};
    if (rule.empty()) rule = v.rule;
  }
  return {TriState::Vanishes, rule.empty() ? "empty" : rule};
}

namespace {

struct Refinement {
  std::vector<BoxSymbol> boxes;
  std::vector<bool> complement;  // the part the split is meant to make orthogonal
  bool preferred = false;        // split index equals the column index
};

// Candidate decompositions of the mutating factor for one column. "aligned"
// offers every tail split <A_c(c), ..., A_{i-1}(i-1), perp> on the X side and
// every Serre-mutated sequence T4:c on the S side.
std::vector<Refinement> refinements(const BoxSymbol& col, const ChessboardSpec& spec, const std::string& how) {
  if (col.type != BoxSymbol::Type::Tensor)
    throw SpecError("mutation column must be a tensor box with one full factor");
  const bool x_mut = col.x.kind == Kind::Full, s_mut = col.s.kind == Kind::Full;
  if (x_mut == s_mut) throw SpecError("mutation column needs exactly one full factor: " + to_string(col));
  const LefschetzProfile& p = x_mut ? spec.X : spec.S;
  const Side side = x_mut ? Side::X : Side::S;
  const int n = p.length();

  std::vector<Refinement> out;
  auto add = [&](const std::vector<FactorSymbol>& pieces, auto is_complement, bool preferred) {
    Refinement r;
    r.preferred = preferred;
    for (const auto& f : pieces) {
      r.boxes.push_back(x_mut ? tensor(f, col.s) : tensor(col.x, f));
      r.complement.push_back(is_complement(f));
    }
    out.push_back(std::move(r));
  };
  auto none = [](const FactorSymbol&) { return false; };
  if (how == "T1") {
    add(template_T1(side, p, 0).components, none, true);
  } else if (how == "T2") {
    add(template_T2(side, p, 0).components, none, true);
  } else if (how == "aligned") {
    const int col_index = x_mut ? col.s.index : col.x.index;
    // Past the last block of the mutating side the column is split plainly.
    for (int c = 1; c <= n - 1 && col_index <= n - 1; ++c) {
      if (x_mut) {
        std::vector<FactorSymbol> pieces;
        for (int a = c; a <= n - 1; ++a) pieces.push_back(amb(Side::X, a, a));
        pieces.push_back(left_perp_amb(Side::X, c, c));
        add(pieces, [](const FactorSymbol& f) { return f.kind == Kind::LeftPerpAmb; }, c == col_index);
      } else {
        add(template_T4(p, c, 0).components, [](const FactorSymbol& f) { return f.kind == Kind::Amb; },
            c == col_index);
      }
    }
    if (out.empty()) add(template_T1(side, p, 0).components, none, true);
  } else {
    throw SpecError("unknown template id '" + how + "'");
  }
  return out;
}

}  // namespace

Region mutate_region(const Region& r, const std::vector<BoxSymbol>& through, const ChessboardSpec& spec,
                     const std::string& refinement) {
  Region cur;
  for (const auto& b : r) region_insert(cur, b, spec);
  for (auto it = through.rbegin(); it != through.rend(); ++it) {
    // Pick a split whose complement part
    // receives no Homs to the current region, fewest new boxes first. If no
    // split manages that, use the one aligned with the column.
    Region best, fallback;
    bool have = false;
    for (const auto& ref : refinements(*it, spec, refinement)) {
      Region add;
      bool clean = true;
      for (size_t j = 0; j < ref.boxes.size(); ++j) {
        if (hom_vanishes_box_region(ref.boxes[j], cur, spec).vanishes()) continue;
        if (ref.complement[j] && !box_is_zero(ref.boxes[j], spec)) clean = false;
        region_insert(add, ref.boxes[j], spec);
      }
      if (ref.preferred) fallback = add;
      if (clean && (!have || add.size() < best.size())) {
        best = std::move(add);
        have = true;
      }
    }
    const Region& chosen = have ? best : fallback;
    cur.insert(chosen.begin(), chosen.end());
  }
  return cur;
}

std::vector<BoxSymbol> pi_T_sequence(const ChessboardSpec& spec) {
  std::vector<BoxSymbol> out;
  for (int b = 1; b <= spec.l() - 1; ++b) out.push_back(tensor(full(Side::X), amb(Side::S, b, b)));
  return out;
}

std::vector<BoxSymbol> pi_S_sequence(const ChessboardSpec& spec) {
  std::vector<BoxSymbol> out;
  for (int a = 1; a <= spec.i() - 1; ++a) out.push_back(tensor(amb(Side::X, a, a), full(Side::S)));
  return out;
}

BoxSymbol pi_T_source(int k, const ChessboardSpec& spec) {
  if (k < 1 || k > spec.i() - 1) throw SpecError("k out of range for A_k(k)xD^k");
  return tensor(amb(Side::X, k, k), dual_block(Side::S, k, 0));
}

BoxSymbol pi_S_source(int k, const ChessboardSpec& spec) {
  if (k < 1 || k > spec.l() - 1) throw SpecError("k out of range for B^kxC^L_k");
  return tensor(dual_block(Side::X, k, 0), ambl(k, k + 1 - spec.l()));
}

Region staircase_pi_T(int k, const ChessboardSpec& spec) {
  const int i = spec.i(), l = spec.l();
  if (k < 1 || k > i - 1) throw SpecError("staircase_pi_T: k must lie in [1, i-1]");
  Region r;
  for (int b = 1; b <= l - 1; ++b) {
    const int lo = k <= l ? b : k - l + b;
    for (int a = lo; a <= k - 1; ++a) region_insert(r, tensor(amb(Side::X, a, a), amb(Side::S, b, b)), spec);
  }
  return r;
}

Region staircase_pi_S(int k, const ChessboardSpec& spec) {
  const int i = spec.i(), l = spec.l();
  if (k < 1 || k > l - 1) throw SpecError("staircase_pi_S: k must lie in [1, l-1]");
  Region r;
  for (int b = 1; b <= k - 1; ++b) {
    const int hi = k <= i ? b : b - (k - i);
    for (int a = 1; a <= hi; ++a) region_insert(r, tensor(amb(Side::X, a, a), ambl(b, b + 1 - l)), spec);
  }
  return r;
}

Region staircase_E(const ChessboardSpec& spec) {
  const int i = spec.i(), l = spec.l();
  Region r;
  for (int b = 1; b <= l - 1; ++b)
    for (int a = 1; a <= std::min(i - 1, b); ++a)
      region_insert(r, tensor(amb(Side::X, a, a), ambl(b, b + 1 - l)), spec);
  return r;
}

bool region_subset(const Region& a, const Region& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace hpd
