#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpd/profile.hpp"

namespace hpd {

enum class Side { X, S };

// Formal one-sided category symbols. On the X side, Amb(k) is A_k, Prim(j)
// is a_j, DualBlock(k) is B^k; on the S side the same kinds stand for C_k,
// c_j, D^k, and AmbL(k) is C^L_k.
enum class Kind {
  Zero,
  Full,           // D(X) or D(S); twist-free
  Amb,            // A_index(twist)
  AmbL,           // C^L_index(twist)
  Prim,           // a_index(twist)
  PrimStar,       // alpha_0^*(a_index(index+1)) (twist)
  DualBlock,      // B^index(twist)
  LeftPerpAmb,    // left orthogonal of <A_a(t), A_{a+1}(t+1), ..., A_{n-1}(t+n-1-a)>
  RightPerpDual,  // right orthogonal of B^index inside A_0, (twist)
};

struct FactorSymbol {
  Kind kind = Kind::Zero;
  int index = 0;
  int twist = 0;
  Side side = Side::X;

  auto operator<=>(const FactorSymbol&) const = default;
  FactorSymbol twisted(int m) const;
};

FactorSymbol zero_sym(Side s);
FactorSymbol full(Side s);
FactorSymbol amb(Side s, int a, int t);
FactorSymbol ambl(int b, int t);  // S side only
FactorSymbol prim(Side s, int j, int t);
FactorSymbol prim_star(Side s, int j, int t);
FactorSymbol dual_block(Side s, int k, int t);
FactorSymbol left_perp_amb(Side s, int a, int t);
FactorSymbol right_perp_dual(Side s, int k, int t);

std::string to_string(const FactorSymbol& f);

struct SymbolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Index-range check against the profile bound to the symbol's side.
void check_symbol(const FactorSymbol& f, const LefschetzProfile& p);
// True when the symbol denotes the zero category for this profile.
bool denotes_zero(const FactorSymbol& f, const LefschetzProfile& p);

// Syntactic containment f1 ⊆ f2 (no profile-dependent rules).
bool contains(const FactorSymbol& f1, const FactorSymbol& f2);
// Adds the profile-dependent identifications (B^k = A_0 for k >= length,
// A_{n-1} = a_{n-1}, zero categories).
bool contains(const FactorSymbol& f1, const FactorSymbol& f2, const LefschetzProfile& p);

// Every symbol at the same twist that is known to contain f (f included).
std::vector<FactorSymbol> containers(const FactorSymbol& f, const LefschetzProfile& p);

enum class TriState { Vanishes, Unknown };

struct HomVerdict {
  TriState state = TriState::Unknown;
  std::string rule;  // empty when Unknown
  bool vanishes() const { return state == TriState::Vanishes; }
};

// Sound, incomplete decision of Hom(f1, f2) = 0 on one side.
HomVerdict hom_vanishes_factor(const FactorSymbol& f1, const FactorSymbol& f2, const LefschetzProfile& p);
// Same without the memo cache or lifting; used by tests as a second opinion.
HomVerdict hom_vanishes_base(const FactorSymbol& u, const FactorSymbol& v, const LefschetzProfile& p);

void clear_factor_cache();
size_t factor_cache_size();

struct DecompositionTemplate {
  std::string id;  // "T1", "T2", "T3", "T4:k"
  int twist = 0;   // uniform twist shift
  Side side = Side::X;
  std::vector<FactorSymbol> components;
};

DecompositionTemplate template_T1(Side s, const LefschetzProfile& p, int w);
DecompositionTemplate template_T2(Side s, const LefschetzProfile& p, int w);
DecompositionTemplate template_T3(Side s, const LefschetzProfile& p, int w);
DecompositionTemplate template_T4(const LefschetzProfile& pS, int k, int w);

// All instances with uniform twist in [lo, hi]; T4 only for the S side
// (k = 1..l-1). Ordered by template family, then k, then twist.
std::vector<DecompositionTemplate> enumerate_templates(const LefschetzProfile& p, int lo, int hi,
                                                       Side s = Side::X);

}  // namespace hpd
