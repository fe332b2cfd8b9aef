#pragma once

#include <set>
#include <string>
#include <vector>

#include "hpd/profile.hpp"
#include "hpd/symbols.hpp"

namespace hpd {

struct BoxSymbol {
  enum class Type { Tensor, DXT, DYS, Eprim };
  Type type = Type::Tensor;
  FactorSymbol x{Kind::Zero, 0, 0, Side::X};
  FactorSymbol s{Kind::Zero, 0, 0, Side::S};

  auto operator<=>(const BoxSymbol&) const = default;
};

BoxSymbol tensor(const FactorSymbol& x, const FactorSymbol& s);
BoxSymbol box_dxt();
BoxSymbol box_dys();
BoxSymbol box_e();
std::string to_string(const BoxSymbol& b);

struct ChessboardSpec {
  LefschetzProfile X;  // length i
  LefschetzProfile S;  // length l, same N
  int i() const { return X.length(); }
  int l() const { return S.length(); }
  int N() const { return X.N; }
};

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate_spec(const ChessboardSpec& spec);  // throws SpecError
// Convenience for sweeps: rectangular-free generic profiles with every
// block nonzero (e_j = 1), lengths i and l, ambient N.
ChessboardSpec generic_spec(int i, int l, int N);

using Region = std::set<BoxSymbol>;

bool box_is_zero(const BoxSymbol& b, const ChessboardSpec& spec);
void region_insert(Region& r, const BoxSymbol& b, const ChessboardSpec& spec);

HomVerdict hom_vanishes_box(const BoxSymbol& b1, const BoxSymbol& b2, const ChessboardSpec& spec);
// Unknown as soon as one target box is Unknown; the rule lists the first
// failing target otherwise empty.
HomVerdict hom_vanishes_box_region(const BoxSymbol& b1, const Region& r, const ChessboardSpec& spec);

// Refinement ids: "aligned" (default), "T1", "T2".
Region mutate_region(const Region& r, const std::vector<BoxSymbol>& through, const ChessboardSpec& spec,
                     const std::string& refinement = "aligned");

std::vector<BoxSymbol> pi_T_sequence(const ChessboardSpec& spec);  // D(X)⊠C_b(b), b = 1..l-1
std::vector<BoxSymbol> pi_S_sequence(const ChessboardSpec& spec);  // A_a(a)⊠D(S), a = 1..i-1
BoxSymbol pi_T_source(int k, const ChessboardSpec& spec);          // A_k(k)⊠D^k
BoxSymbol pi_S_source(int k, const ChessboardSpec& spec);          // B^k⊠C^L_k(k+1-l)

Region staircase_pi_T(int k, const ChessboardSpec& spec);
Region staircase_pi_S(int k, const ChessboardSpec& spec);
Region staircase_E(const ChessboardSpec& spec);

bool region_subset(const Region& a, const Region& b);

}  // namespace hpd
