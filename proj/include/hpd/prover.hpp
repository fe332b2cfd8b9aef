#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpd/chessboard.hpp"

namespace hpd {

enum class Phase { FF_piT, FF_piS, Generation_Step1, Generation_Step2, Generation_Final };
std::string to_string(Phase p);

struct ProofObligation {
  enum class Kind {
    Box,         // Hom(source, target) = 0 via hom_vanishes_box
    Region,      // mutated region contained in the closed-form staircase
    Hypothesis,  // holds by an assumption on b (e.g. the orthogonality to B^k x C^L_k)
  };
  Phase phase = Phase::FF_piT;
  Kind kind = Kind::Box;
  std::string family;  // short tag such as "a", "b", "ii"
  std::optional<BoxSymbol> source, target;
  std::string source_text, target_text;
  std::string rule;  // "unknown" when failed
  bool discharged = false;
};

struct ProofTrace {
  ChessboardSpec spec;
  std::vector<ProofObligation> obligations;
  std::vector<std::string> notes;

  bool success() const;
  size_t failed_count() const;
  void append(const ProofTrace& other);
};

ProofTrace check_ff_pi_T(const ChessboardSpec& spec);
ProofTrace check_ff_pi_S(const ChessboardSpec& spec);
// Step 1 visits (beta, alpha) pairs; by default beta ascending and, for each
// beta, alpha descending from i-1 to beta+1.
using ZigZagOrder = std::vector<std::pair<int, int>>;
ZigZagOrder zigzag_order(const ChessboardSpec& spec);
ProofTrace check_generation(const ChessboardSpec& spec, const std::optional<ZigZagOrder>& order = std::nullopt);
ProofTrace check_main_theorem(const ChessboardSpec& spec);

// One obligation per line: `phase | source | target | rule | status`.
std::string serialize_trace(const ProofTrace& t);

// Re-run every discharged Box obligation through hom_vanishes_box and check
// the recorded rule. Returns the number of mismatches.
size_t reverify(const ProofTrace& t);

struct SweepPoint {
  int i = 0, l = 0, N = 0;
  bool success = false;
  size_t obligations = 0, failed = 0;
};

struct SweepRange {
  int i_lo = 2, i_hi = 10, l_lo = 2, l_hi = 10, n_max = 25;
  int n_min = 0;  // 0 means max(i, l) + 1
};

std::vector<SweepPoint> sweep_points(const SweepRange& r);
// Runs check_main_theorem on generic specs; results come back in the
// canonical (i, l, N) order whatever the job count.
std::vector<SweepPoint> run_sweep(const SweepRange& r, unsigned jobs);

}  // namespace hpd
