#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpd {

enum class Orientation { Lefschetz, DualLefschetz };

struct PrimitiveBlock {
  std::string label;
  long long euler = 0;
  // A block with euler 0 can still be a nonzero category.
  bool nonzero = true;

  bool is_zero() const { return euler == 0 && !nonzero; }
  bool operator==(const PrimitiveBlock&) const = default;
};

struct LefschetzProfile {
  std::string name;
  int N = 0;
  Orientation orientation = Orientation::Lefschetz;
  std::vector<PrimitiveBlock> blocks;

  int length() const { return static_cast<int>(blocks.size()); }
  std::vector<long long> evec() const;
  bool operator==(const LefschetzProfile&) const = default;
};

struct Violation {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string reason;
};

// Thrown on a precondition failure (e.g. an invalid profile handed to an
// operation that requires a valid one).
struct ProfileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Build a profile from a bare e-vector. Labels default to "a0", "a1", ...
// and every block with euler 0 is marked as the zero category, except the
// last one, which keeps the nonzero marker so the length stays minimal.
LefschetzProfile make_profile(std::string name, int N, const std::vector<long long>& e,
                              Orientation o = Orientation::Lefschetz,
                              const std::string& label_prefix = "a");

std::vector<Violation> validate_profile(const LefschetzProfile& p);
bool is_valid(const LefschetzProfile& p);  // no Error-severity violations
void require_valid(const LefschetzProfile& p);

long long euler_ambient(const LefschetzProfile& p);
long long euler_total(const LefschetzProfile& p);
bool is_rectangular(const LefschetzProfile& p);

// chi^H of the ambient piece A_k = <a_k, ..., a_{i-1}> (A_k = A_0 for k <= 0).
long long chi_amb(const LefschetzProfile& p, int k);
// chi^H of the complementary piece B^k = <a_0, ..., a_{min(k,i)-1}>.
long long chi_dual_block(const LefschetzProfile& p, int k);
bool amb_is_zero(const LefschetzProfile& p, int k);
bool dual_block_is_zero(const LefschetzProfile& p, int k);
bool prim_is_zero(const LefschetzProfile& p, int j);

LefschetzProfile dualize(const LefschetzProfile& p);

struct DualProfile {
  LefschetzProfile base;
  std::vector<int> widths;  // widths[k-1] = min(k, i), k = 1..N-1
};

DualProfile dual_widths(const LefschetzProfile& p);
// Re-read the B^k widths as a Lefschetz profile. Independent of dualize(),
// kept as a cross-check.
LefschetzProfile dualize_by_widths(const LefschetzProfile& p);

std::string to_string(Orientation o);

}  // namespace hpd
