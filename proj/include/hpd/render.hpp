#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hpd/chessboard.hpp"
#include "hpd/profile.hpp"
#include "hpd/prover.hpp"

namespace hpd {

enum class Format { Text, SVG };
enum class Style { Staircase, Source, Failed, Accent };

struct Highlight {
  Region region;
  Style style = Style::Staircase;
};

struct RenderOptions {
  Format format = Format::Text;
  int cell = 24;  // SVG pixels
  std::vector<Highlight> highlight;
  bool cl_columns = false;  // also draw the C^L_b columns; forced on when a highlight uses them
};

struct RenderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kMaxRenderN = 200;

std::string render_profile_pair(const LefschetzProfile& p, const RenderOptions& opts);
std::string render_chessboard(const ChessboardSpec& spec, const RenderOptions& opts);
std::string render_trace(const ProofTrace& t, const RenderOptions& opts);

// Glyph used for highlighted chessboard cells in text output.
const char* style_glyph(Style s);
Style parse_style(const std::string& name);  // throws RenderError

}  // namespace hpd
