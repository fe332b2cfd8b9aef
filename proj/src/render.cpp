#include "hpd/render.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace hpd {

const char* style_glyph(Style s) {
  switch (s) {
    case Style::Staircase: return "▓";
    case Style::Source: return "●";
    case Style::Failed: return "✗";
    case Style::Accent: return "░";
  }
  return "?";
}

Style parse_style(const std::string& name) {
  if (name == "staircase") return Style::Staircase;
  if (name == "source") return Style::Source;
  if (name == "failed") return Style::Failed;
  if (name == "accent") return Style::Accent;
  throw RenderError("unknown style '" + name + "' (staircase, source, failed, accent)");
}

namespace {

const char* style_fill(Style s) {
  switch (s) {
    case Style::Staircase: return "#9ecae1";
    case Style::Source: return "#fdae6b";
    case Style::Failed: return "#e34a33";
    case Style::Accent: return "#d9d9d9";
  }
  return "#ffffff";
}

std::string pad(const std::string& s, size_t w) {
  // Labels are ASCII, so byte length is display width.
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

// A grid of one-glyph cells drawn with box-drawing characters.
std::string text_grid(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                      const std::vector<std::vector<std::string>>& cells) {
  size_t lw = 0;
  for (const auto& r : rows) lw = std::max(lw, r.size());
  size_t cw = 3;
  for (const auto& c : cols) cw = std::max(cw, c.size() + 1);
  std::ostringstream out;
  auto rule = [&](const char* l, const char* m, const char* r) {
    out << std::string(lw + 1, ' ') << l;
    for (size_t c = 0; c < cols.size(); ++c) {
      for (size_t k = 0; k < cw; ++k) out << "─";
      out << (c + 1 == cols.size() ? r : m);
    }
    out << "\n";
  };
  out << std::string(lw + 3, ' ');
  for (const auto& c : cols) {
    const size_t left = c.size() < cw ? (cw - c.size()) / 2 : 0;
    out << pad(std::string(left, ' ') + c, cw) << " ";
  }
  out << "\n";
  if (cols.empty()) return out.str();
  rule("┌", "┬", "┐");
  for (size_t r = 0; r < rows.size(); ++r) {
    out << pad(rows[r], lw) << " │";
    for (size_t c = 0; c < cols.size(); ++c) {
      const std::string& g = cells[r][c];
      const size_t left = (cw - 1) / 2;
      out << std::string(left, ' ') << (g.empty() ? " " : g) << std::string(cw - 1 - left, ' ') << "│";
    }
    out << "\n";
    if (r + 1 < rows.size()) rule("├", "┼", "┤");
  }
  rule("└", "┴", "┘");
  return out.str();
}

struct Board {
  int i = 0, l = 0;
  bool cl = false;
  std::vector<std::string> row_labels, col_labels;
  std::vector<int> row_alpha;  // top to bottom
  // column index of (is_cl, beta)
  std::map<std::pair<bool, int>, int> col_of;
  std::vector<std::vector<std::optional<Style>>> cells;
  std::vector<std::pair<std::string, Style>> unplaced;

  std::optional<std::pair<int, int>> place(const BoxSymbol& b) const {
    if (b.type != BoxSymbol::Type::Tensor || b.x.kind != Kind::Amb || b.x.twist != b.x.index) return std::nullopt;
    const int a = b.x.index;
    if (a < 0 || a > i - 1) return std::nullopt;
    std::pair<bool, int> key;
    if (b.s.kind == Kind::Amb && b.s.twist == b.s.index) key = {false, b.s.index};
    else if (b.s.kind == Kind::AmbL && b.s.twist == b.s.index + 1 - l) key = {true, b.s.index};
    else return std::nullopt;
    auto it = col_of.find(key);
    if (it == col_of.end()) return std::nullopt;
    return std::make_pair(i - 1 - a, it->second);
  }
};

bool uses_cl(const std::vector<Highlight>& hs) {
  for (const auto& h : hs)
    for (const auto& b : h.region)
      if (b.type == BoxSymbol::Type::Tensor && b.s.kind == Kind::AmbL) return true;
  return false;
}

Board make_board(const ChessboardSpec& spec, const RenderOptions& opts) {
  validate_spec(spec);
  if (spec.N() > kMaxRenderN) throw RenderError("unrenderable size: N = " + std::to_string(spec.N()) + " > 200");
  Board bd;
  bd.i = spec.i();
  bd.l = spec.l();
  bd.cl = opts.cl_columns || uses_cl(opts.highlight);
  for (int a = bd.i - 1; a >= 0; --a) {
    bd.row_alpha.push_back(a);
    bd.row_labels.push_back("A_" + std::to_string(a) + "(" + std::to_string(a) + ")");
  }
  if (bd.cl)
    for (int b = 1; b <= bd.l - 1; ++b) {
      bd.col_of[{true, b}] = static_cast<int>(bd.col_labels.size());
      bd.col_labels.push_back("L" + std::to_string(b));
    }
  for (int b = 1; b <= bd.l - 1; ++b) {
    bd.col_of[{false, b}] = static_cast<int>(bd.col_labels.size());
    bd.col_labels.push_back("C" + std::to_string(b));
  }
  bd.cells.assign(bd.row_labels.size(), std::vector<std::optional<Style>>(bd.col_labels.size()));
  for (const auto& h : opts.highlight)
    for (const auto& b : h.region) {
      if (auto pos = bd.place(b)) bd.cells[pos->first][pos->second] = h.style;
      else bd.unplaced.emplace_back(to_string(b), h.style);
    }
  return bd;
}

std::string board_text(const Board& bd, const std::string& title) {
  std::vector<std::vector<std::string>> g(bd.cells.size(), std::vector<std::string>(bd.col_labels.size()));
  for (size_t r = 0; r < bd.cells.size(); ++r)
    for (size_t c = 0; c < bd.col_labels.size(); ++c)
      if (bd.cells[r][c]) g[r][c] = style_glyph(*bd.cells[r][c]);
  std::ostringstream out;
  out << title << "\n";
  out << "columns: C<b> = C_b(b)";
  if (bd.cl) out << ", L<b> = CL_b(b+1-l)";
  out << "\n";
  out << text_grid(bd.row_labels, bd.col_labels, g);
  for (const auto& [name, st] : bd.unplaced) out << style_glyph(st) << " " << name << "\n";
  out << "† box sizes drawn uniformly\n";
  return out.str();
}

struct Svg {
  std::ostringstream body;
  int w = 0, h = 0;

  std::string str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
  void rect(int x, int y, int rw, int rh, const char* fill) {
    body << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << rw << "\" height=\"" << rh << "\" fill=\""
         << fill << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  void text(int x, int y, int size, const std::string& s, const char* anchor = "start") {
    body << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"" << size
         << "\" text-anchor=\"" << anchor << "\">" << esc(s) << "</text>\n";
  }
};

int cell_size(const RenderOptions& o) {
  if (o.cell <= 0) throw RenderError("cell size must be positive");
  return o.cell;
}

// Draws the board; returns the pixel origin of cell (0, 0).
std::pair<int, int> board_svg(Svg& svg, const Board& bd, int cs, const std::string& title) {
  const int label_w = cs * 4, top = cs * 2;
  const int cols = static_cast<int>(bd.col_labels.size()), rows = static_cast<int>(bd.row_labels.size());
  svg.w = label_w + cols * cs + cs;
  svg.h = top + rows * cs + cs * (2 + static_cast<int>(bd.unplaced.size()));
  const int fs = std::max(8, cs / 2);
  svg.text(cs / 4, fs + 2, fs, title);
  for (int c = 0; c < cols; ++c) svg.text(label_w + c * cs + cs / 2, top - cs / 4, fs, bd.col_labels[c], "middle");
  for (int r = 0; r < rows; ++r) {
    svg.text(label_w - cs / 4, top + r * cs + cs * 2 / 3, fs, bd.row_labels[r], "end");
    for (int c = 0; c < cols; ++c) {
      const auto& st = bd.cells[r][c];
      svg.rect(label_w + c * cs, top + r * cs, cs, cs, st ? style_fill(*st) : "#ffffff");
    }
  }
  int y = top + rows * cs + cs;
  for (const auto& [name, st] : bd.unplaced) {
    svg.rect(cs / 4, y - cs / 2, cs / 2, cs / 2, style_fill(st));
    svg.text(cs, y, fs, name);
    y += cs;
  }
  svg.text(cs / 4, y, fs, "† box sizes drawn uniformly");
  return {label_w, top};
}

}  // namespace

std::string render_profile_pair(const LefschetzProfile& p, const RenderOptions& opts) {
  require_valid(p);
  if (p.N > kMaxRenderN) throw RenderError("unrenderable size: N = " + std::to_string(p.N) + " > 200");
  const int N = p.N;
  std::vector<int> rows;  // block indices, longest first
  for (int j = p.length() - 1; j >= 0; --j)
    if (!p.blocks[j].is_zero()) rows.push_back(j);
  const std::string title = p.name + "  N=" + std::to_string(N) + "  i=" + std::to_string(p.length()) + "  (" +
                            to_string(p.orientation) + ")";

  if (opts.format == Format::Text) {
    std::vector<std::string> labels, cols;
    std::vector<std::vector<std::string>> g;
    for (int c = 0; c < N; ++c) cols.push_back(std::to_string(c));
    for (int j : rows) {
      labels.push_back(p.blocks[j].label + " [" + std::to_string(p.blocks[j].euler) + "]");
      std::vector<std::string> row;
      // a_j sits in A_0..A_j, its dual partner fills the rest of the strip.
      for (int c = 0; c < N; ++c) row.push_back(c <= j ? "□" : "■");
      g.push_back(std::move(row));
    }
    std::ostringstream out;
    out << title << "\n";
    out << "□ Lefschetz diagram   ■ dual (complementary) diagram\n";
    out << text_grid(labels, cols, g);
    out << "† box sizes drawn uniformly\n";
    return out.str();
  }

  const int cs = cell_size(opts), label_w = cs * 6, top = cs * 2;
  const int fs = std::max(8, cs / 2);
  Svg svg;
  svg.w = label_w + N * cs + cs;
  svg.h = top + static_cast<int>(rows.size()) * cs + cs * 2;
  svg.text(cs / 4, fs + 2, fs, title);
  for (int c = 0; c < N; ++c) svg.text(label_w + c * cs + cs / 2, top - cs / 4, fs, std::to_string(c), "middle");
  for (size_t r = 0; r < rows.size(); ++r) {
    const int j = rows[r], y = top + static_cast<int>(r) * cs;
    svg.text(label_w - cs / 4, y + cs * 2 / 3, fs, p.blocks[j].label, "end");
    for (int c = 0; c < N; ++c) svg.rect(label_w + c * cs, y, cs, cs, c <= j ? "#ffffff" : "#c8c8c8");
  }
  svg.text(cs / 4, svg.h - cs / 2, fs, "† box sizes drawn uniformly");
  return svg.str();
}

std::string render_chessboard(const ChessboardSpec& spec, const RenderOptions& opts) {
  const Board bd = make_board(spec, opts);
  const std::string title = "chessboard  i=" + std::to_string(spec.i()) + "  l=" + std::to_string(spec.l()) +
                            "  N=" + std::to_string(spec.N());
  if (opts.format == Format::Text) return board_text(bd, title);
  Svg svg;
  board_svg(svg, bd, cell_size(opts), title);
  return svg.str();
}

std::string render_trace(const ProofTrace& t, const RenderOptions& opts) {
  const size_t failed = t.failed_count();
  if (opts.format == Format::Text) {
    std::ostringstream out;
    out << "phase | source | target | rule | status\n";
    for (const auto& o : t.obligations)
      out << (o.discharged ? "   " : "!! ") << to_string(o.phase) << "[" << o.family << "] | " << o.source_text
          << " | " << o.target_text << " | " << o.rule << " | " << (o.discharged ? "discharged" : "failed") << "\n";
    if (!t.obligations.empty())
      out << "summary: " << t.obligations.size() << " obligations, " << failed << " failed\n";
    return out.str();
  }

  // SVG: chessboard with the Step 1 targets in visiting order joined by the
  // Zig-Zag path; failed targets in red.
  RenderOptions o = opts;
  o.cl_columns = true;
  Region visited, bad;
  std::vector<BoxSymbol> path;
  for (const auto& ob : t.obligations) {
    if (ob.phase == Phase::Generation_Step1 && ob.family == "a" && ob.target) {
      if (path.empty() || path.back() != *ob.target) path.push_back(*ob.target);
      visited.insert(*ob.target);
    }
    if (!ob.discharged && ob.target) bad.insert(*ob.target);
  }
  o.highlight.push_back({visited, Style::Accent});
  o.highlight.push_back({bad, Style::Failed});
  if (t.obligations.empty()) {
    Svg svg;
    svg.w = 320;
    svg.h = 40;
    svg.text(8, 24, 14, "empty trace");
    return svg.str();
  }
  const Board bd = make_board(t.spec, o);
  Svg svg;
  const std::string title = "trace  i=" + std::to_string(t.spec.i()) + "  l=" + std::to_string(t.spec.l()) +
                            "  N=" + std::to_string(t.spec.N()) + "  obligations=" +
                            std::to_string(t.obligations.size()) + "  failed=" + std::to_string(failed);
  const int cs = cell_size(opts);
  const auto [x0, y0] = board_svg(svg, bd, cs, title);
  if (path.size() >= 2) {
    svg.body << "<polyline fill=\"none\" stroke=\"#636363\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& b : path)
      if (auto pos = bd.place(b)) {
        svg.body << (first ? "" : " ") << x0 + pos->second * cs + cs / 2 << "," << y0 + pos->first * cs + cs / 2;
        first = false;
      }
    svg.body << "\"/>\n";
  }
  return svg.str();
}

}  // namespace hpd
