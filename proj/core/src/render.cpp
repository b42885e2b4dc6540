#include "legfront/render.hpp"

#include <cstdio>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "legfront/error.hpp"

namespace legfront {

namespace {

// Where each strand of gap k continues in gap k + 1, or 0 if it ends in the
// event's cusp.
int carry(const FrontEvent& e, int p) {
  const int i = e.position;
  switch (e.kind) {
    case EventKind::LeftCusp:
      return p < i ? p : p + 2;
    case EventKind::RightCusp:
      if (p < i) return p;
      if (p > i + 1) return p - 2;
      return 0;
    case EventKind::Crossing:
      if (p == i) return i + 1;
      if (p == i + 1) return i;
      return p;
  }
  return p;
}

class Canvas {
 public:
  Canvas(int width, int height)
      : width_(width), rows_(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' ')),
        owner_(static_cast<std::size_t>(height * width), -1) {}

  void allow_shared(int x, int y) { shared_.emplace(x, y); }

  void put(int x, int y, char ch, int owner) {
    const std::size_t cell = static_cast<std::size_t>(y * width_ + x);
    if (owner_[cell] != -1 && owner_[cell] != owner && !shared_.contains({x, y})) {
      throw Error(ErrorCode::InternalConsistency,
                  "render overlap at column " + std::to_string(x) + ", row " +
                      std::to_string(y));
    }
    owner_[cell] = owner;
    rows_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = ch;
  }

  const std::vector<std::string>& rows() const { return rows_; }

 private:
  int width_;
  std::vector<std::string> rows_;
  std::vector<int> owner_;
  std::set<std::pair<int, int>> shared_;
};

std::string render_ascii(const OrientedFront& of, const RenderSpec& spec) {
  const FrontDiagram& d = of.diagram();
  const int w = spec.column_width;
  const int h = spec.strand_spacing;
  if (h < 2 || h % 2 != 0 || w < h + 2) {
    throw Error(ErrorCode::InvalidArgument,
                "ASCII needs an even strand spacing >= 2 and column width >= spacing + 2");
  }
  const int max_s = d.max_strands();
  auto row = [&](std::size_t gap, int p) {
    return ((max_s - d.strands(gap)) / 2 + (p - 1)) * h;
  };
  const int header = spec.show_event_indices ? 1 : 0;
  const int width = static_cast<int>(d.size()) * w + 1;
  const int height = (max_s - 1) * h + 1;
  Canvas canvas(width, height);
  int owner = 0;

  for (std::size_t k = 0; k < d.size(); ++k) {
    const FrontEvent& e = d[k];
    const int x0 = static_cast<int>(k) * w;
    // Strands displaced by a right cusp move at the end of the column so the
    // closing cusp has room; everything else moves at the start.
    const int lead = e.kind == EventKind::RightCusp ? w - 1 - h : 0;

    auto strand = [&](int y0, int y1, int first_diag) {
      const int id = owner++;
      const int dy = y1 > y0 ? 1 : (y1 < y0 ? -1 : 0);
      for (int t = 0; t < w; ++t) {
        if (dy == 0 || t <= first_diag) {
          canvas.put(x0 + t, y0, '-', id);
        } else if (t < first_diag + h) {
          canvas.put(x0 + t, y0 + dy * (t - first_diag), dy > 0 ? '\\' : '/', id);
        } else {
          canvas.put(x0 + t, y1, '-', id);
        }
      }
    };

    if (e.kind == EventKind::Crossing) {
      const int y = row(k, e.position);
      canvas.allow_shared(x0 + h / 2, y + h / 2);
      strand(y + h, y, 0);  // under first
      strand(y, y + h, 0);  // over overwrites the shared cell
    }
    for (int p = 1; p <= d.strands(k); ++p) {
      const int q = carry(e, p);
      if (q == 0) continue;
      if (e.kind == EventKind::Crossing && (p == e.position || p == e.position + 1)) continue;
      strand(row(k, p), row(k + 1, q), lead);
    }

    if (e.kind == EventKind::LeftCusp) {
      const int id = owner++;
      const int yu = row(k + 1, e.position);
      const int yl = yu + h;
      canvas.put(x0 + 1, yu + h / 2, '<', id);
      for (int t = 1; t < h / 2; ++t) {
        canvas.put(x0 + 1 + t, yu + h / 2 - t, '/', id);
        canvas.put(x0 + 1 + t, yl - h / 2 + t, '\\', id);
      }
      for (int t = h / 2 + 1; t < w; ++t) {
        canvas.put(x0 + t, yu, '-', id);
        canvas.put(x0 + t, yl, '-', id);
      }
    } else if (e.kind == EventKind::RightCusp) {
      const int id = owner++;
      const int yu = row(k, e.position);
      const int yl = yu + h;
      const int tip = w - 2;
      canvas.put(x0 + tip, yu + h / 2, '>', id);
      for (int t = 1; t < h / 2; ++t) {
        canvas.put(x0 + tip - t, yu + h / 2 - t, '\\', id);
        canvas.put(x0 + tip - t, yl - h / 2 + t, '/', id);
      }
      for (int t = 0; t <= tip - h / 2; ++t) {
        canvas.put(x0 + t, yu, '-', id);
        canvas.put(x0 + t, yl, '-', id);
      }
    }
  }

  std::ostringstream out;
  if (header) {
    std::string line(static_cast<std::size_t>(width), ' ');
    for (std::size_t k = 0; k < d.size(); ++k) {
      const std::string label = std::to_string(k + 1);
      const std::size_t x = k * static_cast<std::size_t>(w) + 1;
      if (x + label.size() <= line.size() &&
          (k == 0 || line[x - 1] == ' ')) {
        line.replace(x, label.size(), label);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  for (std::string line : canvas.rows()) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  if (spec.show_components) {
    for (std::size_t c = 0; c < of.component_count(); ++c) {
      const auto& comp = of.components()[c];
      out << "component " << c << ": starts at event " << comp.first_event + 1 << ", "
          << comp.segments.size() << " segments, "
          << (of.flipped(c) ? "reversed" : "canonical") << '\n';
    }
  }
  return out.str();
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

const char* const kPalette[] = {"#1f4e9c", "#b2361f", "#2f7d32", "#7b3f9e",
                                "#a66a00", "#00796b", "#5d4037", "#c2185b"};

std::string render_svg(const OrientedFront& of, const RenderSpec& spec) {
  const FrontDiagram& d = of.diagram();
  if (spec.column_width < 1 || spec.strand_spacing < 1) {
    throw Error(ErrorCode::InvalidArgument, "SVG geometry must be positive");
  }
  const double unit = 10.0;
  const double cw = spec.column_width * unit;
  const double sp = spec.strand_spacing * unit;
  const double margin = 2 * unit;
  const double top = margin + (spec.show_event_indices ? 1.5 * unit : 0.0);
  const int max_s = d.max_strands();
  auto X = [&](std::size_t gap) { return margin + static_cast<double>(gap) * cw; };
  auto Y = [&](std::size_t gap, int p) {
    return top + ((max_s - d.strands(gap)) / 2.0 + (p - 1)) * sp;
  };
  auto colour = [&](Segment s) {
    return kPalette[of.component_of(s) % (sizeof kPalette / sizeof *kPalette)];
  };
  const double width = 2 * margin + static_cast<double>(d.size()) * cw;
  const double height = top + margin + (max_s - 1) * sp;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
      << num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g fill=\"none\" stroke-width=\"2\" stroke-linecap=\"round\">\n";

  auto curve = [&](double x0, double y0, double x1, double y1, const char* stroke,
                   double stroke_width) {
    const double xm = (x0 + x1) / 2;
    out << "<path d=\"M " << num(x0) << ' ' << num(y0) << " C " << num(xm) << ' ' << num(y0)
        << ", " << num(xm) << ' ' << num(y1) << ", " << num(x1) << ' ' << num(y1)
        << "\" stroke=\"" << stroke << '"';
    if (stroke_width != 2) out << " stroke-width=\"" << num(stroke_width) << '"';
    out << "/>\n";
  };

  for (std::size_t k = 0; k < d.size(); ++k) {
    const FrontEvent& e = d[k];
    const int i = e.position;
    for (int p = 1; p <= d.strands(k); ++p) {
      const int q = carry(e, p);
      if (q == 0) continue;
      if (e.kind == EventKind::Crossing && (p == i || p == i + 1)) continue;
      curve(X(k), Y(k, p), X(k + 1), Y(k + 1, q), colour({static_cast<int>(k), p}), 2);
    }
    if (e.kind == EventKind::Crossing) {
      const Segment under{static_cast<int>(k), i + 1};
      const Segment over{static_cast<int>(k), i};
      curve(X(k), Y(k, i + 1), X(k + 1), Y(k + 1, i), colour(under), 2);
      curve(X(k), Y(k, i), X(k + 1), Y(k + 1, i + 1), "white", 6);
      curve(X(k), Y(k, i), X(k + 1), Y(k + 1, i + 1), colour(over), 2);
    } else {
      const bool left = e.kind == EventKind::LeftCusp;
      const std::size_t g = left ? k + 1 : k;
      const double xb = X(g);
      const double tip = left ? X(k) + 0.25 * cw : X(k + 1) - 0.25 * cw;
      const double yu = Y(g, i), yl = Y(g, i + 1);
      const double ym = (yu + yl) / 2;
      const double cx = (xb + tip) / 2;
      out << "<path d=\"M " << num(xb) << ' ' << num(yu) << " C " << num(cx) << ' '
          << num(yu) << ", " << num(cx) << ' ' << num(ym) << ", " << num(tip) << ' '
          << num(ym) << " C " << num(cx) << ' ' << num(ym) << ", " << num(cx) << ' '
          << num(yl) << ", " << num(xb) << ' ' << num(yl) << "\" stroke=\""
          << colour({static_cast<int>(g), i}) << "\"/>\n";
    }
  }
  out << "</g>\n";

  if (spec.show_event_indices || spec.show_components) {
    out << "<g font-family=\"monospace\" font-size=\"10\" fill=\"black\">\n";
    if (spec.show_event_indices) {
      for (std::size_t k = 0; k < d.size(); ++k) {
        out << "<text x=\"" << num((X(k) + X(k + 1)) / 2) << "\" y=\"" << num(margin)
            << "\" text-anchor=\"middle\">" << k + 1 << "</text>\n";
      }
    }
    if (spec.show_components) {
      for (std::size_t c = 0; c < of.component_count(); ++c) {
        const std::size_t e = of.components()[c].first_event;
        const int i = d[e].position;
        const double ym = (Y(e + 1, i) + Y(e + 1, i + 1)) / 2;
        out << "<text x=\"" << num(X(e)) << "\" y=\"" << num(ym + 3)
            << "\" text-anchor=\"end\" fill=\""
            << kPalette[c % (sizeof kPalette / sizeof *kPalette)] << "\">K" << c
            << (of.direction({static_cast<int>(e) + 1, i}) == Direction::Rightward ? "" : "'")
            << "</text>\n";
      }
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const OrientedFront& of, const RenderSpec& spec) {
  return spec.format == RenderFormat::Svg ? render_svg(of, spec) : render_ascii(of, spec);
}

}  // namespace legfront
