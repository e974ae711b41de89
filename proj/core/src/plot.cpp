#include "bstab/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bstab {

namespace {

std::string num(double x, const char* fmt = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

std::string px(double x) { return num(x, "%.3f"); }

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

bool PlotDoc::empty_locus() const {
  for (const auto& l : layers)
    if (!l.guide && !l.locus.empty()) return false;
  return true;
}

std::string emit_csv(const PlotDoc& doc) {
  std::ostringstream out;
  out << "coord1,coord2,residual\n";
  for (const auto& l : doc.layers) {
    if (l.guide) continue;
    for (const auto& b : l.locus.branches)
      for (const auto& p : b) out << num(p.c1) << ',' << num(p.c2) << ',' << num(p.residual, "%.3e") << '\n';
  }
  return out.str();
}

std::string emit_svg(const PlotDoc& doc, int width, int height) {
  const Viewport& v = doc.view;
  const double margin = 40;
  const double W = width - 2 * margin, H = height - 2 * margin;
  auto sx = [&](double x) { return margin + (x - v.xmin) / (v.xmax - v.xmin) * W; };
  auto sy = [&](double y) { return margin + (v.ymax - y) / (v.ymax - v.ymin) * H; };
  auto inside = [&](const LocusPoint& p) {
    return p.c1 >= v.xmin && p.c1 <= v.xmax && p.c2 >= v.ymin && p.c2 <= v.ymax;
  };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  o << "<metadata>{\"title\":\"" << escape(doc.title) << "\",\"viewport\":[" << num(v.xmin) << ',' << num(v.xmax) << ','
    << num(v.ymin) << ',' << num(v.ymax) << "],\"warnings\":[" << (doc.empty_locus() ? "\"EmptyLocus\"" : "")
    << "]}</metadata>\n";
  o << "<title>" << escape(doc.title) << "</title>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // Axes along the viewport frame, plus the coordinate axes when visible.
  std::string xlabel = "coord1", ylabel = "coord2";
  for (const auto& l : doc.layers)
    if (!l.locus.coord1.empty()) {
      xlabel = l.locus.coord1;
      ylabel = l.locus.coord2;
      break;
    }
  o << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  o << "<rect x=\"" << px(margin) << "\" y=\"" << px(margin) << "\" width=\"" << px(W) << "\" height=\"" << px(H) << "\"/>\n";
  if (v.ymin <= 0 && v.ymax >= 0)
    o << "<line x1=\"" << px(sx(v.xmin)) << "\" y1=\"" << px(sy(0)) << "\" x2=\"" << px(sx(v.xmax)) << "\" y2=\"" << px(sy(0))
      << "\" stroke-dasharray=\"2,2\"/>\n";
  if (v.xmin <= 0 && v.xmax >= 0)
    o << "<line x1=\"" << px(sx(0)) << "\" y1=\"" << px(sy(v.ymin)) << "\" x2=\"" << px(sx(0)) << "\" y2=\"" << px(sy(v.ymax))
      << "\" stroke-dasharray=\"2,2\"/>\n";
  o << "</g>\n";
  o << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  o << "<text x=\"" << px(margin) << "\" y=\"" << px(height - margin / 3) << "\">" << escape(xlabel) << " [" << num(v.xmin)
    << ", " << num(v.xmax) << "]</text>\n";
  o << "<text x=\"" << px(margin / 4) << "\" y=\"" << px(margin / 2) << "\">" << escape(ylabel) << " [" << num(v.ymin) << ", "
    << num(v.ymax) << "]</text>\n";
  o << "</g>\n";

  for (std::size_t li = 0; li < doc.layers.size(); ++li) {
    const auto& l = doc.layers[li];
    o << "<g id=\"layer" << li << "\" class=\"" << (l.guide ? "guide" : "locus") << "\" data-name=\"" << escape(l.name) << "\">\n";
    if (l.locus.scattered) {
      for (const auto& b : l.locus.branches)
        for (const auto& p : b)
          if (inside(p))
            o << "<circle cx=\"" << px(sx(p.c1)) << "\" cy=\"" << px(sy(p.c2)) << "\" r=\"1\" fill=\"" << l.color << "\"/>\n";
    } else {
      for (const auto& b : l.locus.branches) {
        std::vector<const LocusPoint*> run;
        auto emit = [&] {
          if (run.size() >= 2) {
            o << "<polyline fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t k = 0; k < run.size(); ++k)
              o << (k ? " " : "") << px(sx(run[k]->c1)) << ',' << px(sy(run[k]->c2));
            o << "\"/>\n";
          } else if (run.size() == 1) {
            o << "<circle cx=\"" << px(sx(run[0]->c1)) << "\" cy=\"" << px(sy(run[0]->c2)) << "\" r=\"2\" fill=\"" << l.color
              << "\"/>\n";
          }
          run.clear();
        };
        for (const auto& p : b) {
          if (inside(p)) run.push_back(&p);
          else emit();
        }
        emit();
      }
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

PlotDoc figure1(const Rational& c, const Viewport& view) {
  PlotDoc doc;
  doc.title = "surface walls in (t1+t2, t1*t2)";
  doc.view = view;
  PlotLayer par;
  par.name = "parabola q = p^2/4";
  par.color = "black";
  par.guide = true;
  par.locus.coord1 = "p";
  par.locus.coord2 = "q";
  std::vector<LocusPoint> pts;
  const int n = 401;
  for (int i = 0; i < n; ++i) {
    LocusPoint p;
    p.c1 = view.xmin + (view.xmax - view.xmin) * i / (n - 1);
    p.c2 = p.c1 * p.c1 / 4;
    p.t = {p.c1 / 2, p.c1 / 2};
    pts.push_back(p);
  }
  par.locus.branches.push_back(std::move(pts));
  doc.layers.push_back(std::move(par));

  PlotLayer h;
  h.name = "Sb of (1, 0, -c)";
  h.color = "blue";
  h.locus = sb_v_surface(LatticeVector{{Rational(1), Rational(0), Rational(-c)}}, view);
  doc.layers.push_back(std::move(h));

  PlotLayer s;
  s.name = "Sb of (1, -1, 1/2)";
  s.color = "red";
  s.locus = sb_v_surface(LatticeVector{{Rational(1), Rational(-1), ratio(1, 2)}}, view);
  doc.layers.push_back(std::move(s));
  return doc;
}

PlotDoc figure4(long long m, const Viewport& view) {
  PlotDoc doc;
  doc.title = "Hilbert scheme walls in (-sum t, sum t_i t_j), m = " + std::to_string(m);
  doc.view = view;
  HilbBounds hb = hilb_bounds(m);

  PlotLayer b;
  b.name = "double-root boundary";
  b.color = "black";
  b.guide = true;
  b.locus = hilb_boundary(m, 0.05, std::max(view.xmax, 1.0), 800);
  doc.layers.push_back(std::move(b));

  PlotLayer red;
  red.name = "t1 = -M, M = " + std::to_string(hb.M);
  red.color = "red";
  red.locus = hilb_red_line(m, hb.M);
  doc.layers.push_back(std::move(red));

  PlotLayer green;
  green.name = "t3 = -N, N = " + std::to_string(hb.N);
  green.color = "green";
  green.locus = hilb_green_line(m, hb.N);
  doc.layers.push_back(std::move(green));
  return doc;
}

}  // namespace bstab
