#include "ncsp/render.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace ncsp {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 30.0;

std::string hsl(int i, int k) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%d,75%%,45%%)", k > 0 ? (i * 360 / k) % 360 : 0);
  return buf;
}

}  // namespace

void render_svg(std::ostream& out, const PlanarEmbedding& emb, const NormalizedInstance& inst,
                const SupergraphTimeline* timeline, const std::vector<std::vector<DartId>>& paths) {
  if (!emb.has_coords()) throw Error(ErrorKind::ParamOutOfRange, "instance has no coordinates to draw");
  const auto pts = emb.coords();
  double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double scale = (kSize - 2 * kMargin) / std::max({x1 - x0, y1 - y0, 1e-9});
  // Coordinates are y-up; SVG is y-down.
  const auto sx = [&](VertexId v) { return kMargin + (pts[v].x - x0) * scale; };
  const auto sy = [&](VertexId v) { return kMargin + (y1 - pts[v].y) * scale; };
  const double unit = std::clamp(scale * 0.08, 0.5, 4.0);

  char buf[256];
  const auto line = [&](VertexId a, VertexId b, const std::string& colour, double width) {
    std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"%.2f\"/>\n",
                  sx(a), sy(a), sx(b), sy(b), colour.c_str(), width);
    out << buf;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g id=\"edges\">\n";
  for (EdgeId e = 0; e < emb.num_edges(); ++e) {
    const bool in_x = timeline != nullptr && timeline->edge_stamp[e] != kNeverStamped;
    line(emb.tail(2 * e), emb.head(2 * e), in_x ? "#999" : "#ddd", in_x ? unit : unit * 0.5);
  }
  out << "</g>\n<g id=\"boundary\">\n";
  for (DartId d : emb.outer_darts()) line(emb.tail(d), emb.head(d), "black", unit * 1.2);
  out << "</g>\n<g id=\"paths\">\n";
  const int k = static_cast<int>(paths.size());
  for (int i = 0; i < k; ++i) {
    out << "<g id=\"path" << i + 1 << "\">\n";
    for (DartId d : paths[i]) line(emb.tail(d), emb.head(d), hsl(i, k), unit * 2.0);
    out << "</g>\n";
  }
  out << "</g>\n<g id=\"terminals\" font-family=\"sans-serif\" font-size=\"" << std::max(8.0, unit * 5) << "\">\n";
  for (int i = 0; i < inst.size(); ++i) {
    for (VertexId v : {inst.pairs[i].s, inst.pairs[i].t}) {
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\"/>\n", sx(v), sy(v),
                    unit * 3, hsl(i, k).c_str());
      out << buf;
      std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\">%c%d</text>\n", sx(v) + unit * 4,
                    sy(v) - unit * 4, v == inst.pairs[i].s ? 's' : 't', i + 1);
      out << buf;
    }
  }
  out << "</g>\n</svg>\n";
}

}  // namespace ncsp
