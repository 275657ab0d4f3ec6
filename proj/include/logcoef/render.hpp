#pragma once

// Boundary curves f(r e^{i theta}) as CSV rows or a single-path SVG.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "logcoef/atlas.hpp"

namespace logcoef {

enum class CurveFormat { csv, svg };

struct RenderCurve {
  FunctionSpec spec;
  double r = 0.999;
  std::vector<double> theta;
  std::vector<cplx> points;
};

/// m points at theta_j = 2 pi j / (m - 1), j = 0..m-1, so the first and last coincide.
inline RenderCurve render_curve(const FunctionSpec& spec, double r, std::size_t m) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("render_curve: r must lie in (0, 1)");
  if (m < 2) throw std::invalid_argument("render_curve: at least 2 points");
  RenderCurve c{spec, r, {}, {}};
  c.theta.resize(m);
  c.points.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    // the last angle is exactly 2 pi; sample it at 0 so the curve closes exactly
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m - 1);
    c.theta[j] = t;
    c.points[j] = j + 1 == m ? c.points[0] : eval_at(spec, std::polar(r, t));
  }
  return c;
}

namespace detail {
inline std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}
inline std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}
}  // namespace detail

inline std::string to_csv(const RenderCurve& c) {
  std::string s = "theta,re,im\n";
  for (std::size_t j = 0; j < c.points.size(); ++j)
    s += detail::fmt17(c.theta[j]) + "," + detail::fmt17(c.points[j].real()) + "," +
         detail::fmt17(c.points[j].imag()) + "\n";
  return s;
}

/// SVG 1.1 with one closed path; y is flipped so the imaginary axis points up.
inline std::string to_svg(const RenderCurve& c) {
  double xmin = c.points[0].real(), xmax = xmin, ymin = -c.points[0].imag(), ymax = ymin;
  for (const cplx& p : c.points) {
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, -p.imag());
    ymax = std::max(ymax, -p.imag());
  }
  const double w = std::max(xmax - xmin, 1e-12), h = std::max(ymax - ymin, 1e-12);
  const double mx = 0.05 * w, my = 0.05 * h;
  const double stroke = 0.002 * std::max(w, h);
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << detail::fmt6(xmin - mx) << ' '
    << detail::fmt6(ymin - my) << ' ' << detail::fmt6(w + 2 * mx) << ' ' << detail::fmt6(h + 2 * my)
    << "\" width=\"800\" height=\"800\" preserveAspectRatio=\"xMidYMid meet\">\n"
    << "  <title>" << render(c.spec) << ", r = " << detail::fmt17(c.r) << "</title>\n"
    << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"" << detail::fmt6(stroke) << "\" d=\"";
  // the final sample repeats the first, so Z closes the curve without duplicating it
  for (std::size_t j = 0; j + 1 < c.points.size(); ++j)
    o << (j ? " L" : "M") << detail::fmt6(c.points[j].real()) << ',' << detail::fmt6(-c.points[j].imag());
  o << " Z\"/>\n</svg>\n";
  return o.str();
}

/// Writes via a sibling temporary and a rename, so readers never see a partial file.
inline void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("rename to " + path.string() + " failed: " + ec.message());
  }
}

}  // namespace logcoef
