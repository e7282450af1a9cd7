#include "annulus/fundamental_domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "annulus/errors.hpp"

namespace annulus {

Circle circle_through(std::complex<double> z1, std::complex<double> z2, std::complex<double> z3) {
  const double x1 = z1.real(), y1 = z1.imag();
  const double x2 = z2.real(), y2 = z2.imag();
  const double x3 = z3.real(), y3 = z3.imag();
  const double d = 2.0 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2));
  const double scale = std::max({std::abs(z1), std::abs(z2), std::abs(z3), 1.0});
  if (std::abs(d) < 1e-14 * scale * scale) throw DomainError("circle_through: points are collinear");
  const double s1 = x1 * x1 + y1 * y1;
  const double s2 = x2 * x2 + y2 * y2;
  const double s3 = x3 * x3 + y3 * y3;
  const std::complex<double> c((s1 * (y2 - y3) + s2 * (y3 - y1) + s3 * (y1 - y2)) / d,
                               (s1 * (x3 - x2) + s2 * (x1 - x3) + s3 * (x2 - x1)) / d);
  return {c, std::abs(z1 - c)};
}

bool FundamentalDomain::contains(std::complex<double> z, double tol) const {
  const double m = std::abs(z);
  return z.imag() > tol && m > s2.radius + tol && m < f_s2.radius - tol &&
         std::abs(z - s1.center) > s1.radius + tol && std::abs(z - g_s1.center) > g_s1.radius + tol;
}

FundamentalDomain fundamental_domain(const GroupParams& p) {
  const double k = p.k();
  const double r = p.r();
  const Generators G = build_group(p);
  const Circle s1{{(r + 1.0) / (2.0 * r), 0.0}, (r - 1.0) / (2.0 * r)};
  // g(S1) from the images of three points of S1
  const std::complex<double> top = s1.center + std::complex<double>(0.0, s1.radius);
  const Circle g_s1 = circle_through(G.g.apply(1.0 / r), G.g.apply(top), G.g.apply(1.0));
  return {k,
          r,
          {{0.0, 0.0}, 1.0 / k},
          {{0.0, 0.0}, k},
          s1,
          g_s1,
          {{{-k, -1.0 / k}, {1.0 / k, 1.0 / r}, {r, k}}}};
}

std::vector<std::string> reduced_words(int max_length) {
  static constexpr char kLetters[] = {'f', 'F', 'g', 'G'};
  auto inverse_of = [](char c) {
    switch (c) {
      case 'f': return 'F';
      case 'F': return 'f';
      case 'g': return 'G';
      default: return 'g';
    }
  };
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : layer) {
      for (const char c : kLetters) {
        if (!w.empty() && w.back() == inverse_of(c)) continue;
        next.push_back(w + c);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

MoebiusMap word_map(const Generators& G, const std::string& word) {
  const MoebiusMap fi = G.f.inverse();
  const MoebiusMap gi = G.g.inverse();
  MoebiusMap m = MoebiusMap::identity();
  for (const char c : word) {
    switch (c) {
      case 'f': m = compose(m, G.f); break;
      case 'F': m = compose(m, fi); break;
      case 'g': m = compose(m, G.g); break;
      case 'G': m = compose(m, gi); break;
      default: throw DomainError(std::string("unknown generator letter '") + c + "'");
    }
  }
  return m;
}

namespace {

constexpr double kWidth = 800.0;

std::string num(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Viewport {
  double k;
  double scale;
  double x(double re) const { return (re + 1.2 * k) * scale; }
  double y(double im) const { return (1.2 * k - im) * scale; }
};

// Upper half of the geodesic with real endpoints lo < hi.
std::string arc_path(const Viewport& v, double lo, double hi) {
  const double rad = 0.5 * (hi - lo) * v.scale;
  return "M " + num(v.x(lo)) + " " + num(v.y(0.0)) + " A " + num(rad) + " " + num(rad) +
         " 0 0 1 " + num(v.x(hi)) + " " + num(v.y(0.0));
}

std::string geodesic(const Viewport& v, BoundaryPoint p, BoundaryPoint q) {
  if (p.is_infinite() || q.is_infinite()) {
    const double x = p.is_infinite() ? q.value() : p.value();
    return "M " + num(v.x(x)) + " " + num(v.y(0.0)) + " L " + num(v.x(x)) + " " + num(v.y(1.2 * v.k));
  }
  const double lo = std::min(p.value(), q.value());
  const double hi = std::max(p.value(), q.value());
  return arc_path(v, lo, hi);
}

std::array<BoundaryPoint, 2> ends(const Circle& c) {
  return {BoundaryPoint::finite(c.center.real() - c.radius),
          BoundaryPoint::finite(c.center.real() + c.radius)};
}

}  // namespace

std::string render_svg(const GroupParams& p, int orbit_depth) {
  if (orbit_depth < 0 || orbit_depth > kMaxOrbitDepth) {
    throw DomainError("orbit depth must lie in 0..6");
  }
  const FundamentalDomain D = fundamental_domain(p);
  const double k = p.k();
  const Viewport v{k, kWidth / (2.4 * k)};
  const double height = 1.2 * k * v.scale;
  const std::array<const Circle*, 4> sides{&D.s2, &D.f_s2, &D.s1, &D.g_s1};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(kWidth) << " " << num(height) << "\">\n";
  os << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << num(kWidth)
     << "\" height=\"" << num(height) << "\"/></clipPath></defs>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(height)
     << "\" fill=\"white\"/>\n";
  os << "<g clip-path=\"url(#view)\" fill=\"none\" stroke-linecap=\"round\">\n";

  // the domain itself, boundary traversed from -k along the axis
  const double gs_hi = ends(D.g_s1)[1].value();
  os << "<path id=\"domain\" fill=\"#dbe8f5\" stroke=\"none\" d=\"M " << num(v.x(-k)) << " "
     << num(v.y(0.0)) << " L " << num(v.x(-1.0 / k)) << " " << num(v.y(0.0)) << " A "
     << num(D.s2.radius * v.scale) << " " << num(D.s2.radius * v.scale) << " 0 0 1 "
     << num(v.x(1.0 / k)) << " " << num(v.y(0.0)) << " L " << num(v.x(1.0 / p.r())) << " "
     << num(v.y(0.0)) << " A " << num(D.s1.radius * v.scale) << " " << num(D.s1.radius * v.scale)
     << " 0 0 1 " << num(v.x(1.0)) << " " << num(v.y(0.0)) << " A "
     << num(D.g_s1.radius * v.scale) << " " << num(D.g_s1.radius * v.scale) << " 0 0 1 "
     << num(v.x(gs_hi)) << " " << num(v.y(0.0)) << " L " << num(v.x(k)) << " "
     << num(v.y(0.0)) << " A " << num(k * v.scale) << " " << num(k * v.scale) << " 0 0 0 "
     << num(v.x(-k)) << " " << num(v.y(0.0)) << " Z\"/>\n";

  static constexpr const char* kSideIds[] = {"S2", "fS2", "S1", "gS1"};
  static constexpr const char* kSideColors[] = {"#1f4e9c", "#1f4e9c", "#b03a2e", "#b03a2e"};
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const auto [lo, hi] = ends(*sides[i]);
    os << "<path id=\"" << kSideIds[i] << "\" stroke=\"" << kSideColors[i]
       << "\" stroke-width=\"2\" d=\"" << arc_path(v, lo.value(), hi.value()) << "\"/>\n";
  }
  for (std::size_t i = 0; i < D.segments.size(); ++i) {
    os << "<path id=\"segment" << i + 1 << "\" stroke=\"#2e7d32\" stroke-width=\"3\" d=\"M "
       << num(v.x(D.segments[i].lo)) << " " << num(v.y(0.0)) << " L "
       << num(v.x(D.segments[i].hi)) << " " << num(v.y(0.0)) << "\"/>\n";
  }
  os << "<path id=\"axis\" stroke=\"#555555\" stroke-width=\"1\" d=\"M " << num(v.x(-1.2 * k))
     << " " << num(v.y(0.0)) << " L " << num(v.x(1.2 * k)) << " " << num(v.y(0.0)) << "\"/>\n";

  if (orbit_depth > 0) {
    const Generators G = build_group(p);
    os << "<g id=\"orbit\" stroke=\"#888888\" stroke-width=\"0.5\">\n";
    for (const std::string& w : reduced_words(orbit_depth)) {
      const MoebiusMap m = word_map(G, w);
      os << "<path data-word=\"" << w << "\" d=\"";
      for (std::size_t i = 0; i < sides.size(); ++i) {
        const auto [lo, hi] = ends(*sides[i]);
        if (i > 0) os << " ";
        os << geodesic(v, apply(m, lo), apply(m, hi));
      }
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace annulus
