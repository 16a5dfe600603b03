#include "slopenorm/plot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <Eigen/Eigenvalues>

namespace slopenorm {
namespace {

std::string xml_escape(std::string_view text) {
  std::string escaped;
  for (const char c : text) {
    switch (c) {
      case '&': escaped += "&amp;"; break;
      case '<': escaped += "&lt;"; break;
      case '>': escaped += "&gt;"; break;
      case '"': escaped += "&quot;"; break;
      default: escaped += c;
    }
  }
  return escaped;
}

}  // namespace

std::string unit_ball_svg(const ManifoldData& manifold, std::optional<Rational> level) {
  if (!manifold.cusp || !manifold.norm) {
    throw std::invalid_argument("plot needs both a cusp and a norm");
  }
  const Rational nm(meridian_norm(*manifold.norm));
  const Rational s = level.value_or(Rational(9) * nm * nm / Rational(4));
  if (s.sign() <= 0) throw std::invalid_argument("plot level must be positive");

  std::vector<Eigen::Vector2d> polygon;
  for (const Point2Q& v : unit_ball_vertices(*manifold.norm)) {
    const Point2Q scaled = v * nm;
    polygon.emplace_back(scaled(0).convert_to<double>(), scaled(1).convert_to<double>());
  }

  const Eigen::Matrix2d gram = manifold.cusp->gram.unaryExpr(
      [](const Rational& x) { return x.convert_to<double>(); });
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(gram);
  const double level_d = s.convert_to<double>();
  const Eigen::Vector2d axes = (level_d / solver.eigenvalues().array()).sqrt();
  const Eigen::Vector2d major = solver.eigenvectors().col(0);
  const double angle = std::atan2(major.y(), major.x()) * 180.0 / std::numbers::pi;

  // Bounding box of both shapes, for the view transform.
  double extent = axes.maxCoeff();
  for (const auto& p : polygon) extent = std::max(extent, p.cwiseAbs().maxCoeff());
  constexpr double kSize = 480.0;
  const double scale = 0.45 * kSize / extent;

  std::ostringstream svg;
  svg.precision(10);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
      << "  <title>" << xml_escape(manifold.name) << ": norm/norm(m) unit ball and length^2 = "
      << to_string(s) << "</title>\n"
      << "  <g transform=\"translate(" << kSize / 2 << ',' << kSize / 2 << ") scale(" << scale
      << ',' << -scale << ")\">\n"
      << "    <line x1=\"" << -extent << "\" y1=\"0\" x2=\"" << extent
      << "\" y2=\"0\" stroke=\"#999\" vector-effect=\"non-scaling-stroke\"/>\n"
      << "    <line x1=\"0\" y1=\"" << -extent << "\" x2=\"0\" y2=\"" << extent
      << "\" stroke=\"#999\" vector-effect=\"non-scaling-stroke\"/>\n"
      << "    <polygon points=\"";
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    svg << (i ? " " : "") << polygon[i].x() << ',' << polygon[i].y();
  }
  svg << "\" fill=\"#4a90d9\" fill-opacity=\"0.3\" stroke=\"#1f5f99\" "
         "vector-effect=\"non-scaling-stroke\"/>\n"
      << "    <ellipse cx=\"0\" cy=\"0\" rx=\"" << axes(0) << "\" ry=\"" << axes(1)
      << "\" transform=\"rotate(" << angle << ")\" fill=\"none\" stroke=\"#c0392b\" "
         "vector-effect=\"non-scaling-stroke\"/>\n"
      << "  </g>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace slopenorm
