#include "slopenorm/cs_norm.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace slopenorm {
namespace {

std::int64_t checked(__int128 value) {
  if (value > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("norm value out of range");
  }
  return static_cast<std::int64_t>(value);
}

/// Norm of the (not necessarily primitive) integer class p*m + q*l.
std::int64_t norm_at(const CSNormData& norm, std::int64_t p, std::int64_t q) {
  __int128 total = 0;
  for (const NormTerm& term : norm.terms()) {
    __int128 cross = static_cast<__int128>(p) * term.slope.q() -
                     static_cast<__int128>(q) * term.slope.p();
    if (cross < 0) cross = -cross;
    total += cross * term.weight;
  }
  return checked(total);
}

bool better_slope(const Slope& a, const Slope& b) {
  if (a.q() != b.q()) return a.q() < b.q();
  const auto abs_a = a.p() < 0 ? -a.p() : a.p();
  const auto abs_b = b.p() < 0 ? -b.p() : b.p();
  if (abs_a != abs_b) return abs_a < abs_b;
  return a.p() > b.p();
}

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Point2Q& v) {
  return (v(1).sign() > 0 || (v(1).sign() == 0 && v(0).sign() > 0)) ? 0 : 1;
}

}  // namespace

CSNormData::CSNormData(std::vector<NormTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto w = terms_[i].weight;
    if (w < 2 || w % 2 != 0) {
      throw std::invalid_argument("weight must be positive even (slope " +
                                  to_string(terms_[i].slope) + ", weight " +
                                  std::to_string(w) + ")");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (terms_[j].slope == terms_[i].slope) {
        throw std::invalid_argument("duplicate norm slope " + to_string(terms_[i].slope));
      }
    }
  }
  if (terms_.size() < 2) {
    throw std::invalid_argument("norm needs at least two distinct slopes");
  }
}

std::int64_t CSNormData::meridian_weight() const {
  for (const NormTerm& term : terms_) {
    if (term.slope.is_meridian()) return term.weight;
  }
  return 0;
}

BoundarySlopeSet::BoundarySlopeSet(std::vector<Slope> slopes) : slopes_(std::move(slopes)) {
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (slopes_[i] == slopes_[j]) {
        throw std::invalid_argument("duplicate boundary slope " + to_string(slopes_[i]));
      }
    }
  }
  if (std::none_of(slopes_.begin(), slopes_.end(), [](const Slope& s) { return s.is_finite(); })) {
    throw std::invalid_argument("boundary slope set has no finite slope");
  }
}

bool BoundarySlopeSet::contains(const Slope& s) const {
  return std::find(slopes_.begin(), slopes_.end(), s) != slopes_.end();
}

std::vector<Slope> BoundarySlopeSet::finite_sorted() const {
  std::vector<Slope> out;
  std::copy_if(slopes_.begin(), slopes_.end(), std::back_inserter(out),
               [](const Slope& s) { return s.is_finite(); });
  std::sort(out.begin(), out.end(), numeric_less);
  return out;
}

Rational BoundarySlopeSet::max_finite() const { return numeric_value(finite_sorted().back()); }
Rational BoundarySlopeSet::min_finite() const { return numeric_value(finite_sorted().front()); }

std::int64_t evaluate(const CSNormData& norm, const Slope& r) {
  return norm_at(norm, r.p(), r.q());
}

std::int64_t meridian_norm(const CSNormData& norm) { return evaluate(norm, meridian()); }

std::vector<Point2Q> unit_ball_vertices(const CSNormData& norm) {
  // The norm is linear between consecutive stored slope directions and has a
  // corner on each of them, so the vertices are the rays +-(t, u) rescaled
  // onto the level set.
  std::vector<Point2Q> vertices;
  for (const NormTerm& term : norm.terms()) {
    const Point2Q direction = term.slope.vector<Rational>();
    const Rational value(evaluate(norm, term.slope));
    vertices.push_back(direction / value);
    vertices.push_back(-direction / value);
  }
  std::sort(vertices.begin(), vertices.end(), [](const Point2Q& a, const Point2Q& b) {
    const int ha = half_plane(a);
    const int hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return (a(0) * b(1) - a(1) * b(0)).sign() > 0;
  });
  return vertices;
}

MinNorm min_norm_nontrivial(const CSNormData& norm) {
  MinNorm best{norm_at(norm, 0, 1), longitude()};

  Rational y_extent(0);
  for (const Point2Q& v : unit_ball_vertices(norm)) y_extent = std::max(y_extent, v(1));

  struct Breakpoint {
    Rational at;
    std::int64_t weight;
  };

  // Every class with norm <= best lies in best * (unit ball), hence has
  // q <= best * y_extent. Along each row q the norm is convex in p, so we scan
  // outward from its minimiser until the value exceeds the current best.
  for (std::int64_t q = 1; Rational(q) <= Rational(best.value) * y_extent; ++q) {
    std::vector<Breakpoint> breaks;
    std::int64_t total_weight = 0;
    for (const NormTerm& term : norm.terms()) {
      if (term.slope.is_meridian()) continue;
      const std::int64_t w = term.weight * term.slope.q();
      breaks.push_back({Rational(q) * numeric_value(term.slope), w});
      total_weight += w;
    }
    std::sort(breaks.begin(), breaks.end(),
              [](const Breakpoint& a, const Breakpoint& b) { return a.at < b.at; });
    Rational median = breaks.front().at;
    std::int64_t running = 0;
    for (const Breakpoint& b : breaks) {
      running += b.weight;
      if (2 * running >= total_weight) {
        median = b.at;
        break;
      }
    }

    const auto consider = [&](std::int64_t p) {
      const std::int64_t value = norm_at(norm, p, q);
      if (value > best.value) return false;
      if (std::gcd(p, q) == 1) {
        const Slope candidate = normalize_slope(p, q);
        if (value < best.value || better_slope(candidate, best.slope)) {
          best = {value, candidate};
        }
      }
      return true;
    };

    const std::int64_t start = floor_to_int(median);
    for (std::int64_t p = start; consider(p); --p) {
    }
    for (std::int64_t p = start + 1; consider(p); ++p) {
    }
  }
  return best;
}

Rational diam(const BoundarySlopeSet& slopes) {
  const std::vector<Slope> finite = slopes.finite_sorted();
  if (finite.size() < 2) throw std::invalid_argument("diameter undefined");
  return numeric_value(finite.back()) - numeric_value(finite.front());
}

}  // namespace slopenorm
