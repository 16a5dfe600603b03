#include "slopenorm/slope.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace slopenorm {
namespace {

std::int64_t parse_int64(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("malformed slope \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Slope normalize_slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("not a slope");
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (p == kMin || q == kMin) throw std::overflow_error("slope coordinate out of range");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("not primitive");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope(p, q);
}

std::int64_t distance(const Slope& r, const Slope& s) {
  const __int128 d = static_cast<__int128>(r.p()) * s.q() - static_cast<__int128>(r.q()) * s.p();
  const __int128 a = d < 0 ? -d : d;
  if (a > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("slope distance out of range");
  }
  return static_cast<std::int64_t>(a);
}

Rational numeric_value(const Slope& r) {
  if (r.is_meridian()) throw std::domain_error("infinite slope");
  return Rational(r.p(), r.q());
}

bool numeric_less(const Slope& a, const Slope& b) {
  if (a.is_meridian()) return false;
  if (b.is_meridian()) return true;
  return static_cast<__int128>(a.p()) * b.q() < static_cast<__int128>(b.p()) * a.q();
}

Slope parse_slope(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return normalize_slope(parse_int64(text, text), 1);
  const std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+')) {
    throw std::invalid_argument("malformed slope \"" + std::string(text) + "\"");
  }
  return normalize_slope(parse_int64(text.substr(0, slash), text), parse_int64(den, text));
}

std::string to_string(const Slope& r) {
  return std::to_string(r.p()) + "/" + std::to_string(r.q());
}

std::ostream& operator<<(std::ostream& out, const Slope& r) { return out << to_string(r); }

}  // namespace slopenorm
