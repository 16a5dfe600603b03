#include "slopenorm/rational.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace slopenorm {
namespace {

using Decimal = boost::multiprecision::cpp_bin_float_50;

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Decimal to_big_float(const Rational& value) {
  return Decimal(Decimal(numerator(value)) / Decimal(denominator(value)));
}

std::string render(const Decimal& value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal(const Rational& value) { return render(to_big_float(value)); }

std::string sqrt_decimal(const Rational& value) {
  if (value.sign() < 0) throw std::domain_error("square root of a negative rational");
  return render(sqrt(to_big_float(value)));
}

std::int64_t floor_to_int(const Rational& value) {
  const Integer& num = numerator(value);
  const Integer& den = denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num.sign() < 0 && q * den != num) q -= 1;
  if (q > std::numeric_limits<std::int64_t>::max() ||
      q < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational out of 64-bit integer range");
  }
  return q.convert_to<std::int64_t>();
}

std::int64_t ceil_to_int(const Rational& value) { return -floor_to_int(-value); }

}  // namespace slopenorm
