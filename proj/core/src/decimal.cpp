#include "sandwich/decimal.hpp"

#include <sstream>

namespace sandwich {

namespace {

void trim_fraction(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
}

}  // namespace

std::string format_decimal(const Scalar& value, int significant) {
  Real v = value.real();
  if (v == 0) return "+0";
  std::string sign = v < 0 ? "-" : "+";
  Real mag = boost::multiprecision::abs(v);

  if (mag >= Real("1e-3") && mag < Real(1000000)) {
    long int_digits = boost::multiprecision::floor(boost::multiprecision::log10(mag)).convert_to<long>() + 1;
    long frac = std::max<long>(0, significant - int_digits);
    std::string s = mag.str(frac, std::ios_base::fixed);
    trim_fraction(s);
    return sign + s;
  }

  std::string s = mag.str(significant - 1, std::ios_base::scientific);
  auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  trim_fraction(mantissa);
  return sign + mantissa + s.substr(e);
}

std::string format_significant(const Scalar& value, int significant) {
  std::ostringstream os;
  os.precision(significant);
  os << value.to_double();
  return os.str();
}

}  // namespace sandwich
