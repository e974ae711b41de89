#include "bstab/rational.hpp"

#include <cmath>

#include "bstab/errors.hpp"

namespace bstab {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDistinctRoots: return "NotDistinctRoots";
    case ErrorKind::ComplexRoots: return "ComplexRoots";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::SepTooSmall: return "SepTooSmall";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::InvalidAmbient: return "InvalidAmbient";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::InKernelOfLine: return "InKernelOfLine";
    case ErrorKind::AlphaSearchFailed: return "AlphaSearchFailed";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::WrongSignature: return "WrongSignature";
    case ErrorKind::AssumptionViolated: return "AssumptionViolated";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::DependentCharacters: return "DependentCharacters";
    case ErrorKind::SepViolation: return "SepViolation";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, "non-finite value has no rational form");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::InvalidInput, "empty rational literal");
  bool decimal = text.find_first_of(".eE") != std::string::npos;
  if (!decimal) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw Error(ErrorKind::InvalidInput, "bad rational literal: " + text);
    // canonicalize() divides by the denominator, so check it first.
    if (q.get_den() == 0) throw Error(ErrorKind::InvalidInput, "zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  // Decimal literal: read mantissa digits and exponent exactly.
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') neg = text[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false, any_digit = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      any_digit = true;
      if (seen_dot) ++scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw Error(ErrorKind::InvalidInput, "bad decimal literal: " + text);
    try {
      std::size_t used = 0;
      exponent = std::stol(text.substr(pos + 1), &used);
      if (pos + 1 + used != text.size()) throw Error(ErrorKind::InvalidInput, "bad exponent: " + text);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, "bad exponent: " + text);
    }
  }
  if (!any_digit) throw Error(ErrorKind::InvalidInput, "bad decimal literal: " + text);
  mpz_class num(digits, 10);
  long e = exponent - scale;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational q = e >= 0 ? Rational(num * pow10) : Rational(num, pow10);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

double to_double(const Rational& q) { return q.get_d(); }

Rational ratio(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

Rational rounded(const Rational& q, unsigned bits) {
  mpf_class f(q, bits);
  return Rational(f);
}

}  // namespace bstab
