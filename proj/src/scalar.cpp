#include "bicomm/scalar.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <tuple>

namespace bicomm {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::AmbiguousProduct: return "AmbiguousProduct";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::InvalidIndexMap: return "InvalidIndexMap";
    case ErrorCode::NoWeight: return "NoWeight";
    case ErrorCode::UnsupportedGenerator: return "UnsupportedGenerator";
    case ErrorCode::BadChain: return "BadChain";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::NotDominated: return "NotDominated";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::BadElement: return "BadElement";
    case ErrorCode::NotMultilinear: return "NotMultilinear";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || p >= (1ull << 31))
      throw Error(ErrorCode::InvalidField, "bad field '" + std::string(text) + "'");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorCode::InvalidField, "bad field '" + std::string(text) + "' (expected q or fp:P)");
}

std::string Field::name() const { return is_rational() ? "q" : "fp:" + std::to_string(p_); }

namespace {

std::uint32_t reduce_mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
  } else {
    std::int64_t p = field.characteristic();
    std::int64_t r = value % p;
    residue_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
  } else {
    std::uint32_t p = field.characteristic();
    std::uint32_t den = reduce_mod(value.get_den(), p);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
    std::uint64_t num = reduce_mod(value.get_num(), p);
    residue_ = static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) negative = s[pos++] == '-';
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    return end;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos) throw Error(ErrorCode::Syntax, "bad scalar '" + s + "'");
  mpz_class num(s.substr(pos, num_end - pos));
  mpz_class den = 1;
  if (num_end < s.size()) {
    if (s[num_end] != '/') throw Error(ErrorCode::Syntax, "bad scalar '" + s + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != s.size()) throw Error(ErrorCode::Syntax, "bad scalar '" + s + "'");
    den = mpz_class(s.substr(num_end + 1, den_end - num_end - 1));
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  }
  if (negative) num = -num;
  return Scalar(field, mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept { return field_.is_rational() ? sgn(q_) == 0 : residue_ == 0; }

bool Scalar::is_one() const noexcept { return field_.is_rational() ? q_ == 1 : residue_ == 1; }

bool Scalar::is_negative() const noexcept { return field_.is_rational() && sgn(q_) < 0; }

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_))
    throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + other.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.residue_ = inverse_mod(residue_, field_.characteristic());
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational())
    r.q_ = -q_;
  else if (residue_ != 0)
    r.residue_ = field_.characteristic() - residue_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational()) {
    q_ += other.q_;
  } else {
    std::uint64_t s = std::uint64_t(residue_) + other.residue_;
    residue_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (field_.is_rational())
    q_ *= other.q_;
  else
    residue_ = static_cast<std::uint32_t>(std::uint64_t(residue_) * other.residue_ % field_.characteristic());
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const { return field_.is_rational() ? q_.get_str() : std::to_string(residue_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace bicomm
