#include "galg/scalar.hpp"

#include <charconv>
#include <limits>

#include "galg/error.hpp"

namespace galg {

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t mod) {
  mpz_class r = z % mod;
  if (r < 0) r += mod;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()) || !is_prime(p)) {
    throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not a supported prime");
  }
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }

Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
  if (field.is_prime_field()) {
    long long m = field.modulus();
    long long r = value % m;
    if (r < 0) r += m;
    return Scalar(Residue{static_cast<std::uint32_t>(r), field.modulus()});
  }
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(value));
  return Scalar(mpq_class(z));
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
  if (field.is_prime_field()) {
    std::uint32_t d = reduce_mpz(den, field.modulus());
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + field.to_string());
    std::uint32_t n = reduce_mpz(num, field.modulus());
    std::uint64_t v = static_cast<std::uint64_t>(n) * pow_mod(d, field.modulus() - 2, field.modulus());
    return Scalar(Residue{static_cast<std::uint32_t>(v % field.modulus()), field.modulus()});
  }
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  auto slash = text.find('/');
  std::string num_text(text.substr(0, slash));
  std::string den_text = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  mpz_class num, den;
  if (num_text.empty() || num.set_str(num_text[0] == '+' ? num_text.substr(1) : num_text, 10) != 0 ||
      den_text.empty() || den.set_str(den_text, 10) != 0) {
    throw Error(ErrorKind::Syntax, "malformed scalar '" + std::string(text) + "'");
  }
  return from_fraction(field, num, den);
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldSpec(FieldSpec::Kind::PrimeField, r->modulus);
  }
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw Error(ErrorKind::FieldMismatch, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorKind::FieldMismatch, "rational() on a prime-field scalar");
}

void Scalar::check_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw Error(ErrorKind::FieldMismatch,
                "cannot combine " + field().to_string() + " with " + other.field().to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t v = static_cast<std::uint64_t>(r->value) + std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(v % r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t v = static_cast<std::uint64_t>(r->value) + r->modulus - std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(v % r->modulus);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t v = static_cast<std::uint64_t>(r->value) * std::get<Residue>(rhs.value_).value;
    r->value = static_cast<std::uint32_t>(v % r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value == std::get<Scalar::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) {
    return r->value <=> std::get<Scalar::Residue>(b.value_).value;
  }
  int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::string Scalar::to_json_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return std::to_string(r->value) + " mod " + std::to_string(r->modulus);
  }
  return std::get<mpq_class>(value_).get_str();
}

std::vector<Scalar> units_enumerate(const FieldSpec& field) {
  if (!field.is_prime_field()) throw Error(ErrorKind::InfiniteField, "cannot enumerate units of Q");
  std::vector<Scalar> out;
  out.reserve(field.modulus() - 1);
  for (std::uint32_t v = 1; v < field.modulus(); ++v) out.push_back(Scalar::from_int(field, v));
  return out;
}

std::vector<Scalar> elements_enumerate(const FieldSpec& field) {
  if (!field.is_prime_field()) throw Error(ErrorKind::InfiniteField, "cannot enumerate elements of Q");
  std::vector<Scalar> out;
  out.reserve(field.modulus());
  for (std::uint32_t v = 0; v < field.modulus(); ++v) out.push_back(Scalar::from_int(field, v));
  return out;
}

Scalar pow(Scalar base, unsigned exponent) {
  Scalar result = Scalar::one(base.field());
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace galg
