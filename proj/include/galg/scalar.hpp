#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace galg {

/// The base field: either the rationals or a prime field GF(p).
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws NonPrimeModulus unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  std::uint32_t modulus() const noexcept { return modulus_; }
  /// 0 for the rationals, p otherwise.
  std::uint32_t characteristic() const noexcept { return modulus_; }

  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;

  FieldSpec(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// An exact element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long long value);
  /// num/den mapped into the field; throws DivisionByZero if den vanishes there.
  static Scalar from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
  /// Accepts "a", "-a" and "a/b" with decimal integers.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid over a prime field.
  std::uint32_t residue() const;
  /// Only valid over the rationals.
  const mpq_class& rational() const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Text form: "3/2", "-1", or a bare residue "5".
  std::string to_string() const;
  /// JSON form: rationals as "3/2", residues as "5 mod 7".
  std::string to_json_string() const;

  /// Total order on canonical representatives, used for deterministic output.
  friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void check_same_field(const Scalar& other) const;

  std::variant<Residue, mpq_class> value_;
};

/// The p-1 nonzero residues 1..p-1 in increasing order. Throws InfiniteField over Q.
std::vector<Scalar> units_enumerate(const FieldSpec& field);

/// All p residues 0..p-1. Throws InfiniteField over Q.
std::vector<Scalar> elements_enumerate(const FieldSpec& field);

Scalar pow(Scalar base, unsigned exponent);

}  // namespace galg
