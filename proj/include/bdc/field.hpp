/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace bdc {

enum class FieldKind { Rationals, PrimeField };

/// Largest accepted prime modulus. Residue products then fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = 2147483647ULL;

/// Either the rationals or GF(p).
class Field {
 public:
  static Field rationals() noexcept { return Field(FieldKind::Rationals, 0); }
  /// Throws NonPrimeModulus when p is composite or < 2.
  static Field prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint64_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint64_t modulus_;
};

Field make_field(FieldKind kind, std::optional<std::uint64_t> modulus = std::nullopt);

bool is_prime(std::uint64_t n) noexcept;

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in [0, p).
class Scalar {
 public:
  explicit Scalar(const Field& field);  // zero
  Scalar(const Field& field, long long value);
  /// Rationals only; den must be nonzero.
  Scalar(const Field& field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(const Field& field) { return Scalar(field); }
  static Scalar one(const Field& field) { return Scalar(field, 1); }

  /// `-3`, `a/b` for the rationals; `0..p-1` for GF(p).
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Requires a prime field.
  std::uint64_t residue() const;
  /// Requires the rationals.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace bdc
