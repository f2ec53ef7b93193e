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

#include "bdc/field.hpp"

#include <algorithm>
#include <cctype>

#include "bdc/error.hpp"

namespace bdc {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;  // operands < 2^31
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxModulus) {
    throw Error(ErrorCode::UnsupportedModulus,
                "modulus " + std::to_string(p) + " exceeds " + std::to_string(kMaxModulus));
  }
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  }
  return Field(FieldKind::PrimeField, p);
}

std::string Field::describe() const {
  if (kind_ == FieldKind::Rationals) return "rational";
  return "prime " + std::to_string(modulus_);
}

Field make_field(FieldKind kind, std::optional<std::uint64_t> modulus) {
  if (kind == FieldKind::Rationals) return Field::rationals();
  if (!modulus || *modulus < 2) {
    throw Error(ErrorCode::NonPrimeModulus, "prime field needs a modulus >= 2");
  }
  return Field::prime(*modulus);
}

// ---------------------------------------------------------------------------

Scalar::Scalar(const Field& field) : field_(field) {
  if (field_.is_prime_field()) {
    value_ = std::uint64_t{0};
  } else {
    value_ = mpq_class(0);
  }
}

Scalar::Scalar(const Field& field, long long value) : field_(field) {
  if (field_.is_prime_field()) {
    const auto p = static_cast<long long>(field_.modulus());
    long long r = value % p;
    if (r < 0) r += p;
    value_ = static_cast<std::uint64_t>(r);
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(const Field& field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (field_.is_prime_field()) {
    const mpz_class p(static_cast<unsigned long>(field_.modulus()));
    mpz_class n = num % p;
    if (n < 0) n += p;
    mpz_class d = den % p;
    if (d < 0) d += p;
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo p");
    value_ = static_cast<std::uint64_t>(n.get_ui());
    *this /= Scalar(field_, static_cast<long long>(d.get_ui()));
  } else {
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  if (field.is_prime_field()) {
    if (!all_digits(text) || text.size() > 10) {
      throw Error(ErrorCode::SyntaxError, "expected a residue in 0.." +
                                              std::to_string(field.modulus() - 1) + ", got '" +
                                              std::string(text) + "'");
    }
    const std::uint64_t v = std::stoull(std::string(text));
    if (v >= field.modulus()) {
      throw Error(ErrorCode::SyntaxError, "residue '" + std::string(text) + "' is not in 0.." +
                                              std::to_string(field.modulus() - 1));
    }
    Scalar s(field);
    s.value_ = v;
    return s;
  }
  const auto slash = text.find('/');
  std::string_view num_text = text.substr(0, slash);
  const bool negative = !num_text.empty() && num_text.front() == '-';
  if (negative) num_text.remove_prefix(1);
  if (!all_digits(num_text)) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  if (negative) num = -num;
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw Error(ErrorCode::SyntaxError, "malformed denominator in '" + std::string(text) + "'");
    }
    den = mpz_class(std::string(den_text), 10);
    if (den == 0) {
      throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
    }
  }
  return Scalar(field, num, den);
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw Error(ErrorCode::FieldMismatch, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::FieldMismatch, "rational() on a prime-field scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw Error(ErrorCode::FieldMismatch, field_.describe() + " vs " + other.field_.describe());
  }
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    if (*r != 0) *r = field_.modulus() - *r;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar out(*this);
  if (auto* r = std::get_if<std::uint64_t>(&out.value_)) {
    *r = pow_mod(*r, field_.modulus() - 2, field_.modulus());
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
    q.canonicalize();
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r += std::get<std::uint64_t>(other.value_);
    if (*r >= field_.modulus()) *r -= field_.modulus();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    const std::uint64_t b = std::get<std::uint64_t>(other.value_);
    *r = *r >= b ? *r - b : *r + field_.modulus() - b;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint64_t>(&value_)) {
    *r = mul_mod(*r, std::get<std::uint64_t>(other.value_), field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  if (other.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (field_.is_prime_field()) return *this *= other.inverse();
  std::get<mpq_class>(value_) /= std::get<mpq_class>(other.value_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

}  // namespace bdc
