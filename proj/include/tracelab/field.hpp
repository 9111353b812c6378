#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "tracelab/errors.hpp"

namespace tracelab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// An exact scalar: a residue in [0, p) for a prime field, or an arbitrary
// precision rational kept in lowest terms with positive denominator (the
// backing type maintains that canonical form). Scalars do not know their
// field; all arithmetic goes through FieldSpec.
class Scalar {
  public:
    Scalar() : v_(static_cast<std::int64_t>(0)) {}
    explicit Scalar(std::int64_t residue) : v_(residue) {}
    explicit Scalar(BigRat q) : v_(std::move(q)) {}

    bool is_residue() const { return std::holds_alternative<std::int64_t>(v_); }
    std::int64_t residue() const { return std::get<std::int64_t>(v_); }
    const BigRat& rational() const { return std::get<BigRat>(v_); }

    bool operator==(const Scalar& o) const { return v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return v_ != o.v_; }
    // Total order used only for canonical sorting of subspace keys.
    bool operator<(const Scalar& o) const { return v_ < o.v_; }

  private:
    std::variant<std::int64_t, BigRat> v_;
};

enum class FieldKind { Prime, Rational };

// GF(p) for a prime p < 2^31, or the exact rationals.
class FieldSpec {
  public:
    static FieldSpec prime(std::int64_t p);
    static FieldSpec rational();

    FieldKind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    bool is_prime_field() const { return kind_ == FieldKind::Prime; }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    Scalar from_fraction(std::int64_t num, std::int64_t den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;  // throws Error on zero
    Scalar div(const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;

    // Number of field elements, or 0 for the rationals.
    std::int64_t size() const { return is_prime_field() ? p_ : 0; }

    std::string to_string(const Scalar& a) const;
    // Accepts "a" or "a/b"; residues are reduced into [0, p).
    Scalar parse(const std::string& text) const;
    std::string describe() const;

  private:
    FieldSpec(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}
    void check_residue(const Scalar& a) const;

    FieldKind kind_;
    std::int64_t p_;
};

bool is_prime_int(std::int64_t n);

}  // namespace tracelab
