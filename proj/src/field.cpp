#include "tracelab/field.hpp"

namespace tracelab {

bool is_prime_int(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31)) throw Error("prime modulus must be < 2^31");
    if (!is_prime_int(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::Prime, p);
}

FieldSpec FieldSpec::rational() { return FieldSpec(FieldKind::Rational, 0); }

void FieldSpec::check_residue(const Scalar& a) const {
    if (is_prime_field() != a.is_residue()) {
        throw InternalError("scalar does not belong to " + describe());
    }
}

Scalar FieldSpec::zero() const {
    return is_prime_field() ? Scalar(std::int64_t(0)) : Scalar(BigRat(0));
}

Scalar FieldSpec::one() const {
    return is_prime_field() ? Scalar(std::int64_t(1)) : Scalar(BigRat(1));
}

Scalar FieldSpec::from_int(std::int64_t n) const {
    if (!is_prime_field()) return Scalar(BigRat(n));
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return Scalar(r);
}

Scalar FieldSpec::from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw Error("zero denominator");
    if (!is_prime_field()) {
        return Scalar(BigRat(BigInt(num)) / BigRat(BigInt(den)));
    }
    return div(from_int(num), from_int(den));
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
    check_residue(a);
    check_residue(b);
    if (is_prime_field()) {
        std::int64_t s = a.residue() + b.residue();
        if (s >= p_) s -= p_;
        return Scalar(s);
    }
    return Scalar(a.rational() + b.rational());
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
    check_residue(a);
    check_residue(b);
    if (is_prime_field()) {
        std::int64_t s = a.residue() - b.residue();
        if (s < 0) s += p_;
        return Scalar(s);
    }
    return Scalar(a.rational() - b.rational());
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
    check_residue(a);
    check_residue(b);
    if (is_prime_field()) {
        return Scalar((a.residue() * b.residue()) % p_);  // p < 2^31, no overflow
    }
    return Scalar(a.rational() * b.rational());
}

Scalar FieldSpec::neg(const Scalar& a) const {
    check_residue(a);
    if (is_prime_field()) {
        return a.residue() == 0 ? a : Scalar(p_ - a.residue());
    }
    return Scalar(-a.rational());
}

Scalar FieldSpec::inv(const Scalar& a) const {
    check_residue(a);
    if (is_zero(a)) throw Error("division by zero");
    if (!is_prime_field()) return Scalar(BigRat(1) / a.rational());
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a.residue();
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return Scalar(t);
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

bool FieldSpec::is_zero(const Scalar& a) const {
    check_residue(a);
    return is_prime_field() ? a.residue() == 0 : a.rational().is_zero();
}

bool FieldSpec::is_one(const Scalar& a) const {
    check_residue(a);
    return is_prime_field() ? a.residue() == 1 : a.rational() == 1;
}

std::string FieldSpec::to_string(const Scalar& a) const {
    check_residue(a);
    if (is_prime_field()) return std::to_string(a.residue());
    return a.rational().str();
}

Scalar FieldSpec::parse(const std::string& text) const {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (is_prime_field()) return from_int(std::stoll(text));
            return Scalar(BigRat(BigInt(text)));
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (is_prime_field()) return from_fraction(std::stoll(num), std::stoll(den));
        BigInt d(den);
        if (d == 0) throw Error("zero denominator");
        return Scalar(BigRat(BigInt(num)) / BigRat(d));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad scalar literal '" + text + "'");
    }
}

std::string FieldSpec::describe() const {
    return is_prime_field() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

}  // namespace tracelab
