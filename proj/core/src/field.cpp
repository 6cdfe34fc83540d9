#include "wha/field.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "wha/errors.hpp"

namespace wha {

namespace {

using i128 = __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v > kMin && v <= kMax; }  // keep kMin out so negation is safe

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::int64_t mod_of(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r.get_ui());
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31)) throw Error("field characteristic must be below 2^31");
    if (!is_prime(p)) throw Error("Fp:" + std::to_string(p) + " is not a prime field");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.substr(0, 3) == "Fp:") {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw Error("malformed field '" + std::string(text) + "'");
        if (p >= (1u << 31)) throw Error("field characteristic must be below 2^31");
        return prime(static_cast<std::uint32_t>(p));
    }
    throw Error("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Field Scalar::field() const { return Field(p_); }

Scalar Scalar::from_int(Field f, std::int64_t v) {
    const std::uint32_t p = f.characteristic();
    if (p == 0) {
        if (v == kMin) return from_big(0, mpq_class(mpz_class(static_cast<long>(v))));
        return Scalar(0, v, 1);
    }
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Scalar(p, r, 1);
}

Scalar Scalar::from_fraction(Field f, std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("zero denominator");
    return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::from_mpq(Field f, const mpq_class& q) {
    const std::uint32_t p = f.characteristic();
    if (p == 0) return from_big(0, q);
    const std::int64_t n = mod_of(q.get_num(), p);
    const std::int64_t d = mod_of(q.get_den(), p);
    if (d == 0) throw Error("denominator vanishes in " + f.name());
    return Scalar(p, n, 1) * Scalar(p, d, 1).inverse();
}

Scalar Scalar::parse(Field f, std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw Error("malformed scalar '" + s + "'");
    if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    q.canonicalize();
    return from_mpq(f, q);
}

Scalar Scalar::from_big(std::uint32_t p, mpq_class q) {
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        const long n = q.get_num().get_si();
        const long d = q.get_den().get_si();
        if (n != kMin) return Scalar(p, n, d);
    }
    Scalar s(p, 0, 1);
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
    return s;
}

mpq_class Scalar::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) throw FieldMismatch("mixed scalars from " + field().name() + " and " + o.field().name());
}

std::string Scalar::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (p_) return Scalar(p_, (n_ + o.n_) % p_, 1);
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            i128 s = static_cast<i128>(n_) + o.n_;
            if (fits(s)) return Scalar(0, static_cast<std::int64_t>(s), 1);
        } else {
            i128 num = static_cast<i128>(n_) * o.d_ + static_cast<i128>(o.n_) * d_;
            i128 den = static_cast<i128>(d_) * o.d_;
            if (num == 0) return Scalar(0, 0, 1);
            // reduce in 128 bits
            i128 a = num < 0 ? -num : num, b = den;
            while (b) { i128 t = a % b; a = b; b = t; }
            num /= a;
            den /= a;
            if (fits(num) && fits(den)) return Scalar(0, static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
        }
    }
    return from_big(0, to_mpq() + o.to_mpq());
}

Scalar Scalar::operator-() const {
    if (p_) return Scalar(p_, n_ == 0 ? 0 : p_ - n_, 1);
    if (big_) return from_big(0, -*big_);
    return Scalar(0, -n_, d_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (p_) return Scalar(p_, static_cast<std::int64_t>((static_cast<std::uint64_t>(n_) * o.n_) % p_), 1);
    if (is_zero() || o.is_zero()) return Scalar(0, 0, 1);
    if (is_one()) return o;
    if (o.is_one()) return *this;
    if (!big_ && !o.big_) {
        std::int64_t g1 = std::gcd(n_, o.d_), g2 = std::gcd(o.n_, d_);
        i128 num = static_cast<i128>(n_ / g1) * (o.n_ / g2);
        i128 den = static_cast<i128>(d_ / g2) * (o.d_ / g1);
        if (fits(num) && fits(den)) return Scalar(0, static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }
    return from_big(0, to_mpq() * o.to_mpq());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (p_) return Scalar(p_, mod_pow(n_, p_ - 2, p_), 1);
    if (big_) return from_big(0, 1 / *big_);
    return n_ < 0 ? Scalar(0, -d_, -n_) : Scalar(0, d_, n_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    if (big_ || o.big_) return big_ && o.big_ && *big_ == *o.big_;
    return n_ == o.n_ && d_ == o.d_;
}

}  // namespace wha
