#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wha {

// Ground field: the rationals (p == 0) or F_p for a prime p < 2^31.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint32_t p);  // throws on non-prime or p >= 2^31
    // "Q" or "Fp:<p>"
    static Field parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    friend class Scalar;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Exact field element. Rationals use an int64 fraction when it fits and fall
// back to GMP; the representation is canonical, so equality is structural.
class Scalar {
public:
    Scalar() = default;  // rational zero
    static Scalar zero(Field f) { return Scalar(f.characteristic(), 0, 1); }
    static Scalar one(Field f) { return from_int(f, 1); }
    static Scalar from_int(Field f, std::int64_t v);
    static Scalar from_fraction(Field f, std::int64_t num, std::int64_t den);
    static Scalar from_mpq(Field f, const mpq_class& q);
    // "a", "-a", "a/b"; big integers allowed
    static Scalar parse(Field f, std::string_view text);

    Field field() const;
    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    std::string str() const;
    mpq_class to_mpq() const;  // rationals only

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    Scalar(std::uint32_t p, std::int64_t n, std::int64_t d) : p_(p), n_(n), d_(d) {}
    static Scalar from_big(std::uint32_t p, mpq_class q);
    void check_same(const Scalar& o) const;

    std::uint32_t p_ = 0;
    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

}  // namespace wha
