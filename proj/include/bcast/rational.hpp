#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace bcast {

/// Exact rational number in canonical form (denominator > 0, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Everything that compares
/// waiting times or checks an inequality goes through this type, so no
/// floating point is involved anywhere in the engine or the verifiers.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "7", "-3/4" or a finite decimal such as "0.125".
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    [[nodiscard]] std::int64_t floor() const;
    [[nodiscard]] std::int64_t ceil() const;
    [[nodiscard]] double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when the value is an integer.
    [[nodiscard]] std::string str() const;
    /// Fixed-point decimal with the given number of places (rounded half away from zero).
    [[nodiscard]] std::string decimal(int places = 6) const;

    [[nodiscard]] Rational pow(unsigned k) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    [[nodiscard]] const mpq_class& raw() const { return q_; }

private:
    mpq_class q_{0};
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace bcast

template <>
struct std::hash<bcast::Rational> {
    std::size_t operator()(const bcast::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
