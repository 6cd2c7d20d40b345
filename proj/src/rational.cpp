#include "bcast/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bcast {

namespace {

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) {
        throw std::overflow_error("rational value does not fit in 64 bits: " + z.get_str());
    }
    return z.get_si();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) {
        throw std::domain_error("rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }

    auto check_digits = [&](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) throw std::invalid_argument("malformed rational literal: " + s);
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
                throw std::invalid_argument("malformed rational literal: " + s);
            }
        }
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        check_digits(num, true);
        check_digits(den, false);
        mpz_class d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in " + s);
        if (num[0] == '+') num.erase(0, 1);
        mpq_class q(mpz_class(num), d);
        return Rational(q);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        check_digits(whole, false);
        if (!frac.empty()) check_digits(frac, false);
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class num = mpz_class(whole) * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
        if (negative) num = -num;
        return Rational(mpq_class(num, scale));
    }
    std::string num = s;
    check_digits(num, true);
    if (num[0] == '+') num.erase(0, 1);
    return Rational(mpq_class(mpz_class(num)));
}

std::int64_t Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return to_int64(r);
}

std::int64_t Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return to_int64(r);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int places) const {
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    mpz_class num = abs(q_.get_num()) * scale * 2 + q_.get_den();
    mpz_class den = q_.get_den() * 2;
    mpz_class scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class whole;
    mpz_class frac;
    mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
    std::string out = (sign() < 0 && scaled != 0) ? "-" : "";
    out += whole.get_str();
    if (places > 0) {
        std::string f = frac.get_str();
        out += "." + std::string(static_cast<std::size_t>(places) - f.size(), '0') + f;
    }
    return out;
}

Rational Rational::pow(unsigned k) const {
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), k);
    return Rational(mpq_class(n, d));
}

}  // namespace bcast
