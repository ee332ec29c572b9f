#include "sharp/scalar.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <numeric>

#include "sharp/error.hpp"

namespace sharp {

namespace {

using u128 = unsigned __int128;

constexpr std::int64_t kMax = INT64_MAX;

u128 magnitude(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd_wide(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(__int128 v) {
    const bool negative = v < 0;
    const u128 m = magnitude(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
}

bool fits(const mpz_class& z) { return z.fits_slong_p() && z != LONG_MIN; }

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    spill(c);
    settle();
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::spill(const mpq_class& q) { big_ = std::make_unique<mpq_class>(q); }

void Rational::settle() {
    if (big_ && fits(big_->get_num()) && fits(big_->get_den())) {
        num_ = big_->get_num().get_si();
        den_ = big_->get_den().get_si();
        big_.reset();
    }
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Rational out;
    if (n == 0) return out;
    const u128 g = gcd_wide(magnitude(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<__int128>(g);
        d /= static_cast<__int128>(g);
    }
    if (n >= -kMax && n <= kMax && d <= kMax) {
        out.num_ = static_cast<std::int64_t>(n);
        out.den_ = static_cast<std::int64_t>(d);
        return out;
    }
    mpq_class q;
    q.get_num() = to_mpz(n);
    q.get_den() = to_mpz(d);
    out.spill(q);
    return out;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw Error(ErrorCode::ParseError, "non-finite number");
    if (x == std::floor(x) && std::fabs(x) < 9.0e18) return Rational(static_cast<long long>(x));
    return Rational(mpq_class(x));
}

std::string Rational::str() const {
    if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    if (den_ == 1) return static_cast<double>(num_);
    return static_cast<double>(num_) / static_cast<double>(den_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(static_cast<long>(num_), static_cast<unsigned long>(den_));
    q.canonicalize();
    return q;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rational();
    const mpq_class q = to_mpq();
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return std::nullopt;
    mpq_class root;
    root.get_num() = sqrt(q.get_num());
    root.get_den() = sqrt(q.get_den());
    return Rational(root);
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational out;
        out.num_ = -num_;
        out.den_ = den_;
        return out;
    }
    return Rational(mpq_class(-*big_));
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) return Rational(static_cast<long long>(s));
        }
        const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        const __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return Rational::from_wide(n, d);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != INT64_MIN) return Rational(static_cast<long long>(p));
        }
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                                   static_cast<__int128>(a.den_) * b.den_);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
    if (a.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
        return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                                   static_cast<__int128>(a.den_) * b.num_);
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const __int128 l = static_cast<__int128>(a.num_) * b.den_;
        const __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

Gaussian Gaussian::from_complex(Complex z) {
    return {Rational::from_double(z.real()), Rational::from_double(z.imag())};
}

std::string Gaussian::str() const { return "(" + re.str() + "," + im.str() + ")"; }

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re += o.re;
    if (!o.im.is_zero()) im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re -= o.re;
    if (!o.im.is_zero()) im -= o.im;
    return *this;
}

Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    if (a.im.is_zero() && b.im.is_zero()) return Gaussian(a.re * b.re);
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    if (b.is_zero()) throw Error(ErrorCode::Singular, "division by zero");
    if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
    const Rational d = b.norm2();
    const Gaussian n = a * b.conj();
    return {n.re / d, n.im / d};
}

std::optional<Gaussian> Gaussian::exact_sqrt() const {
    if (im.is_zero()) {
        if (re.sign() >= 0) {
            if (auto r = re.exact_sqrt()) return Gaussian(*r);
            return std::nullopt;
        }
        if (auto r = (-re).exact_sqrt()) return Gaussian(Rational(), *r);
        return std::nullopt;
    }
    // (a + bi)^2 = re + i·im  with  a^2 = (re + |z|)/2,  b^2 = (|z| - re)/2
    auto modulus = norm2().exact_sqrt();
    if (!modulus) return std::nullopt;
    auto a = ((re + *modulus) / Rational(2)).exact_sqrt();
    auto b = ((*modulus - re) / Rational(2)).exact_sqrt();
    if (!a || !b) return std::nullopt;
    Gaussian root(*a, im.sign() < 0 ? -*b : *b);
    if (!(root * root == *this)) return std::nullopt;
    return root;
}

}  // namespace sharp
