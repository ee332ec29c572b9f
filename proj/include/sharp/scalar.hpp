#pragma once

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace sharp {

using Complex = std::complex<double>;

/// Arbitrary-precision rational in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline;
/// anything larger spills to a GMP rational. Callers never see the
/// difference: both representations compare and print identically.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {  // NOLINT(implicit)
        if (n == INT64_MIN) spill(mpq_class(static_cast<long>(n)));
    }
    Rational(int n) : Rational(static_cast<long long>(n)) {}  // NOLINT(implicit)
    Rational(long n) : Rational(static_cast<long long>(n)) {}  // NOLINT(implicit)
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    /// Accepts "p", "p/q", with optional leading sign.
    static Rational parse(std::string_view text);
    /// Exact binary value of a finite double.
    static Rational from_double(double x);

    /// Always "p/q" with q >= 1.
    std::string str() const;
    double to_double() const;
    mpq_class to_mpq() const;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const;
    int sign() const;

    /// Square root when it is itself rational.
    std::optional<Rational> exact_sqrt() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 n, __int128 d);
    void spill(const mpq_class& q);
    void settle();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

/// Gaussian rational re + i·im.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(implicit)
    Gaussian(int r) : re(r) {}                  // NOLINT(implicit)
    Gaussian(long long r) : re(r) {}            // NOLINT(implicit)
    Gaussian(long r) : re(r) {}                 // NOLINT(implicit)
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian from_complex(Complex z);

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Gaussian conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    Complex to_complex() const { return {re.to_double(), im.to_double()}; }
    std::string str() const;

    /// A square root in Q(i) if one exists.
    std::optional<Gaussian> exact_sqrt() const;

    Gaussian operator-() const { return {-re, -im}; }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b);
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b);
    friend bool operator==(const Gaussian& a, const Gaussian& b) = default;
};

/// A single matrix entry in either arithmetic.
using Scalar = std::variant<Gaussian, Complex>;

}  // namespace sharp
