#ifndef NCFIB_SCALAR_HPP
#define NCFIB_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ncfib {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Exact field element of QQ or a fixed real quadratic extension QQ(sqrt(d)):
/// value = rat + rad*sqrt(disc). Pure rationals carry disc == 0 (and rad == 0),
/// so equality is plain member-wise comparison with no hidden normalization.
class Scalar {
  public:
    Scalar() : rat_(0), rad_(0), disc_(0) {}
    Scalar(long n) : rat_(n), rad_(0), disc_(0) {}
    Scalar(long num, long den);
    explicit Scalar(Rational r) : rat_(std::move(r)), rad_(0), disc_(0) {}
    Scalar(Rational rat, Rational rad, long disc);

    static Scalar sqrt_of(long d) { return Scalar(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return rat_; }
    const Rational& radical_part() const { return rad_; }
    long discriminant() const { return disc_; }

    bool is_zero() const { return rat_ == 0 && rad_ == 0; }
    bool is_rational() const { return disc_ == 0; }

    Scalar operator-() const { return Scalar(-rat_, -rad_, disc_); }
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const {
        return rat_ == o.rat_ && rad_ == o.rad_ && disc_ == o.disc_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;

    /// The radical is treated as real, so conjugation fixes every value;
    /// kept as an operation so star maps read correctly at call sites.
    Scalar conjugate() const { return *this; }

    /// Exact sign: -1, 0 or +1 of rat + rad*sqrt(disc) as a real number.
    int sign() const;

    std::string str() const;
    static Scalar parse(const std::string& text);

  private:
    // Common discriminant of two operands; throws on a genuine mismatch.
    static long join_disc(const Scalar& x, const Scalar& y);
    void canonicalize() {
        if (rad_ == 0) disc_ = 0;
    }

    Rational rat_, rad_;
    long disc_;
};

}  // namespace ncfib

#endif
