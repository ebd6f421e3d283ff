#include "ncfib/scalar.hpp"

#include <sstream>

namespace ncfib {

Scalar::Scalar(long num, long den) : rat_(num), rad_(0), disc_(0) {
    if (den == 0) throw Error("Scalar: zero denominator");
    rat_ = Rational(num, den);
}

Scalar::Scalar(Rational rat, Rational rad, long disc)
    : rat_(std::move(rat)), rad_(std::move(rad)), disc_(disc) {
    if (disc < 0) throw Error("Scalar: discriminant must be positive");
    if (rad_ != 0 && disc_ == 0) throw Error("Scalar: radical part without discriminant");
    canonicalize();
}

long Scalar::join_disc(const Scalar& x, const Scalar& y) {
    if (x.disc_ == 0) return y.disc_;
    if (y.disc_ == 0 || y.disc_ == x.disc_) return x.disc_;
    throw Error("Scalar: discriminant mismatch (" + std::to_string(x.disc_) + " vs " +
                std::to_string(y.disc_) + ")");
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(rat_ + o.rat_, rad_ + o.rad_, join_disc(*this, o));
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(rat_ - o.rat_, rad_ - o.rad_, join_disc(*this, o));
}

Scalar Scalar::operator*(const Scalar& o) const {
    long d = join_disc(*this, o);
    // (a + b*sqrt(d)) * (a' + b'*sqrt(d)) = aa' + bb'd + (ab' + a'b)*sqrt(d)
    return Scalar(rat_ * o.rat_ + rad_ * o.rad_ * d, rat_ * o.rad_ + rad_ * o.rat_, d);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("Scalar: division by zero");
    if (disc_ == 0) return Scalar(Rational(1) / rat_);
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d)
    Rational norm = rat_ * rat_ - rad_ * rad_ * disc_;
    if (norm == 0) throw Error("Scalar: division by zero (zero field norm)");
    return Scalar(rat_ / norm, -rad_ / norm, disc_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

int Scalar::sign() const {
    if (rad_ == 0) return rat_ == 0 ? 0 : (rat_ > 0 ? 1 : -1);
    if (rat_ == 0) return rad_ > 0 ? 1 : -1;
    // Compare rat against -rad*sqrt(d) by squaring, signs decided first.
    int sr = rat_ > 0 ? 1 : -1;
    int sd = rad_ > 0 ? 1 : -1;
    if (sr == sd) return sr;
    Rational lhs = rat_ * rat_, rhs = rad_ * rad_ * disc_;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sr : sd;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

// Parses "p" or "p/q" starting at pos; advances pos.
Rational parse_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw Error("Scalar: expected number in '" + s + "' at position " + std::to_string(start));
    Integer num(s.substr(start, pos - start));
    Integer den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw Error("Scalar: expected denominator in '" + s + "'");
        den = Integer(s.substr(dstart, pos - dstart));
        if (den == 0) throw Error("Scalar: zero denominator in '" + s + "'");
    }
    return Rational(num, den);
}

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
}

}  // namespace

std::string Scalar::str() const {
    if (rad_ == 0) return rational_str(rat_);
    std::string out = rational_str(rat_);
    out += (rad_ > 0) ? " + " : " - ";
    Rational abs_rad = rad_ > 0 ? rad_ : Rational(-rad_);
    out += rational_str(abs_rad) + "*sqrt(" + std::to_string(disc_) + ")";
    return out;
}

Scalar Scalar::parse(const std::string& text) {
    size_t pos = 0;
    skip_ws(text, pos);
    Rational rat = parse_rational(text, pos);
    skip_ws(text, pos);
    if (pos == text.size()) return Scalar(rat);
    int rad_sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
        rad_sign = text[pos] == '-' ? -1 : 1;
        ++pos;
        skip_ws(text, pos);
    } else {
        throw Error("Scalar: malformed input '" + text + "'");
    }
    Rational rad = parse_rational(text, pos);
    if (text.compare(pos, 6, "*sqrt(") != 0)
        throw Error("Scalar: expected '*sqrt(' in '" + text + "'");
    pos += 6;
    size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart || pos == text.size() || text[pos] != ')')
        throw Error("Scalar: malformed radical in '" + text + "'");
    long disc = std::stol(text.substr(dstart, pos - dstart));
    ++pos;
    skip_ws(text, pos);
    if (pos != text.size()) throw Error("Scalar: trailing characters in '" + text + "'");
    return Scalar(rat, rad_sign > 0 ? rad : Rational(-rad), disc);
}

}  // namespace ncfib
