#include "qbx/scalar.hpp"

namespace qbx {

namespace {

std::uint64_t fp_inv(std::uint64_t a, std::uint32_t p) {
    // extended Euclid; a in [1, p)
    std::int64_t t = 0, newt = 1, r = p, newr = (std::int64_t)a;
    while (newr != 0) {
        std::int64_t quot = r / newr;
        std::int64_t tmp = t - quot * newt;
        t = newt;
        newt = tmp;
        tmp = r - quot * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw input_error("element not invertible mod " + std::to_string(p));
    if (t < 0) t += p;
    return (std::uint64_t)t;
}

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint32_t p) {
    mpz_class m = z % p;
    if (m < 0) m += p;
    return m.get_ui();
}

} // namespace

Scalar Scalar::fp(std::uint64_t val, std::uint32_t p) {
    Scalar s;
    s.p_ = p;
    s.r_ = val % p;
    return s;
}

Scalar Scalar::zero_like(const Scalar& s) {
    return s.p_ == 0 ? Scalar(0) : fp(0, s.p_);
}

Scalar Scalar::one_like(const Scalar& s) {
    return s.p_ == 0 ? Scalar(1) : fp(1, s.p_);
}

const mpq_class& Scalar::rational_value() const {
    if (p_ != 0) throw internal_error("rational_value on F_p scalar");
    return q_;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(mpq_class(-q_));
    return fp(r_ == 0 ? 0 : p_ - r_, p_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw input_error("division by zero");
    if (p_ == 0) return Scalar(mpq_class(1) / q_);
    return fp(fp_inv(r_, p_), p_);
}

// Coerce so both operands live in the same field.  A rational moving into
// F_p needs its denominator invertible mod p.
void Scalar::coerce(Scalar& a, Scalar& b) {
    if (a.p_ == b.p_) return;
    Scalar* rat = nullptr;
    Scalar* fin = nullptr;
    if (a.p_ == 0) {
        rat = &a;
        fin = &b;
    } else if (b.p_ == 0) {
        rat = &b;
        fin = &a;
    } else {
        throw input_error("scalars from different prime fields");
    }
    std::uint32_t p = fin->p_;
    std::uint64_t num = mpz_mod_u(rat->q_.get_num(), p);
    std::uint64_t den = mpz_mod_u(rat->q_.get_den(), p);
    if (den == 0) throw input_error("denominator vanishes mod " + std::to_string(p));
    *rat = fp(num * fp_inv(den, p), p);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::coerce(x, y);
    if (x.p_ == 0) return Scalar(mpq_class(x.q_ + y.q_));
    return Scalar::fp(x.r_ + y.r_, x.p_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::coerce(x, y);
    if (x.p_ == 0) return Scalar(mpq_class(x.q_ * y.q_));
    return Scalar::fp(x.r_ * y.r_, x.p_); // both < 2^31, product fits
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar x = a, y = b;
    Scalar::coerce(x, y);
    return x.p_ == 0 ? x.q_ == y.q_ : x.r_ == y.r_;
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(r_);
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Scalar Scalar::parse(const std::string& text, const Scalar& mode_like) {
    if (text.empty()) throw input_error("empty coefficient");
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw input_error("bad coefficient literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw input_error("bad coefficient literal '" + text + "'");
    if (q.get_den() == 0) throw input_error("zero denominator in '" + text + "'");
    q.canonicalize();
    Scalar r(q);
    if (!mode_like.is_rational()) {
        Scalar one = one_like(mode_like);
        r = r * one; // coerce into F_p
    }
    return r;
}

bool is_valid_prime(std::uint64_t p) {
    if (p < 2 || p > (1ull << 31)) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace qbx
