#include "testutil/bigfloat.hpp"

#include <stdexcept>

namespace testutil {

namespace {

mpf_class zero() { return mpf_class(0, kPrecBits); }

// atan(1/q) for integer q by the Taylor series of atan.
mpf_class atan_inverse_int(unsigned long q) {
    mpf_class term(0, kPrecBits), sum(0, kPrecBits);
    mpf_class inv(1, kPrecBits);
    inv /= q;
    const mpf_class inv2 = inv * inv;
    term = inv;
    mpf_class limit(1, kPrecBits);
    limit >>= (kPrecBits + 16);
    for (unsigned k = 0;; ++k) {
        mpf_class add = term / (2 * k + 1);
        if (k % 2 == 0)
            sum += add;
        else
            sum -= add;
        term *= inv2;
        if (add < limit && add > -limit) break;
    }
    return sum;
}

}  // namespace

mpf_class big_pi() {
    static const mpf_class pi = [] {
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239).
        return mpf_class(16 * atan_inverse_int(5) - 4 * atan_inverse_int(239));
    }();
    return pi;
}

mpf_class big_sqrt(const mpf_class& x) {
    mpf_class r(0, kPrecBits);
    mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
    return r;
}

mpf_class big_exp(const mpf_class& x) {
    // exp(x) = exp(x / 2^16)^(2^16), Taylor on the reduced argument.
    mpf_class r = x;
    r >>= 16;
    mpf_class term(1, kPrecBits), sum(1, kPrecBits);
    mpf_class limit(1, kPrecBits);
    limit >>= (kPrecBits + 16);
    for (unsigned k = 1; k < 200; ++k) {
        term *= r;
        term /= k;
        sum += term;
        if (term < limit && term > -limit) break;
    }
    for (int i = 0; i < 16; ++i) sum *= sum;
    return sum;
}

mpf_class big_log(const mpf_class& x) {
    if (x <= 0) throw std::invalid_argument("big_log: x <= 0");
    // Reduce toward 1 with square roots, then 2 atanh((x-1)/(x+1)).
    mpf_class y = x;
    int halvings = 0;
    while (y > mpf_class(1.0625, kPrecBits) || y < mpf_class(0.9375, kPrecBits)) {
        y = big_sqrt(y);
        ++halvings;
        if (halvings > 64) throw std::runtime_error("big_log: reduction failed");
    }
    const mpf_class t = (y - 1) / (y + 1);
    const mpf_class t2 = t * t;
    mpf_class term = t, sum = zero();
    mpf_class limit(1, kPrecBits);
    limit >>= (kPrecBits + 16);
    for (unsigned k = 0; k < 2000; ++k) {
        mpf_class add = term / (2 * k + 1);
        sum += add;
        term *= t2;
        if (add < limit && add > -limit) break;
    }
    sum *= 2;
    for (int i = 0; i < halvings; ++i) sum *= 2;
    return sum;
}

mpf_class big_atan(const mpf_class& t) {
    if (t < 0) return -big_atan(mpf_class(-t));
    if (t > 1) return big_pi() / 2 - big_atan(mpf_class(1 / t));
    // Halve the argument three times: atan(t) = 2 atan(t / (1 + sqrt(1+t^2))).
    mpf_class u = t;
    for (int i = 0; i < 3; ++i) u = u / (1 + big_sqrt(1 + u * u));
    const mpf_class u2 = u * u;
    mpf_class term = u, sum = zero();
    mpf_class limit(1, kPrecBits);
    limit >>= (kPrecBits + 16);
    for (unsigned k = 0; k < 4000; ++k) {
        mpf_class add = term / (2 * k + 1);
        if (k % 2 == 0)
            sum += add;
        else
            sum -= add;
        term *= u2;
        if (add < limit && add > -limit) break;
    }
    return sum * 8;
}

mpf_class big_atan2(const mpf_class& y, const mpf_class& x) {
    if (x > 0) return big_atan(mpf_class(y / x));
    if (x < 0) {
        if (y >= 0) return big_atan(mpf_class(y / x)) + big_pi();
        return big_atan(mpf_class(y / x)) - big_pi();
    }
    if (y > 0) return big_pi() / 2;
    if (y < 0) return -big_pi() / 2;
    throw std::invalid_argument("big_atan2: both arguments zero");
}

mpf_class big_sin(const mpf_class& x) {
    // Reduce to |x| <= pi, then Taylor.
    const mpf_class two_pi = 2 * big_pi();
    mpf_class r = x;
    mpf_class n = r / two_pi;
    mpf_class fl(0, kPrecBits);
    mpf_floor(fl.get_mpf_t(), n.get_mpf_t());
    r -= fl * two_pi;  // r in [0, 2 pi)
    if (r > big_pi()) r -= two_pi;
    const mpf_class r2 = r * r;
    mpf_class term = r, sum = zero();
    mpf_class limit(1, kPrecBits);
    limit >>= (kPrecBits + 16);
    for (unsigned k = 0; k < 400; ++k) {
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        term *= r2;
        term /= (2 * k + 2) * (2 * k + 3);
        if (term < limit && term > -limit) break;
    }
    return sum;
}

mpf_class big_cos(const mpf_class& x) { return big_sin(mpf_class(big_pi() / 2 - x)); }

BigComplex BigComplex::pow_real(const mpf_class& p) const {
    const mpf_class r2 = re * re + im * im;
    if (r2 == 0) throw std::invalid_argument("BigComplex::pow_real: zero base");
    const mpf_class log_r = big_log(r2) / 2;
    const mpf_class theta = arg();
    const mpf_class mag = big_exp(mpf_class(p * log_r));
    const mpf_class ang = p * theta;
    return {mag * big_cos(ang), mag * big_sin(ang)};
}

BigComplex big_unit_root(int n, int k) {
    const mpf_class ang = 2 * big_pi() * k / n;
    return {big_cos(ang), big_sin(ang)};
}

}  // namespace testutil
