#include "partosc/exact/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "partosc/exact/table.hpp"

namespace partosc::exact {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree, mpz_class c) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

mpz_class IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] += coeffs_[i];
        if (i < o.coeffs_.size()) v[i] += o.coeffs_[i];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> v(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] += coeffs_[i];
        if (i < o.coeffs_.size()) v[i] -= o.coeffs_[i];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<mpz_class> v(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::remainder_by_monic(const IntPolynomial& divisor) const {
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        throw std::invalid_argument("remainder_by_monic: divisor must be monic");
    std::vector<mpz_class> r = coeffs_;
    const int dd = divisor.degree();
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
        if (r[static_cast<std::size_t>(k)] == 0) continue;
        const mpz_class q = r[static_cast<std::size_t>(k)];
        for (int i = 0; i <= dd; ++i)
            r[static_cast<std::size_t>(k - dd + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(dd > 0 ? dd : 0));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: divisor is zero");
    if (is_zero()) return IntPolynomial();
    std::vector<mpz_class> r = coeffs_;
    const int dd = divisor.degree();
    const int dq = degree() - dd;
    if (dq < 0) throw std::invalid_argument("divide_exact: divisor degree too large");
    std::vector<mpz_class> q(static_cast<std::size_t>(dq) + 1);
    const mpz_class& lead = divisor.coeffs_.back();
    for (int k = degree(); k >= dd; --k) {
        mpz_class& top = r[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::invalid_argument("divide_exact: division is not exact");
        mpz_class c = top / lead;
        q[static_cast<std::size_t>(k - dd)] = c;
        for (int i = 0; i <= dd; ++i)
            r[static_cast<std::size_t>(k - dd + i)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    for (const auto& c : r)
        if (c != 0) throw std::invalid_argument("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(q));
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

namespace {

IntPolynomial x_to_the_minus_one(int d) {
    std::vector<mpz_class> v(static_cast<std::size_t>(d) + 1);
    v[0] = -1;
    v[static_cast<std::size_t>(d)] = 1;
    return IntPolynomial(std::move(v));
}

// Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e; fills the cache bottom-up.
const IntPolynomial& cyclotomic_locked(int d, std::map<int, IntPolynomial>& cache) {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    IntPolynomial num = x_to_the_minus_one(d);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) num = num.divide_exact(cyclotomic_locked(e, cache));
    return cache.emplace(d, std::move(num)).first->second;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be >= 1");
    static std::map<int, IntPolynomial> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return cyclotomic_locked(d, cache);
}

CyclotomicInteger::CyclotomicInteger(int b) : b_(b) {
    if (b < 2) throw std::invalid_argument("CyclotomicInteger: modulus must be >= 2");
    coeffs_.assign(static_cast<std::size_t>(b), mpz_class(0));
}

CyclotomicInteger::CyclotomicInteger(int b, std::vector<mpz_class> coeffs)
    : b_(b), coeffs_(std::move(coeffs)) {
    if (b < 2) throw std::invalid_argument("CyclotomicInteger: modulus must be >= 2");
    if (static_cast<int>(coeffs_.size()) != b)
        throw std::invalid_argument("CyclotomicInteger: coefficient count differs from modulus");
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
    if (b_ != o.b_) throw std::invalid_argument("CyclotomicInteger: modulus mismatch");
    CyclotomicInteger r(b_);
    for (int a = 0; a < b_; ++a) r.coeffs_[a] = coeffs_[a] + o.coeffs_[a];
    return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
    if (b_ != o.b_) throw std::invalid_argument("CyclotomicInteger: modulus mismatch");
    CyclotomicInteger r(b_);
    for (int a = 0; a < b_; ++a) r.coeffs_[a] = coeffs_[a] - o.coeffs_[a];
    return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
    if (b_ != o.b_) throw std::invalid_argument("CyclotomicInteger: modulus mismatch");
    CyclotomicInteger r(b_);
    for (int a = 0; a < b_; ++a) {
        if (coeffs_[a] == 0) continue;
        for (int c = 0; c < b_; ++c) {
            if (o.coeffs_[c] == 0) continue;
            r.coeffs_[(a + c) % b_] += coeffs_[a] * o.coeffs_[c];
        }
    }
    return r;
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& o) const {
    return b_ == o.b_ && coeffs_ == o.coeffs_;
}

CyclotomicInteger CyclotomicInteger::conjugate() const {
    CyclotomicInteger r(b_);
    for (int a = 0; a < b_; ++a) r.coeffs_[(b_ - a) % b_] = coeffs_[a];
    return r;
}

IntPolynomial CyclotomicInteger::reduced() const {
    return IntPolynomial(coeffs_).remainder_by_monic(cyclotomic_polynomial(b_));
}

namespace {

struct BigCx {
    mpf_class re, im;
};

BigCx big_mul(const BigCx& a, const BigCx& b) {
    return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
}

BigCx big_pow(BigCx base, unsigned long e, mp_bitcnt_t prec) {
    BigCx acc{mpf_class(1, prec), mpf_class(0, prec)};
    while (e > 0) {
        if (e & 1UL) acc = big_mul(acc, base);
        base = big_mul(base, base);
        e >>= 1UL;
    }
    return acc;
}

// e^{2 pi i / b} to `prec` bits: Newton iteration for z^b = 1 started from
// the binary64 value, which already lies within half the root spacing.
BigCx primitive_root_highprec(int b, mp_bitcnt_t prec) {
    const double ang = 2.0 * std::numbers::pi / b;
    BigCx z{mpf_class(std::cos(ang), prec), mpf_class(std::sin(ang), prec)};
    for (int iter = 0; iter < 10; ++iter) {
        const BigCx w = big_pow(z, static_cast<unsigned long>(b - 1), prec);
        const mpf_class norm = w.re * w.re + w.im * w.im;
        const BigCx winv{mpf_class(w.re / norm), mpf_class(-w.im / norm)};
        z.re = z.re * (b - 1) / b + winv.re / b;
        z.im = z.im * (b - 1) / b + winv.im / b;
    }
    return z;
}

}  // namespace

std::complex<double> CyclotomicInteger::evaluate() const {
    const IntPolynomial r = reduced();
    if (r.is_zero()) return 0.0;

    // Fast path: binary64 evaluation with a rounding bound.  The reduction
    // mod Phi_b removed the p(n)-scale cancellation, but conjugates of
    // different magnitude can still cancel across the remaining powers.
    std::complex<double> acc = 0.0;
    double magnitude_sum = 0.0;
    for (int k = 0; k <= r.degree(); ++k) {
        const double c = r.coeff(k).get_d();
        if (c == 0.0) continue;
        const double ang = 2.0 * std::numbers::pi * k / b_;
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
        magnitude_sum += std::fabs(c);
    }
    const double err = magnitude_sum * 1e-15;
    if (std::abs(acc) >= 1e8 * err) return acc;

    // Cancellation ate the double result; redo with enough guard bits for
    // the full coefficient height.
    std::size_t max_bits = 0;
    for (int k = 0; k <= r.degree(); ++k)
        max_bits = std::max(max_bits, mpz_sizeinbase(r.coeff(k).get_mpz_t(), 2));
    const mp_bitcnt_t prec = std::max<mp_bitcnt_t>(192, max_bits + 128);
    const BigCx zeta = primitive_root_highprec(b_, prec);
    BigCx sum{mpf_class(0, prec), mpf_class(0, prec)};
    BigCx power{mpf_class(1, prec), mpf_class(0, prec)};
    for (int k = 0; k <= r.degree(); ++k) {
        const mpz_class& c = r.coeff(k);
        if (c != 0) {
            const mpf_class cf(c, prec);
            sum.re += cf * power.re;
            sum.im += cf * power.im;
        }
        power = big_mul(power, zeta);
    }
    return {sum.re.get_d(), sum.im.get_d()};
}

CyclotomicInteger qn_exact(const PartCountTable& table, int b, int j, int n) {
    if (j < 0 || j >= b) throw std::invalid_argument("qn_exact: twist index j outside [0, b)");
    const ResidueVector r = residue_counts(table, b, n);
    CyclotomicInteger q(b);
    for (int a = 0; a < b; ++a) q.coeff((j * a) % b) += r.entries[a];
    return q;
}

}  // namespace partosc::exact
