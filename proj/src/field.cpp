#include "prym5/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace prym5 {

namespace detail {

struct GfData {
    unsigned p = 0;
    unsigned k = 0;
    std::uint64_t q = 0;
    std::vector<unsigned> modulus;  // monic, low to high, size k+1

    // Multiplicative tables (present when q is small enough).
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, length 2(q-1)
    std::vector<std::uint32_t> log;  // log[x] for x != 0
    std::vector<std::uint32_t> add;  // q*q table for small extension fields
    std::vector<std::uint32_t> neg;

    std::vector<unsigned> digits(std::uint64_t v) const {
        std::vector<unsigned> d(k);
        for (unsigned i = 0; i < k; ++i) {
            d[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        return d;
    }
    std::uint64_t pack(const std::vector<unsigned>& d) const {
        std::uint64_t v = 0;
        for (unsigned i = k; i-- > 0;) v = v * p + d[i];
        return v;
    }

    std::uint64_t add_slow(std::uint64_t a, std::uint64_t b) const {
        if (k == 1) return (a + b) % p;
        std::uint64_t r = 0, w = 1;
        for (unsigned i = 0; i < k; ++i) {
            r += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
            w *= p;
        }
        return r;
    }
    std::uint64_t neg_slow(std::uint64_t a) const {
        if (k == 1) return (p - a % p) % p;
        std::uint64_t r = 0, w = 1;
        for (unsigned i = 0; i < k; ++i) {
            r += ((p - a % p) % p) * w;
            a /= p;
            w *= p;
        }
        return r;
    }
    std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const {
        if (k == 1) return (a * b) % p;
        auto da = digits(a), db = digits(b);
        std::vector<unsigned long long> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + 1ull * da[i] * db[j]) % p;
        for (unsigned i = 2 * k - 1; i-- > k;) {
            unsigned long long c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (unsigned j = 0; j < k; ++j)
                prod[i - k + j] = (prod[i - k + j] + (p - modulus[j]) * c) % p;
        }
        std::vector<unsigned> r(k);
        for (unsigned i = 0; i < k; ++i) r[i] = static_cast<unsigned>(prod[i]);
        return pack(r);
    }
    std::uint64_t pow_slow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }

    bool has_tables() const { return !exp.empty(); }

    std::uint64_t addf(std::uint64_t a, std::uint64_t b) const {
        if (k == 1) {
            std::uint64_t s = a + b;
            return s >= p ? s - p : s;
        }
        if (!add.empty()) return add[a * q + b];
        return add_slow(a, b);
    }
    std::uint64_t negf(std::uint64_t a) const {
        if (k == 1) return a == 0 ? 0 : p - a;
        if (!neg.empty()) return neg[a];
        return neg_slow(a);
    }
    std::uint64_t mulf(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables()) return exp[log[a] + log[b]];
        return mul_slow(a, b);
    }
    std::uint64_t invf(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("division by zero in " + tag());
        if (has_tables()) return exp[(q - 1 - log[a]) % (q - 1)];
        return pow_slow(a, q - 2);
    }

    std::string tag() const {
        if (k == 1) return "GF(" + std::to_string(p) + ")";
        return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    }
};

namespace {

constexpr std::uint64_t kTableLimit = 1u << 22;
constexpr std::uint64_t kAddTableLimit = 1024;

bool poly_divides(const std::vector<unsigned>& d, std::vector<unsigned> f, unsigned p) {
    // d monic; returns true when d | f over F_p.
    std::size_t dd = d.size() - 1;
    for (std::size_t i = f.size(); i-- > dd;) {
        unsigned c = f[i] % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) f[i - dd + j] = (f[i - dd + j] + (p - c) * d[j]) % p;
    }
    for (std::size_t i = 0; i < dd && i < f.size(); ++i)
        if (f[i] % p) return false;
    return true;
}

bool irreducible(const std::vector<unsigned>& f, unsigned p) {
    unsigned k = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t n = 0; n < count; ++n) {
            std::vector<unsigned> g(d + 1);
            std::uint64_t m = n;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(m % p);
                m /= p;
            }
            g[d] = 1;
            if (poly_divides(g, f, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree k, comparing coefficient vectors from
// the x^{k-1} coefficient down to the constant term.
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned k) {
    if (k == 1) return {0, 1};
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<unsigned> f(k + 1);
        std::uint64_t m = n;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<unsigned>(m % p);
            m /= p;
        }
        f[k] = 1;
        if (irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> r;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            r.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) r.push_back(n);
    return r;
}

std::unique_ptr<GfData> build(unsigned p, unsigned k) {
    auto d = std::make_unique<GfData>();
    d->p = p;
    d->k = k;
    d->q = 1;
    for (unsigned i = 0; i < k; ++i) d->q *= p;
    d->modulus = smallest_irreducible(p, k);
    if (d->q <= kTableLimit && d->q > 2) {
        std::uint64_t q = d->q;
        auto factors = prime_factors(q - 1);
        std::uint64_t g = 0;
        for (std::uint64_t c = 2; c < q && g == 0; ++c) {
            bool ok = true;
            for (auto r : factors)
                if (d->pow_slow(c, (q - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) g = c;
        }
        d->exp.resize(2 * (q - 1));
        d->log.assign(q, 0);
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            d->exp[i] = static_cast<std::uint32_t>(x);
            d->exp[i + q - 1] = static_cast<std::uint32_t>(x);
            d->log[x] = static_cast<std::uint32_t>(i);
            x = d->mul_slow(x, g);
        }
        if (k > 1) {
            d->neg.resize(q);
            for (std::uint64_t a = 0; a < q; ++a) d->neg[a] = static_cast<std::uint32_t>(d->neg_slow(a));
            if (q <= kAddTableLimit) {
                d->add.resize(q * q);
                for (std::uint64_t a = 0; a < q; ++a)
                    for (std::uint64_t b = 0; b < q; ++b)
                        d->add[a * q + b] = static_cast<std::uint32_t>(d->add_slow(a, b));
            }
        }
    }
    return d;
}

const GfData* intern(unsigned p, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<GfData>> fields;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = fields[{p, k}];
    if (!slot) slot = build(p, k);
    return slot.get();
}

}  // namespace
}  // namespace detail

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

GF::GF(unsigned p, unsigned k) {
    if (!is_prime(p) || p > 257) throw std::invalid_argument("characteristic must be a prime <= 257");
    if (k < 1 || k > 4) throw std::invalid_argument("extension degree must be in 1..4");
    d_ = detail::intern(p, k);
}

unsigned GF::characteristic() const { return d_->p; }
unsigned GF::degree() const { return d_->k; }
std::uint64_t GF::order() const { return d_->q; }
const std::vector<unsigned>& GF::modulus() const { return d_->modulus; }
Fq GF::zero() const { return Fq(d_, 0); }
Fq GF::one() const { return Fq(d_, 1); }

Fq GF::of(long long n) const {
    long long p = d_->p;
    long long r = n % p;
    if (r < 0) r += p;
    return Fq(d_, static_cast<std::uint64_t>(r));
}

Fq GF::element(std::uint64_t index) const {
    if (index >= d_->q) throw std::out_of_range("element index out of range");
    return Fq(d_, index);
}

Fq GF::gen() const { return d_->k == 1 ? Fq(d_, 0) : Fq(d_, d_->p); }

Fq GF::embed(const Fq& x) const {
    if (x.f_ == d_ || x.f_ == nullptr) return Fq(d_, x.v_);
    if (x.f_->p != d_->p) throw std::invalid_argument("embedding across characteristics");
    if (x.f_->k != 1 && x.v_ >= x.f_->p)
        throw std::invalid_argument("only prime-field elements embed into " + tag());
    return Fq(d_, x.v_);
}

std::string GF::tag() const { return d_ ? d_->tag() : "GF(?)"; }

bool Fq::is_one() const { return v_ == 1; }

Fq Fq::operator+(const Fq& o) const {
    auto f = field(o);
    if (!f) return Fq();
    return Fq(f, f->addf(v_, o.v_));
}

Fq Fq::operator-(const Fq& o) const {
    auto f = field(o);
    if (!f) return Fq();
    return Fq(f, f->addf(v_, f->negf(o.v_)));
}

Fq Fq::operator*(const Fq& o) const {
    auto f = field(o);
    if (!f) return Fq();
    return Fq(f, f->mulf(v_, o.v_));
}

Fq Fq::operator/(const Fq& o) const {
    auto f = field(o);
    if (!f) throw std::domain_error("division by field-less zero");
    return Fq(f, f->mulf(v_, f->invf(o.v_)));
}

Fq Fq::operator-() const { return f_ ? Fq(f_, f_->negf(v_)) : Fq(); }

Fq Fq::inv() const {
    if (!f_) throw std::domain_error("division by field-less zero");
    return Fq(f_, f_->invf(v_));
}

Fq Fq::pow(std::uint64_t e) const {
    if (!f_) return Fq();
    if (v_ == 0) return e == 0 ? Fq(f_, 1) : *this;
    if (f_->has_tables()) {
        std::uint64_t l = (static_cast<unsigned __int128>(f_->log[v_]) * e) % (f_->q - 1);
        return Fq(f_, f_->exp[l]);
    }
    return Fq(f_, f_->pow_slow(v_, e));
}

Fq Fq::times(long long n) const {
    if (!f_) return Fq();
    long long p = f_->p;
    long long r = n % p;
    if (r < 0) r += p;
    return *this * Fq(f_, static_cast<std::uint64_t>(r));
}

std::string Fq::str() const {
    if (!f_ || f_->k == 1) return std::to_string(v_);
    auto d = f_->digits(v_);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < f_->k; ++i) {
        if (d[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << d[i];
        } else {
            if (d[i] != 1) os << d[i] << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return "(" + os.str() + ")";
}

bool is_square(const Fq& x) {
    if (x.is_zero()) return true;
    const auto* d = x.domain().data();
    if (d->p == 2) return true;
    if (d->has_tables()) return d->log[x.index()] % 2 == 0;
    return x.pow((d->q - 1) / 2).is_one();
}

std::optional<Fq> sqrt(const Fq& x) {
    if (x.is_zero()) return x;
    GF F = x.domain();
    std::uint64_t q = F.order();
    if (F.characteristic() == 2) return x.pow(q / 2);
    const auto* d = F.data();
    if (d->has_tables()) {
        std::uint32_t l = d->log[x.index()];
        if (l % 2) return std::nullopt;
        return F.element(d->exp[l / 2]);
    }
    if (!is_square(x)) return std::nullopt;
    if (q % 4 == 3) return x.pow((q + 1) / 4);
    // Tonelli-Shanks in the cyclic group of order q-1.
    std::uint64_t Q = q - 1;
    unsigned S = 0;
    while (Q % 2 == 0) {
        Q /= 2;
        ++S;
    }
    Fq z;
    for (std::uint64_t i = 2; i < q; ++i) {
        Fq c = F.element(i);
        if (!is_square(c)) {
            z = c;
            break;
        }
    }
    unsigned M = S;
    Fq c = z.pow(Q);
    Fq t = x.pow(Q);
    Fq r = x.pow((Q + 1) / 2);
    while (!t.is_one()) {
        unsigned i = 0;
        Fq tt = t;
        while (!tt.is_one()) {
            tt = tt * tt;
            ++i;
        }
        Fq b = c;
        for (unsigned j = 0; j + i + 1 < M; ++j) b = b * b;
        M = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r;
}

// --- rationals -------------------------------------------------------------

Rational Rational::operator/(const Rational& o) const {
    if (o.v_ == 0) throw std::domain_error("division by zero in QQ");
    return Rational(BigRational(v_ / o.v_));
}

Rational Rational::inv() const { return Rational(1) / *this; }

Rational Rational::pow(std::uint64_t e) const {
    Rational r(1), a = *this;
    while (e) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

std::string Rational::str() const { return v_.str(); }

std::optional<Rational> sqrt(const Rational& x) {
    if (x.value() < 0) return std::nullopt;
    BigInt n = boost::multiprecision::numerator(x.value());
    BigInt d = boost::multiprecision::denominator(x.value());
    BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace prym5
