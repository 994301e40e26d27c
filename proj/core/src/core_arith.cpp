#include "normtuple/core_arith.hpp"

#include <atomic>
#include <cmath>

namespace normtuple {

namespace {

bool fits_u64(const Int& m) { return mpz_fits_ulong_p(m.get_mpz_t()) != 0; }

// Fast path; values at desk scale overwhelmingly land here.
IsqrtResult isqrt_u64(unsigned long m) {
    auto r = static_cast<unsigned long>(std::sqrt(static_cast<double>(m)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > m) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= m) ++r;
    return {Int(r), static_cast<unsigned __int128>(r) * r == m};
}

} // namespace

IsqrtResult isqrt(const Int& m) {
    if (m < 0) throw DomainError("isqrt: negative argument");
    if (m == 0) return {Int(0), true};
    if (fits_u64(m)) return isqrt_u64(mpz_get_ui(m.get_mpz_t()));

    // Newton iteration from an initial guess >= sqrt(m); the sequence
    // decreases monotonically, the two loops below pin the exact floor.
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    Int x = Int(1) << static_cast<unsigned long>((bits + 2) / 2);
    for (;;) {
        Int y = (x + m / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    while (x * x > m) --x;
    while ((x + 1) * (x + 1) <= m) ++x;
    return {x, x * x == m};
}

Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::optional<Int> nth_root_exact(const Int& m, unsigned k) {
    if (k < 2) throw DomainError("nth_root_exact: k must be >= 2");
    if (m < 1) throw DomainError("nth_root_exact: argument must be positive");
    if (m == 1) return Int(1);

    // Binary search on the floor k-th root, then test exactness.
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    Int lo = 1;
    Int hi = Int(1) << static_cast<unsigned long>(bits / k + 1);
    while (lo < hi) {
        Int mid = (lo + hi + 1) >> 1;
        if (pow_ui(mid, k) <= m)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (pow_ui(lo, k) == m) return lo;
    return std::nullopt;
}

Int Factorization::reassemble() const {
    Int p(1);
    for (const auto& f : factors) p *= pow_ui(f.prime, f.exponent);
    return p;
}

unsigned Factorization::exponent_of(const Int& p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

namespace {
std::atomic<unsigned long> g_trial_bound{1000000UL};
} // namespace

unsigned long trial_division_bound() { return g_trial_bound.load(); }

void set_trial_division_bound(unsigned long bound) {
    g_trial_bound.store(bound < 2 ? 2 : bound);
}

namespace {

const unsigned long kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17,
                                      19, 23, 29, 31, 37, 41};

// Largest n for which Miller-Rabin with the witness set above is a proof
// (Sorenson & Webster): 3317044064679887385961981.
const Int& deterministic_mr_limit() {
    static const Int limit("3317044064679887385961981");
    return limit;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long r) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const Int& m) {
    if (m < 2) return false;
    for (unsigned long p : kSmallPrimes) {
        if (m == p) return true;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
    }
    if (m >= deterministic_mr_limit())
        throw CapabilityError("is_prime: " + m.get_str() +
                              " is beyond the deterministic Miller-Rabin range");

    Int d = m - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    d >>= r;
    for (unsigned long p : kSmallPrimes)
        if (!miller_rabin_witness(m, Int(p), d, r)) return false;
    return true;
}

Factorization factorize(const Int& m, unsigned long bound) {
    if (m < 1) throw DomainError("factorize: argument must be positive");
    if (bound < 2) bound = 2;

    Factorization out;
    out.value = m;
    Int rem = m;

    auto strip = [&](unsigned long p) {
        if (!mpz_divisible_ui_p(rem.get_mpz_t(), p)) return;
        unsigned e = 0;
        do {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            ++e;
        } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
        out.factors.push_back({Int(p), e});
    };
    // true once p*p > rem, i.e. trial division is finished
    auto past_sqrt = [&](unsigned long p) {
        if (!fits_u64(rem)) return false;
        return static_cast<unsigned __int128>(p) * p > mpz_get_ui(rem.get_mpz_t());
    };

    strip(2);
    strip(3);
    for (unsigned long p = 5, step = 2; p <= bound && rem > 1 && !past_sqrt(p);
         p += step, step = 6 - step)
        strip(p);

    if (rem > 1) {
        // No factor <= min(bound, sqrt(rem)) remains, so rem is prime iff
        // it is small enough or Miller-Rabin certifies it.
        bool certified_prime;
        if (isqrt(rem).root <= bound) {
            certified_prime = true;
        } else {
            try {
                certified_prime = is_prime(rem);
            } catch (const CapabilityError&) {
                throw CapabilityError("factorize: cofactor " + rem.get_str() +
                                      " cannot be certified beyond trial bound " +
                                      std::to_string(bound));
            }
        }
        if (!certified_prime)
            throw CapabilityError("factorize: composite cofactor " + rem.get_str() +
                                  " exceeds trial division bound " +
                                  std::to_string(bound));
        out.factors.push_back({rem, 1});
    }
    return out;
}

Factorization factorize(const Int& m) { return factorize(m, trial_division_bound()); }

namespace {
// (2|x) for odd x, indexed by x mod 8.
const int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};

unsigned long mod8(const Int& x) { return mpz_fdiv_ui(x.get_mpz_t(), 8); }
unsigned long mod4(const Int& x) { return mpz_fdiv_ui(x.get_mpz_t(), 4); }
} // namespace

int kronecker(const Int& a0, const Int& b0) {
    Int a = a0, b = b0;
    if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
    const bool a_even = mpz_even_p(a.get_mpz_t()) != 0;
    if (a_even && mpz_even_p(b.get_mpz_t())) return 0;

    // Pull the powers of two out of b; (a|2) = tab2[a mod 8] for odd a.
    unsigned long v = mpz_scan1(b.get_mpz_t(), 0);
    if (v) mpz_tdiv_q_2exp(b.get_mpz_t(), b.get_mpz_t(), v);
    int k = (v % 2 == 0) ? 1 : kTab2[mod8(a)];
    if (b < 0) {
        b = -b;
        if (a < 0) k = -k;
    }

    // Kronecker-Jacobi loop (binary gcd flavoured): b stays odd positive.
    for (;;) {
        if (a == 0) return (b > 1) ? 0 : k;
        v = mpz_scan1(a.get_mpz_t(), 0);
        if (v) {
            mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), v);
            if (v % 2) k *= kTab2[mod8(b)];
        }
        // quadratic reciprocity; both arguments odd here
        if (mod4(a) == 3 && mod4(b) == 3) k = -k;
        Int r = abs(a);
        a = b % r;
        b = r;
    }
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
    Int a = mod_floor(a0, p);
    if (a == 0) return Int(0);
    if (p == 2) return a; // a == 1

    Int e;
    mpz_powm(e.get_mpz_t(), a.get_mpz_t(), mpz_class((p - 1) / 2).get_mpz_t(),
             p.get_mpz_t());
    if (e == p - 1) return std::nullopt; // non-residue

    if (mod4(p) == 3) {
        Int r;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), mpz_class((p + 1) / 4).get_mpz_t(),
                 p.get_mpz_t());
        return r;
    }

    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;

    Int z(2);
    for (;;) {
        Int ls;
        mpz_powm(ls.get_mpz_t(), z.get_mpz_t(), mpz_class((p - 1) / 2).get_mpz_t(),
                 p.get_mpz_t());
        if (ls == p - 1) break;
        ++z;
    }

    Int c, t, r;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), mpz_class((q + 1) / 2).get_mpz_t(),
             p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        Int t2 = t;
        unsigned long i = 0;
        while (t2 != 1) {
            t2 = (t2 * t2) % p;
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
        r = (r * b) % p;
        c = (b * b) % p;
        t = (t * c) % p;
        m = i;
    }
    return r;
}

Discriminant fundamental_discriminant(const Int& n) {
    if (n == 0) throw DomainError("fundamental_discriminant: n must be nonzero");
    Factorization f = factorize(abs(n));
    Int d = (n < 0) ? Int(-1) : Int(1);
    for (const auto& fp : f.factors)
        if (fp.exponent % 2 == 1) d *= fp.prime;
    Int D = (mod4(d) == 1) ? d : 4 * d;
    return Discriminant{n, d, D};
}

} // namespace normtuple
