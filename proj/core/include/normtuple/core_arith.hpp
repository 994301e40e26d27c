#ifndef NORMTUPLE_CORE_ARITH_HPP
#define NORMTUPLE_CORE_ARITH_HPP

/// Exact integer utilities every other component builds on: integer roots,
/// factorization with a configurable trial-division bound, the Kronecker
/// symbol, and fundamental discriminants. All values are arbitrary-precision
/// (GMP) and all functions are pure; see set_trial_division_bound for the
/// one process-wide knob.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "normtuple/errors.hpp"

namespace normtuple {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/// floor(sqrt(m)) together with an exactness flag.
struct IsqrtResult {
    Int root;
    bool exact; // root * root == m
};

/// Integer square root by Newton iteration with a final correction step.
/// Throws DomainError for negative input.
IsqrtResult isqrt(const Int& m);

/// Exact k-th root: returns x with x^k == m, or nullopt if m is not a
/// perfect k-th power. Requires m >= 1 and k >= 2 (DomainError otherwise).
std::optional<Int> nth_root_exact(const Int& m, unsigned k);

/// b^e for small exponents.
Int pow_ui(const Int& base, unsigned long e);

/// One prime power q^e of a factorization.
struct FactorPower {
    Int prime;
    unsigned exponent;
};

/// Canonical prime decomposition: primes strictly increasing, exponents
/// positive, product equal to value. factorize(1) has an empty factor list.
struct Factorization {
    Int value;
    std::vector<FactorPower> factors;

    /// Multiplies the factor list back together (testing hook).
    Int reassemble() const;
    /// Exponent of p in value (0 if p does not divide it).
    unsigned exponent_of(const Int& p) const;
};

/// Trial division bound currently in force (default 10^6).
unsigned long trial_division_bound();

/// Overrides the trial-division bound. Intended to be called once at
/// startup (the CLI wires it to NORMTUPLE_FACTOR_BOUND); values below 2
/// are clamped to 2.
void set_trial_division_bound(unsigned long bound);

/// Factors m >= 1 by trial division up to the given bound, certifying any
/// remaining cofactor with deterministic Miller-Rabin. A composite (or
/// uncertifiable) cofactor raises CapabilityError naming the cofactor --
/// never a silently wrong "prime".
Factorization factorize(const Int& m, unsigned long bound);
Factorization factorize(const Int& m);

/// Deterministic primality test (Miller-Rabin with the 13-witness set,
/// provably correct below 3317044064679887385961981). CapabilityError for
/// larger inputs.
bool is_prime(const Int& m);

/// Kronecker symbol (a|b), the full multiplicative extension of the
/// Legendre symbol to all integer pairs. For an odd prime b coprime to a
/// this is 1 exactly when a is a quadratic residue mod b.
int kronecker(const Int& a, const Int& b);

/// Square root of a modulo an odd prime p (Tonelli-Shanks), or nullopt if
/// a is a non-residue. The returned root lies in [0, p).
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

/// Mathematical remainder in [0, |m|).
Int mod_floor(const Int& a, const Int& m);

/// A modulus n together with its square-free core d and the fundamental
/// discriminant D of Q(sqrt(d)): D = d when d = 1 (mod 4), else 4d.
struct Discriminant {
    Int n;
    Int d;
    Int D;

    /// d == 1 means Q(sqrt(n)) collapses to Q; field construction refuses.
    bool degenerate() const { return d == 1; }
};

/// Computes the square-free core and fundamental discriminant of n != 0.
/// Needs to factor |n|, so the trial-division bound applies.
Discriminant fundamental_discriminant(const Int& n);

} // namespace normtuple

#endif
