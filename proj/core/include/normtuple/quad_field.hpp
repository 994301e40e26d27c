#ifndef NORMTUPLE_QUAD_FIELD_HPP
#define NORMTUPLE_QUAD_FIELD_HPP

/// The ring of integers O_K of a quadratic field K = Q(sqrt(n)): elements
/// over the integral basis (1, w), trace/norm, the Diophantine-pair
/// correspondence, and prime splitting classification.

#include <string>
#include <string_view>

#include "normtuple/core_arith.hpp"

namespace normtuple {

/// Integral-basis convention: w = sqrt(d) when d = 2,3 (mod 4),
/// w = (1 + sqrt(d))/2 when d = 1 (mod 4).
enum class OmegaMode { Sqrt, Half };

enum class SplitKind { Split, Inert, Ramified };

/// How a rational prime factors in O_K. The residue degree is 2 exactly
/// in the inert case.
struct SplitType {
    SplitKind kind;
    int residue_degree;
};

const char* to_string(SplitKind k);

/// Immutable description of K = Q(sqrt(n)). Two QuadField values denote
/// the same field exactly when their square-free cores agree (n = 12 and
/// n = 3 give the same field).
class QuadField {
public:
    /// Throws DomainError for n = 0 and DegenerateFieldError when n is a
    /// perfect square (core 1).
    explicit QuadField(const Int& n);

    const Int& n() const { return disc_.n; }
    const Int& d() const { return disc_.d; }
    const Int& D() const { return disc_.D; }
    const Discriminant& discriminant() const { return disc_; }
    OmegaMode omega_mode() const { return mode_; }

    /// s >= 1 with n = d * s^2.
    const Int& sqrt_part() const { return sqrt_part_; }

    Int omega_trace() const { return Int(mode_ == OmegaMode::Half ? 1 : 0); }
    Int omega_norm() const;

    /// Human-readable description of w, e.g. "(1+sqrt(5))/2".
    std::string omega_description() const;

    bool operator==(const QuadField& o) const { return disc_.d == o.disc_.d; }
    bool operator!=(const QuadField& o) const { return !(*this == o); }

private:
    Discriminant disc_;
    OmegaMode mode_;
    Int sqrt_part_;
};

/// An element u + v*w of O_K. Equality is coordinate equality within one
/// field; arithmetic across distinct fields throws DomainError.
class AlgInt {
public:
    AlgInt(QuadField field, Int u, Int v);

    static AlgInt from_integer(const QuadField& f, const Int& value);

    /// (a + b*sqrt(x))/c with c in {1, 2}; x may carry a square factor as
    /// long as its core matches the field (sqrt(12) = 2*sqrt(3)). Throws
    /// DomainError when the quotient is not an algebraic integer.
    static AlgInt from_sqrt_basis(const QuadField& f, const Int& a, const Int& b,
                                  const Int& c, const Int& sqrt_arg);
    static AlgInt from_sqrt_basis(const QuadField& f, const Int& a, const Int& b,
                                  const Int& c);

    const QuadField& field() const { return field_; }
    const Int& u() const { return u_; }
    const Int& v() const { return v_; }
    bool is_zero() const { return u_ == 0 && v_ == 0; }

    AlgInt conj() const;
    Int trace() const;
    Int norm() const;

    AlgInt operator-() const;
    friend AlgInt operator+(const AlgInt& x, const AlgInt& y);
    friend AlgInt operator-(const AlgInt& x, const AlgInt& y);
    friend AlgInt operator*(const AlgInt& x, const AlgInt& y);
    bool operator==(const AlgInt& o) const;
    bool operator!=(const AlgInt& o) const { return !(*this == o); }

    /// Canonical compact rendering, e.g. "-4+2*w", "w", "7".
    std::string str() const;

private:
    QuadField field_;
    Int u_, v_;
};

/// w itself.
AlgInt omega(const QuadField& f);

/// sqrt(n) as an element of O_K (n the field's modulus, possibly with a
/// square part).
AlgInt sqrt_of_modulus(const QuadField& f);

/// Parses "u+v*w", "a+b*sqrt(x)" or "(a+b*sqrt(x))/2" (whitespace
/// tolerated) into an element of f.
AlgInt parse_element(const QuadField& f, std::string_view text);

struct AlphaFromPair {
    AlgInt alpha; // -r + sqrt(n)
    Int r;        // r >= 0, r^2 = t1*t2 + n
};

/// The pair correspondence: for a D(n)-pair (t1, t2) produces the
/// algebraic integer alpha = -r + sqrt(n) with trace -2r and norm t1*t2.
/// Throws NotAPairError when t1*t2 + n is not a perfect square.
AlphaFromPair alpha_from_pair(const Int& t1, const Int& t2, const Int& n);

/// Splitting of the rational prime p in f, decided through the Kronecker
/// symbol of the fundamental discriminant. Throws DomainError if p is not
/// prime.
SplitType split_type(const Int& p, const QuadField& f);

} // namespace normtuple

#endif
