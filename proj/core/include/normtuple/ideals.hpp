#ifndef NORMTUPLE_IDEALS_HPP
#define NORMTUPLE_IDEALS_HPP

/// Nonzero integral ideals of O_K as canonical Hermite-normal-form
/// lattices Z*a + Z*(b + c*w) with c | a, c | b, 0 <= b < a, norm a*c.

#include <optional>
#include <string>
#include <vector>

#include "normtuple/quad_field.hpp"

namespace normtuple {

class IdealHNF {
public:
    /// Canonical HNF of the O_K-module generated by gens; independent of
    /// generator order and of unimodular rewriting. Throws DomainError when
    /// all generators are zero (or the list is empty).
    static IdealHNF from_generators(const QuadField& f, const std::vector<AlgInt>& gens);

    /// Builds directly from an (a, b, c) triple, validating the HNF
    /// invariants and closure under multiplication by w.
    static IdealHNF from_triple(const QuadField& f, const Int& a, const Int& b,
                                const Int& c);

    static IdealHNF ring_of_integers(const QuadField& f);

    const QuadField& field() const { return field_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    /// a*c, the index [O_K : I].
    Int norm() const { return a_ * c_; }

    bool is_ring_of_integers() const { return a_ == 1 && c_ == 1; }

    /// Lattice membership test.
    bool contains(const AlgInt& x) const;

    /// The generator b + c*w as an element.
    AlgInt second_generator() const;

    /// "[a, b+c*w]".
    std::string str() const;

    /// Canonical triples make equality trivial. Throws DomainError when the
    /// fields differ.
    bool operator==(const IdealHNF& o) const;
    bool operator!=(const IdealHNF& o) const { return !(*this == o); }

private:
    IdealHNF(QuadField f, Int a, Int b, Int c);

    QuadField field_;
    Int a_, b_, c_;
};

/// Ideal product: HNF of the module spanned by all pairwise generator
/// products. Throws DomainError when the fields differ.
IdealHNF operator*(const IdealHNF& i, const IdealHNF& j);

/// <g>; throws DomainError for g = 0.
IdealHNF principal_ideal(const AlgInt& g);

/// I^e (e >= 0).
IdealHNF ideal_pow(const IdealHNF& i, unsigned e);

struct PrimeAbove {
    IdealHNF ideal;
    int residue_degree;
};

/// The primes of O_K above p: two conjugate ideals of norm p (split, sorted
/// by their HNF b), one ideal <p> of norm p^2 (inert), or one ideal of norm
/// p whose square is <p> (ramified). Throws DomainError if p is not prime.
std::vector<PrimeAbove> prime_above(const QuadField& f, const Int& p);

/// Some integral ideal of norm exactly t, or nullopt when none exists
/// (an inert prime divides t to an odd power). Deterministic: split primes
/// contribute the prime above with the smaller b. Factoring t is subject to
/// the trial-division bound (CapabilityError).
std::optional<IdealHNF> ideal_of_norm(const QuadField& f, const Int& t);

/// Box search for a generator: returns g with <g> = I and |u|, |v| <= B,
/// or nullopt. A nullopt is inconclusive about non-principality unless the
/// caller supplies a proven bound.
std::optional<AlgInt> find_generator_bounded(const IdealHNF& i, const Int& box_bound);

} // namespace normtuple

#endif
