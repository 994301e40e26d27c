#include "normtuple/ideals.hpp"

#include <algorithm>

namespace normtuple {

namespace {

void require_same_field(const QuadField& a, const QuadField& b, const char* op) {
    if (a != b)
        throw DomainError(std::string(op) + ": ideals belong to different fields");
}

// g = x*s + y*t with g = gcd(s, t) >= 0.
void xgcd(Int& g, Int& x, Int& y, const Int& s, const Int& t) {
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), s.get_mpz_t(),
               t.get_mpz_t());
}

} // namespace

IdealHNF::IdealHNF(QuadField f, Int a, Int b, Int c)
    : field_(std::move(f)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ <= 0 || c_ <= 0 || b_ < 0 || b_ >= a_ ||
        !mpz_divisible_p(a_.get_mpz_t(), c_.get_mpz_t()) ||
        !mpz_divisible_p(b_.get_mpz_t(), c_.get_mpz_t()))
        throw DomainError("IdealHNF: (" + a_.get_str() + ", " + b_.get_str() + ", " +
                          c_.get_str() + ") is not a reduced HNF triple");
    // Closure under w: both a*w and (b + c*w)*w must lie in the lattice.
    AlgInt wa = AlgInt::from_integer(field_, a_) * omega(field_);
    AlgInt wg = second_generator() * omega(field_);
    if (!contains(wa) || !contains(wg))
        throw DomainError("IdealHNF: lattice (" + a_.get_str() + ", " + b_.get_str() +
                          ", " + c_.get_str() + ") is not an O_K-module");
}

IdealHNF IdealHNF::from_triple(const QuadField& f, const Int& a, const Int& b,
                               const Int& c) {
    return IdealHNF(f, a, b, c);
}

IdealHNF IdealHNF::ring_of_integers(const QuadField& f) { return IdealHNF(f, 1, 0, 1); }

IdealHNF IdealHNF::from_generators(const QuadField& f, const std::vector<AlgInt>& gens) {
    if (gens.empty()) throw DomainError("ideal_from_generators: no generators");
    for (const auto& g : gens)
        if (g.field() != f)
            throw DomainError("ideal_from_generators: generator from another field");
    if (std::all_of(gens.begin(), gens.end(), [](const AlgInt& g) { return g.is_zero(); }))
        throw DomainError("ideal_from_generators: all generators are zero");

    // The O_K-module generated by g is Z*g + Z*(g*w), so two rows per
    // generator in (1, w) coordinates.
    struct Row { Int u, v; };
    std::vector<Row> rows;
    rows.reserve(2 * gens.size());
    const AlgInt w = omega(f);
    for (const auto& g : gens) {
        rows.push_back({g.u(), g.v()});
        AlgInt gw = g * w;
        rows.push_back({gw.u(), gw.v()});
    }

    // Integer row reduction: fold all rows into one with w-coordinate
    // c = gcd of the v's, then the remaining rational-integer rows give a.
    Int b0(0), c(0);
    for (const auto& r : rows) {
        Int g, x, y;
        xgcd(g, x, y, c, r.v);
        b0 = x * b0 + y * r.u;
        c = g;
    }
    if (c == 0)
        throw DomainError("ideal_from_generators: generators span no w-component");

    Int a(0);
    for (const auto& r : rows) a = gcd(a, r.u - (r.v / c) * b0);
    if (a == 0)
        throw DomainError("ideal_from_generators: generators span a rank-1 lattice");

    return IdealHNF(f, a, mod_floor(b0, a), c);
}

bool IdealHNF::contains(const AlgInt& x) const {
    if (x.field() != field_)
        throw DomainError("IdealHNF::contains: element from another field");
    if (!mpz_divisible_p(x.v().get_mpz_t(), c_.get_mpz_t())) return false;
    Int u0 = x.u() - (x.v() / c_) * b_;
    return mpz_divisible_p(u0.get_mpz_t(), a_.get_mpz_t()) != 0;
}

AlgInt IdealHNF::second_generator() const { return AlgInt(field_, b_, c_); }

std::string IdealHNF::str() const {
    return "[" + a_.get_str() + ", " + second_generator().str() + "]";
}

bool IdealHNF::operator==(const IdealHNF& o) const {
    require_same_field(field_, o.field_, "ideal_eq");
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
}

IdealHNF operator*(const IdealHNF& i, const IdealHNF& j) {
    require_same_field(i.field(), j.field(), "ideal_mul");
    const QuadField& f = i.field();
    AlgInt a1 = AlgInt::from_integer(f, i.a());
    AlgInt a2 = AlgInt::from_integer(f, j.a());
    AlgInt g1 = i.second_generator();
    AlgInt g2 = j.second_generator();
    return IdealHNF::from_generators(f, {a1 * a2, a1 * g2, a2 * g1, g1 * g2});
}

IdealHNF principal_ideal(const AlgInt& g) {
    return IdealHNF::from_generators(g.field(), {g});
}

IdealHNF ideal_pow(const IdealHNF& i, unsigned e) {
    IdealHNF acc = IdealHNF::ring_of_integers(i.field());
    for (unsigned k = 0; k < e; ++k) acc = acc * i;
    return acc;
}

std::vector<PrimeAbove> prime_above(const QuadField& f, const Int& p) {
    SplitType st = split_type(p, f); // validates primality
    if (st.kind == SplitKind::Inert)
        return {{principal_ideal(AlgInt::from_integer(f, p)), 2}};

    // Roots of the minimal polynomial of w mod p; O_K = Z[w], so Dedekind
    // factorization applies at every prime including 2.
    std::vector<Int> roots;
    if (p == 2) {
        for (int r = 0; r <= 1; ++r) {
            AlgInt val = (omega(f) - AlgInt::from_integer(f, r)) *
                         (omega(f).conj() - AlgInt::from_integer(f, r));
            // (w - r)(wbar - r) = N(w) - r*T(w) + r^2, a rational integer
            if (mod_floor(val.u(), 2) == 0) roots.push_back(Int(r));
        }
    } else {
        std::optional<Int> s = sqrt_mod_prime(f.d(), p);
        if (!s)
            throw TheoremViolationError("prime_above: no root mod " + p.get_str() +
                                        " for a non-inert prime");
        if (f.omega_mode() == OmegaMode::Sqrt) {
            roots.push_back(*s);
            if (*s != 0) roots.push_back(p - *s);
        } else {
            // w = (1+sqrt(d))/2, so the roots are (1 +- s) / 2 mod p.
            Int inv2;
            mpz_invert(inv2.get_mpz_t(), Int(2).get_mpz_t(), p.get_mpz_t());
            roots.push_back(mod_floor((1 + *s) * inv2, p));
            if (*s != 0) roots.push_back(mod_floor((1 - *s) * inv2, p));
        }
    }

    if (st.kind == SplitKind::Ramified) {
        if (roots.empty())
            throw TheoremViolationError("prime_above: ramified prime without a root");
        IdealHNF ideal = IdealHNF::from_generators(
            f, {AlgInt::from_integer(f, p), omega(f) - AlgInt::from_integer(f, roots[0])});
        return {{ideal, 1}};
    }

    if (roots.size() != 2 || roots[0] == roots[1])
        throw TheoremViolationError("prime_above: split prime without two roots mod " +
                                    p.get_str());
    std::vector<PrimeAbove> out;
    for (const Int& r : roots)
        out.push_back({IdealHNF::from_generators(
                           f, {AlgInt::from_integer(f, p),
                               omega(f) - AlgInt::from_integer(f, r)}),
                       1});
    std::sort(out.begin(), out.end(), [](const PrimeAbove& x, const PrimeAbove& y) {
        return x.ideal.b() < y.ideal.b();
    });
    return out;
}

std::optional<IdealHNF> ideal_of_norm(const QuadField& f, const Int& t) {
    if (t < 1) throw DomainError("ideal_of_norm: norm must be positive");
    IdealHNF acc = IdealHNF::ring_of_integers(f);
    for (const auto& fp : factorize(t).factors) {
        SplitType st = split_type(fp.prime, f);
        switch (st.kind) {
            case SplitKind::Inert: {
                if (fp.exponent % 2 == 1) return std::nullopt;
                IdealHNF p = principal_ideal(AlgInt::from_integer(f, fp.prime));
                acc = acc * ideal_pow(p, fp.exponent / 2);
                break;
            }
            case SplitKind::Split:
            case SplitKind::Ramified: {
                // smaller-b prime first by construction
                IdealHNF p = prime_above(f, fp.prime).front().ideal;
                acc = acc * ideal_pow(p, fp.exponent);
                break;
            }
        }
    }
    return acc;
}

std::optional<AlgInt> find_generator_bounded(const IdealHNF& i, const Int& box_bound) {
    if (box_bound < 1) throw DomainError("find_generator_bounded: bound must be >= 1");
    const QuadField& f = i.field();
    const Int target = i.norm();
    // Scan order fixed for reproducibility: v = 0..B, u = 0, 1, -1, 2, -2, ...
    // (negating an element does not change the ideal, so v < 0 is redundant).
    for (Int v = 0; v <= box_bound; ++v) {
        for (Int u = 0; u <= box_bound; ++u) {
            for (int sign = 0; sign < (u == 0 ? 1 : 2); ++sign) {
                AlgInt g(f, sign ? Int(-u) : u, v);
                if (g.is_zero()) continue;
                if (abs(g.norm()) != target) continue;
                if (!i.contains(g)) continue;
                if (principal_ideal(g) == i) return g;
            }
        }
    }
    return std::nullopt;
}

} // namespace normtuple
