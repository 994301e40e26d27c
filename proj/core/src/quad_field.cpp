#include "normtuple/quad_field.hpp"

#include <cctype>
#include <sstream>

namespace normtuple {

const char* to_string(SplitKind k) {
    switch (k) {
        case SplitKind::Split: return "split";
        case SplitKind::Inert: return "inert";
        case SplitKind::Ramified: return "ramified";
    }
    return "?";
}

QuadField::QuadField(const Int& n) : disc_(fundamental_discriminant(n)) {
    if (disc_.degenerate())
        throw DegenerateFieldError("Q(sqrt(" + n.get_str() +
                                   ")) is degenerate: square-free core is 1");
    mode_ = (mpz_fdiv_ui(disc_.d.get_mpz_t(), 4) == 1) ? OmegaMode::Half
                                                       : OmegaMode::Sqrt;
    sqrt_part_ = isqrt(n / disc_.d).root;
}

Int QuadField::omega_norm() const {
    return mode_ == OmegaMode::Half ? Int((1 - disc_.d) / 4) : Int(-disc_.d);
}

std::string QuadField::omega_description() const {
    const std::string ds = disc_.d.get_str();
    return mode_ == OmegaMode::Half ? "(1+sqrt(" + ds + "))/2" : "sqrt(" + ds + ")";
}

AlgInt::AlgInt(QuadField field, Int u, Int v)
    : field_(std::move(field)), u_(std::move(u)), v_(std::move(v)) {}

AlgInt AlgInt::from_integer(const QuadField& f, const Int& value) {
    return AlgInt(f, value, 0);
}

AlgInt AlgInt::from_sqrt_basis(const QuadField& f, const Int& a, const Int& b,
                               const Int& c, const Int& sqrt_arg) {
    if (sqrt_arg == 0) throw DomainError("from_sqrt_basis: sqrt argument is 0");
    Discriminant s = fundamental_discriminant(sqrt_arg);
    if (s.d != f.d())
        throw DomainError("from_sqrt_basis: sqrt(" + sqrt_arg.get_str() +
                          ") does not lie in Q(sqrt(" + f.d().get_str() + "))");
    return from_sqrt_basis(f, a, b * isqrt(sqrt_arg / s.d).root, c);
}

AlgInt AlgInt::from_sqrt_basis(const QuadField& f, const Int& a, const Int& b,
                               const Int& c) {
    if (c != 1 && c != 2)
        throw DomainError("from_sqrt_basis: denominator must be 1 or 2");
    if (f.omega_mode() == OmegaMode::Sqrt) {
        // w = sqrt(d): (a + b*sqrt(d))/c integral iff c | a and c | b.
        if (c == 2 && (mpz_odd_p(a.get_mpz_t()) || mpz_odd_p(b.get_mpz_t())))
            throw DomainError("from_sqrt_basis: (" + a.get_str() + "+" + b.get_str() +
                              "*sqrt(d))/2 is not an algebraic integer here");
        return AlgInt(f, a / c, b / c);
    }
    // w = (1+sqrt(d))/2, so sqrt(d) = 2w - 1 and
    // (a + b*sqrt(d))/c = (a - b)/c + (2b/c) w.
    if (c == 2 && mod_floor(a - b, 2) != 0)
        throw DomainError("from_sqrt_basis: (" + a.get_str() + "+" + b.get_str() +
                          "*sqrt(d))/2 is not an algebraic integer (parity)");
    return AlgInt(f, (a - b) / c, 2 * b / c);
}

namespace {
void require_same_field(const AlgInt& x, const AlgInt& y, const char* op) {
    if (x.field() != y.field())
        throw DomainError(std::string(op) + ": operands belong to different fields");
}
} // namespace

AlgInt AlgInt::conj() const {
    // conj(u + v*w) = (u + v*T(w)) - v*w
    return AlgInt(field_, u_ + v_ * field_.omega_trace(), -v_);
}

Int AlgInt::trace() const { return 2 * u_ + v_ * field_.omega_trace(); }

Int AlgInt::norm() const {
    if (field_.omega_mode() == OmegaMode::Sqrt) return u_ * u_ - field_.d() * v_ * v_;
    return u_ * u_ + u_ * v_ - v_ * v_ * ((field_.d() - 1) / 4);
}

AlgInt AlgInt::operator-() const { return AlgInt(field_, -u_, -v_); }

AlgInt operator+(const AlgInt& x, const AlgInt& y) {
    require_same_field(x, y, "add");
    return AlgInt(x.field_, x.u_ + y.u_, x.v_ + y.v_);
}

AlgInt operator-(const AlgInt& x, const AlgInt& y) {
    require_same_field(x, y, "sub");
    return AlgInt(x.field_, x.u_ - y.u_, x.v_ - y.v_);
}

AlgInt operator*(const AlgInt& x, const AlgInt& y) {
    require_same_field(x, y, "mul");
    // w^2 = d in Sqrt mode, w^2 = w + (d-1)/4 in Half mode.
    Int cross = x.u_ * y.v_ + x.v_ * y.u_;
    Int ww = x.v_ * y.v_;
    if (x.field_.omega_mode() == OmegaMode::Sqrt)
        return AlgInt(x.field_, x.u_ * y.u_ + x.field_.d() * ww, cross);
    return AlgInt(x.field_, x.u_ * y.u_ + ww * ((x.field_.d() - 1) / 4), cross + ww);
}

bool AlgInt::operator==(const AlgInt& o) const {
    require_same_field(*this, o, "eq");
    return u_ == o.u_ && v_ == o.v_;
}

std::string AlgInt::str() const {
    if (v_ == 0) return u_.get_str();
    std::string wpart;
    Int va = abs(v_);
    if (va == 1)
        wpart = "w";
    else
        wpart = va.get_str() + "*w";
    if (u_ == 0) return (v_ < 0 ? "-" : "") + wpart;
    return u_.get_str() + (v_ < 0 ? "-" : "+") + wpart;
}

AlgInt omega(const QuadField& f) { return AlgInt(f, 0, 1); }

AlgInt sqrt_of_modulus(const QuadField& f) {
    const Int& s = f.sqrt_part();
    if (f.omega_mode() == OmegaMode::Sqrt) return AlgInt(f, 0, s);
    return AlgInt(f, -s, 2 * s); // sqrt(d) = 2w - 1
}

namespace {

struct ElementTerms {
    Int rational = 0;  // plain integer terms
    Int omega = 0;     // coefficients of w
    Int sqrt_coeff = 0; // coefficients of sqrt(x), scaled to sqrt(d)
    bool saw_omega = false;
    bool saw_sqrt = false;
};

[[noreturn]] void parse_fail(std::string_view text) {
    throw DomainError("parse_element: cannot parse \"" + std::string(text) + "\"");
}

// Reads one signed term starting at i; returns false at end of input.
bool read_term(const QuadField& f, const std::string& s, std::size_t& i,
               ElementTerms& out, std::string_view orig) {
    if (i >= s.size()) return false;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        digits += s[i++];
    bool have_coeff = !digits.empty();
    Int coeff = have_coeff ? Int(digits) : Int(1);
    coeff *= sign;
    if (i < s.size() && s[i] == '*') {
        if (!have_coeff) parse_fail(orig);
        ++i;
    }
    if (i < s.size() && s[i] == 'w') {
        ++i;
        out.omega += coeff;
        out.saw_omega = true;
        return true;
    }
    if (s.compare(i, 5, "sqrt(") == 0) {
        i += 5;
        std::string arg;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) arg += s[i++];
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            arg += s[i++];
        if (arg.empty() || arg == "-" || arg == "+" || i >= s.size() || s[i] != ')')
            parse_fail(orig);
        ++i;
        Int x(arg);
        if (x == 0) parse_fail(orig);
        Discriminant sd = fundamental_discriminant(x);
        if (sd.d != f.d())
            throw DomainError("parse_element: sqrt(" + x.get_str() +
                              ") does not lie in this field");
        out.sqrt_coeff += coeff * isqrt(x / sd.d).root;
        out.saw_sqrt = true;
        return true;
    }
    if (!have_coeff) parse_fail(orig);
    out.rational += coeff;
    return true;
}

} // namespace

AlgInt parse_element(const QuadField& f, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) parse_fail(text);

    Int denom(1);
    if (s.front() == '(') {
        auto close = s.rfind(')');
        if (close == std::string::npos) parse_fail(text);
        std::string tail = s.substr(close + 1);
        if (tail == "/2")
            denom = 2;
        else if (!tail.empty() && tail != "/1")
            parse_fail(text);
        s = s.substr(1, close - 1);
        if (s.empty()) parse_fail(text);
    }

    ElementTerms terms;
    std::size_t i = 0;
    while (read_term(f, s, i, terms, text)) {}
    if (i != s.size()) parse_fail(text);

    if (terms.saw_omega) {
        if (terms.saw_sqrt || denom != 1)
            throw DomainError("parse_element: w-form input cannot mix sqrt() terms "
                              "or carry a denominator");
        return AlgInt(f, terms.rational, terms.omega);
    }
    return AlgInt::from_sqrt_basis(f, terms.rational, terms.sqrt_coeff, denom);
}

AlphaFromPair alpha_from_pair(const Int& t1, const Int& t2, const Int& n) {
    if (t1 < 1 || t2 < 1)
        throw DomainError("alpha_from_pair: t1 and t2 must be positive");
    QuadField f(n); // degenerate or zero modulus rejected here
    Int val = t1 * t2 + n;
    if (val < 0)
        throw NotAPairError("alpha_from_pair: " + t1.get_str() + "*" + t2.get_str() +
                            " + " + n.get_str() + " is negative");
    IsqrtResult root = isqrt(val);
    if (!root.exact)
        throw NotAPairError("alpha_from_pair: " + val.get_str() +
                            " is not a perfect square, {" + t1.get_str() + "," +
                            t2.get_str() + "} is not a D(" + n.get_str() + ")-pair");
    AlgInt alpha = AlgInt::from_integer(f, -root.root) + sqrt_of_modulus(f);
    return AlphaFromPair{alpha, root.root};
}

SplitType split_type(const Int& p, const QuadField& f) {
    if (!is_prime(p)) throw DomainError("split_type: " + p.get_str() + " is not prime");
    if (mpz_divisible_p(f.D().get_mpz_t(), p.get_mpz_t()))
        return SplitType{SplitKind::Ramified, 1};
    // Odd D and p = 2 is covered by the full Kronecker extension.
    return kronecker(f.D(), p) == 1 ? SplitType{SplitKind::Split, 1}
                                    : SplitType{SplitKind::Inert, 2};
}

} // namespace normtuple
