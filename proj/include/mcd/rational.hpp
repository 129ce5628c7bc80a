#ifndef MCD_RATIONAL_HPP
#define MCD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mcd/error.hpp"

namespace mcd {

/// Arbitrary precision integer / rational. All arithmetic in the library is
/// exact; no floating point touches any result.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(errc::parse_error, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// Parses "p" or "p/q" with optional sign. Used by the instance / point file
/// readers, hence the parse_error code.
inline Rat parse_rat(const std::string& token) {
    const auto slash = token.find('/');
    try {
        if (slash == std::string::npos) return make_rat(Int(token), Int(1));
        return make_rat(Int(token.substr(0, slash)), Int(token.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        fail(errc::parse_error, "malformed rational '" + token + "'");
    }
}

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// gcd of absolute values, gcd(x, 0) = |x|; returns 0 for an all-zero vector.
inline Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Divides the vector by its content, making the entries coprime integers.
/// An all-zero vector is left untouched.
inline void make_primitive(std::vector<Int>& v) {
    Int g = content(v);
    if (g <= 1) return;
    for (Int& x : v) x /= g;
}

/// Scales a rational vector by the lcm of its denominators, yielding the
/// unique primitive integer vector with the same direction (up to the sign,
/// which is preserved).
inline std::vector<Int> scale_to_integer(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Rat& q : v) out.push_back(q.get_num() * (lcm / q.get_den()));
    make_primitive(out);
    return out;
}

} // namespace mcd

#endif
