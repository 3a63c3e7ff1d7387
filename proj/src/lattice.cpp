#include "ruled/lattice.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ruled {

Int intersect(const NumClass& u, const NumClass& v, const RuledSurface& s) {
    // Bilinear expansion over C0^2 = -e, C0.f = f.C0 = 1, f^2 = 0.
    return -u.x * v.x * s.e + u.x * v.y + u.y * v.x;
}

NumClass canonical_class(const RuledSurface& s) {
    return {-2, Int(2 * s.g - 2 - s.e)};
}

bool is_ample(const Rat& a, const Rat& b, const RuledSurface& s) {
    return a > 0 && b > a * s.e;
}

bool is_ample(const NumClass& h, const RuledSurface& s) {
    return h.x > 0 && h.y > h.x * s.e;
}

Polarization::Polarization(const Rat& alpha, const Rat& beta,
                           const RuledSurface& s) {
    if (!is_ample(alpha, beta, s))
        throw PreconditionError("polarization is not ample: needs alpha > 0 "
                                "and beta > alpha*e");
    // Clear denominators, then divide out the content.
    Int d = boost::multiprecision::lcm(rat_den(alpha), rat_den(beta));
    alpha_ = rat_num(alpha) * (d / rat_den(alpha));
    beta_ = rat_num(beta) * (d / rat_den(beta));
    Int c = boost::multiprecision::gcd(alpha_, abs(beta_));
    if (c > 1) {
        alpha_ /= c;
        beta_ /= c;
    }
}

Rat slope_mu(const NumClass& c1, const Int& rank, const Polarization& h,
             const RuledSurface& s) {
    if (rank <= 0) throw PreconditionError("slope_mu requires rank >= 1");
    return Rat(intersect(c1, h.num_class(), s), rank);
}

Effectivity effective_necessary(const NumClass& d) {
    if (d.x < 0 || d.y < 0) return Effectivity::Violated;
    return Effectivity::Possible;
}

Int h0_upper(const Int& a, const Int& b, const RuledSurface& s) {
    if (a < 0) throw PreconditionError("h0_upper requires a >= 0");
    if (b < 0) return 0;
    if (s.g >= 1 && b <= s.g - 1) return (a + 1) * (b + 1);
    if (s.g >= 1 && b <= 2 * s.g - 1) return (a + 1) * s.g;
    return (a + 1) * (b + 1 - s.g);  // b >= 2g; covers all b >= 0 when g = 0
}

H0Bounds h0_bounds(const Int& a, const Int& b, const RuledSurface& s) {
    if (a < 0) return {0, 0, Int(0)};  // not effective
    Int lo = b + 1 - s.g;              // h^0 O_C(b) >= chi O_C(b)
    if (lo < 0) lo = 0;
    Int hi = h0_upper(a, b, s);
    std::optional<Int> exact;
    if (s.g == 0)
        exact = h0_exact_g0(a, b, s.e);
    else if (lo == hi)
        exact = lo;
    return {lo, hi, exact};
}

Int h0_exact_g0(const Int& a, const Int& b, int e) {
    if (a < 0) throw PreconditionError("h0_exact_g0 requires a >= 0");
    Int total = 0;
    for (Int i = 0; i <= a; ++i) {
        Int t = b - i * e + 1;
        if (t > 0) total += t;
    }
    return total;
}

bool generic_z_vanishes(const Int& zlen, const Int& h0) {
    return zlen >= h0;
}

} // namespace ruled
