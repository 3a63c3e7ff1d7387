#pragma once

// The numerical lattice Num(X) = Z<C0> + Z<f> of a ruled surface X -> C,
// with the intersection form C0^2 = -e, C0.f = 1, f^2 = 0, the canonical
// class, the ampleness criterion, slopes and h^0 bookkeeping for line
// bundles.  Divisors on the base curve C are tracked by degree only.

#include <optional>

#include "ruled/numeric.hpp"

namespace ruled {

/// The pair (g, e): genus of the base curve and the normalization
/// invariant e = -deg(e-divisor).  We always assume e >= 0.
struct RuledSurface {
    int g = 0;
    int e = 0;

    RuledSurface(int g_, int e_) : g(g_), e(e_) {
        if (g < 0 || e < 0)
            throw PreconditionError("RuledSurface requires g >= 0 and e >= 0");
    }
};

/// A class x*C0 + y*f in Num(X).
struct NumClass {
    Int x;
    Int y;

    friend NumClass operator+(const NumClass& a, const NumClass& b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend NumClass operator-(const NumClass& a, const NumClass& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend NumClass operator-(const NumClass& a) { return {-a.x, -a.y}; }
    friend NumClass operator*(const Int& c, const NumClass& a) {
        return {c * a.x, c * a.y};
    }
    friend bool operator==(const NumClass& a, const NumClass& b) {
        return a.x == b.x && a.y == b.y;
    }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline NumClass section_class() { return {1, 0}; }  // C0
inline NumClass fiber_class() { return {0, 1}; }    // f

/// Intersection pairing on Num(X).
Int intersect(const NumClass& u, const NumClass& v, const RuledSurface& s);

/// K_X = -2*C0 + (2g-2-e)*f.
NumClass canonical_class(const RuledSurface& s);

/// a*C0 + b*f is ample iff a > 0 and b > a*e.
bool is_ample(const Rat& a, const Rat& b, const RuledSurface& s);
bool is_ample(const NumClass& h, const RuledSurface& s);

/// An ample class, stored as the primitive integer point on its ray.
/// All downstream predicates depend only on the ray, so the canonical
/// form makes equality well defined.
class Polarization {
public:
    Polarization(const Rat& alpha, const Rat& beta, const RuledSurface& s);

    const Int& alpha() const { return alpha_; }
    const Int& beta() const { return beta_; }
    NumClass num_class() const { return {alpha_, beta_}; }
    Rat slope() const { return Rat(beta_, alpha_); }

    friend bool operator==(const Polarization& a, const Polarization& b) {
        return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }
    std::string str() const {
        return "(" + alpha_.str() + "," + beta_.str() + ")";
    }

private:
    Int alpha_;
    Int beta_;
};

/// mu_H(F) = c1(F).H / rank(F).
Rat slope_mu(const NumClass& c1, const Int& rank, const Polarization& h,
             const RuledSurface& s);

/// One-directional test: an effective class has both coefficients >= 0.
enum class Effectivity { Violated, Possible };
Effectivity effective_necessary(const NumClass& d);

/// Upper bound for h^0(X, a*C0 + b*f), a >= 0, by degree bounds on C.
Int h0_upper(const Int& a, const Int& b, const RuledSurface& s);

struct H0Bounds {
    Int lo;
    Int hi;
    std::optional<Int> exact;
};

/// Sandwich for h^0(X, a*C0 + b*f); exact for a < 0 (zero) and for g = 0
/// (split-bundle monomial count).
H0Bounds h0_bounds(const Int& a, const Int& b, const RuledSurface& s);

/// g = 0 oracle: the symmetric power splits, so h^0 is a monomial count
/// sum_{i=0..a} max(0, b - i*e + 1).
Int h0_exact_g0(const Int& a, const Int& b, int e);

/// A generic 0-cycle Z with |Z| >= h^0 O(D) kills all sections of I_Z(D).
bool generic_z_vanishes(const Int& zlen, const Int& h0);

} // namespace ruled
