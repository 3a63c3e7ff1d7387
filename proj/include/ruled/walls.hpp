#pragma once

// Wall-and-chamber structure of the ample cone for rank-2 Chern data
// (c1, c2): enumeration of the finitely many wall classes, chamber
// location for a polarization, the zeta_b family, and the extension
// strata exchanged when crossing a wall.

#include <variant>
#include <vector>

#include "ruled/lattice.hpp"

namespace ruled {

/// A wall-defining class zeta, stored with x > 0, y < 0 (the unique
/// representative of the pair {zeta, -zeta} whose ray meets the ample
/// cone with that sign).  slope is the ray beta/alpha where zeta.H = 0.
struct Wall {
    NumClass zeta;
    Int zsq;    // zeta^2
    Rat slope;  // e - y/x, always > e
    Int zlen;   // |Z| = c2 + (zeta^2 - c1^2)/4

    friend bool operator==(const Wall& a, const Wall& b) {
        return a.zeta == b.zeta;
    }
};

/// zeta defines a wall of type (c1, c2) iff zeta = c1 mod 2 componentwise,
/// -(4c2 - c1^2) <= zeta^2 < 0, and the hyperplane zeta.H = 0 meets the
/// ample cone (coefficients of opposite sign).
bool is_wall_class(const NumClass& zeta, const NumClass& c1, const Int& c2,
                   const RuledSurface& s);

/// All walls of type (c1, c2), keyed by the class zeta (not the ray),
/// sorted by slope.  `visited`, when given, receives the number of
/// candidates scanned (finiteness counter).
std::vector<Wall> enumerate_walls(const NumClass& c1, const Int& c2,
                                  const RuledSurface& s,
                                  unsigned long long* visited = nullptr);

/// Open slope interval between adjacent walls; lo defaults to the cone
/// boundary e and hi to +infinity (nullopt).
struct Chamber {
    Rat lo;
    std::optional<Rat> hi;
};
struct OnWall {
    std::vector<Wall> walls;  // every wall whose slope equals slope(H)
};
using ChamberLocation = std::variant<Chamber, OnWall>;

ChamberLocation chamber_of(const Polarization& h, const std::vector<Wall>& walls,
                           const RuledSurface& s);

/// Walls with slope strictly between slope(h1) and slope(h2), ordered
/// along the path from h1 to h2.  Neither input may lie on a wall.
std::vector<Wall> walls_between(const Polarization& h1, const Polarization& h2,
                                const std::vector<Wall>& walls);

/// The family zeta_b = (2b-m)f - C0 with b = k-1+g, 0 < b < c2, of type
/// (C0 + m*f, c2).  The stored Wall is the normalized representative
/// (1, m-2b); `zeta_raw` keeps the defining orientation.  h_wall is an
/// ample divisor with zeta_b . h_wall = 0.
struct ZetaB {
    Wall wall;
    NumClass zeta_raw;   // (-1, 2b-m)
    Polarization h_wall; // (1, 2b+e-m)
    Int b;
};
ZetaB zeta_b(int m, const Int& k, const Int& c2, const RuledSurface& s);

/// The extension stratum data for one orientation of a wall:
/// 0 -> O(D) -> E -> I_Z(c1 - D) -> 0 with D = (zeta + c1)/2.
struct ExtensionData {
    NumClass sub;         // D
    NumClass quot_twist;  // c1 - D
    Int zlen;
    Int h0_sub_lower;     // lower bound for h^0 of every member
};
ExtensionData extension_data(const Wall& w, int orientation, const NumClass& c1,
                             const Int& c2, const RuledSurface& s);

/// Both orientations of a wall plus a symbolic rendering of the set
/// identity describing which strata are removed/added when the
/// polarization crosses w downward.
struct CrossingReport {
    Wall wall;
    ExtensionData below;  // stratum added below the wall (zeta = +w.zeta)
    ExtensionData above;  // stratum removed from above (zeta = -w.zeta)
    std::string identity;
    std::vector<std::string> notes;
};
CrossingReport crossing_report(const Wall& w, const NumClass& c1, const Int& c2,
                               const RuledSurface& s);

} // namespace ruled
