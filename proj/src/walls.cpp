#include "ruled/walls.hpp"

#include <algorithm>

namespace ruled {

namespace {

// Builds the Wall record and asserts the |Z| integrality forced by the
// parity condition (zeta = c1 mod 2 implies zeta^2 = c1^2 mod 4).
Wall make_wall(const NumClass& zeta, const NumClass& c1, const Int& c2,
               const RuledSurface& s) {
    Wall w;
    w.zeta = zeta;
    w.zsq = intersect(zeta, zeta, s);
    w.slope = Rat(s.e * zeta.x - zeta.y, zeta.x);
    Int num = w.zsq - intersect(c1, c1, s);
    if (num % 4 != 0)
        throw std::logic_error("wall |Z| integrality violated");
    w.zlen = c2 + num / 4;
    if (w.zlen < 0)
        throw std::logic_error("wall |Z| must be nonnegative");
    return w;
}

bool same_parity(const Int& a, const Int& b) { return (a - b) % 2 == 0; }

} // namespace

bool is_wall_class(const NumClass& zeta, const NumClass& c1, const Int& c2,
                   const RuledSurface& s) {
    if (!same_parity(zeta.x, c1.x) || !same_parity(zeta.y, c1.y)) return false;
    if (zeta.x * zeta.y >= 0) return false;  // ray must meet the ample cone
    Int zsq = intersect(zeta, zeta, s);
    Int lower = -(4 * c2 - intersect(c1, c1, s));
    return zsq >= lower && zsq < 0;
}

std::vector<Wall> enumerate_walls(const NumClass& c1, const Int& c2,
                                  const RuledSurface& s,
                                  unsigned long long* visited) {
    std::vector<Wall> out;
    unsigned long long count = 0;
    Int n = 4 * c2 - intersect(c1, c1, s);
    if (n > 0) {
        // For the representative with x > 0, y < 0 we have
        // zeta^2 = -(x^2 e + 2x|y|), so the window gives the search box
        // x^2 e + 2x|y| <= n.
        Int x0 = (c1.x % 2 != 0) ? 1 : 2;
        Int y0 = (c1.y % 2 != 0) ? 1 : 2;
        for (Int x = x0; x * x * s.e + 2 * x * y0 <= n; x += 2) {
            for (Int ay = y0; x * x * s.e + 2 * x * ay <= n; ay += 2) {
                ++count;
                out.push_back(make_wall({x, -ay}, c1, c2, s));
            }
            ++count;
        }
    }
    std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
        if (a.slope != b.slope) return a.slope < b.slope;
        if (a.zeta.x != b.zeta.x) return a.zeta.x < b.zeta.x;
        return a.zeta.y < b.zeta.y;
    });
    if (visited) *visited = count;
    return out;
}

ChamberLocation chamber_of(const Polarization& h, const std::vector<Wall>& walls,
                           const RuledSurface& s) {
    Rat sh = h.slope();
    OnWall hit;
    for (const Wall& w : walls)
        if (w.slope == sh) hit.walls.push_back(w);
    if (!hit.walls.empty()) return hit;

    Chamber c{Rat(s.e), std::nullopt};
    for (const Wall& w : walls) {
        if (w.slope < sh) {
            if (w.slope > c.lo) c.lo = w.slope;
        } else {
            if (!c.hi || w.slope < *c.hi) c.hi = w.slope;
        }
    }
    return c;
}

std::vector<Wall> walls_between(const Polarization& h1, const Polarization& h2,
                                const std::vector<Wall>& walls) {
    Rat s1 = h1.slope(), s2 = h2.slope();
    for (const Wall& w : walls)
        if (w.slope == s1 || w.slope == s2)
            throw PreconditionError(
                "polarization lies on a wall; use chamber_of");
    Rat lo = std::min(s1, s2), hi = std::max(s1, s2);
    std::vector<Wall> out;
    for (const Wall& w : walls)
        if (lo < w.slope && w.slope < hi) out.push_back(w);
    std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
        return a.slope < b.slope;
    });
    if (s1 > s2) std::reverse(out.begin(), out.end());
    return out;
}

ZetaB zeta_b(int m, const Int& k, const Int& c2, const RuledSurface& s) {
    if (m != 0 && m != 1) throw PreconditionError("zeta_b requires m in {0,1}");
    Int b = k - 1 + s.g;
    if (b <= 0)
        throw OutOfRangeError("zeta_b: bound 0 < b = k-1+g violated");
    if (b >= c2)
        throw OutOfRangeError("zeta_b: bound b = k-1+g < c2 violated");

    NumClass c1{1, Int(m)};
    NumClass raw{-1, 2 * b - m};
    ZetaB z{make_wall(-raw, c1, c2, s), raw,
            Polarization(1, Rat(2 * b + s.e - m), s), b};
    // Proof identities; failure here is a programming error.
    if (z.wall.zsq != -4 * b - s.e + 2 * m)
        throw std::logic_error("zeta_b: square identity failed");
    if (z.wall.zlen != c2 - b)
        throw std::logic_error("zeta_b: |Z| identity failed");
    if (intersect(raw, z.h_wall.num_class(), s) != 0)
        throw std::logic_error("zeta_b: h_wall is not on the wall");
    if (!is_wall_class(z.wall.zeta, c1, c2, s))
        throw std::logic_error("zeta_b: not a wall class");
    return z;
}

ExtensionData extension_data(const Wall& w, int orientation, const NumClass& c1,
                             const Int& c2, const RuledSurface& s) {
    NumClass zeta = orientation >= 0 ? w.zeta : -w.zeta;
    if (!is_wall_class(zeta, c1, c2, s))
        throw PreconditionError("extension_data: not a wall class for (c1,c2)");
    NumClass sum = zeta + c1;
    if (sum.x % 2 != 0 || sum.y % 2 != 0)
        throw std::logic_error("extension_data: zeta + c1 not divisible by 2");
    ExtensionData d;
    d.sub = {sum.x / 2, sum.y / 2};
    d.quot_twist = c1 - d.sub;
    d.zlen = w.zlen;
    H0Bounds hb = h0_bounds(d.sub.x, d.sub.y, s);
    d.h0_sub_lower = hb.exact.value_or(hb.lo);
    return d;
}

CrossingReport crossing_report(const Wall& w, const NumClass& c1, const Int& c2,
                               const RuledSurface& s) {
    CrossingReport r;
    r.wall = w;
    r.below = extension_data(w, +1, c1, c2, s);
    r.above = extension_data(w, -1, c1, c2, s);
    r.identity = "W^k(C_below) = (W^k(C_above) \\ E^k(" + (-w.zeta).str() +
                 ")) u E^k(" + w.zeta.str() + ")";
    auto describe = [&](const char* tag, const ExtensionData& d) {
        std::string line = std::string(tag) + " stratum: 0 -> O(D) -> E -> "
            "I_Z(c1-D) -> 0 with D=" + d.sub.str() + ", c1-D=" +
            d.quot_twist.str() + ", |Z|=" + d.zlen.str() + ", h0(E) >= " +
            d.h0_sub_lower.str();
        r.notes.push_back(std::move(line));
    };
    describe("added (below)", r.below);
    describe("removed (above)", r.above);
    if (w.zlen == 0)
        r.notes.push_back("degenerate cycle: |Z| = 0, extensions of the "
                          "empty cycle");
    return r;
}

} // namespace ruled
