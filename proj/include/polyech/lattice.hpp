#pragma once
// Exact planar lattice geometry. No floating point anywhere.

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyech {

using i64 = std::int64_t;
using i128 = __int128;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Vec {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const Vec&, const Vec&) = default;
    friend auto operator<=>(const Vec&, const Vec&) = default;
};

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 narrow(i128 v);

inline Vec operator+(Vec a, Vec b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
inline Vec operator-(Vec a, Vec b) { return {checked_add(a.x, -b.x), checked_add(a.y, -b.y)}; }
inline Vec operator-(Vec a) { return {-a.x, -a.y}; }
inline Vec operator*(i64 k, Vec a) { return {checked_mul(k, a.x), checked_mul(k, a.y)}; }

// Promoted to 128 bits so that signs are exact for any 64-bit input.
inline i128 cross(Vec a, Vec b) { return (i128)a.x * b.y - (i128)a.y * b.x; }
inline i128 dot(Vec a, Vec b) { return (i128)a.x * b.x + (i128)a.y * b.y; }
inline int sign(i128 v) { return (v > 0) - (v < 0); }

std::ostream& operator<<(std::ostream& os, Vec v);

// A primitive nonzero lattice vector; stands for the angle it points at.
using Direction = Vec;

std::pair<Direction, i64> primitive_of(Vec v);
bool is_primitive(Vec v);

// 0 for angular position in [0,pi), 1 for [pi,2pi).
inline int half_of(Direction d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; }

// Strict order of directions by angular position in [0,2pi).
inline bool dir_less(Direction a, Direction b)
{
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

struct ExtendedAngle {
    i64 lap = 0;
    Direction dir{1, 0};
    friend bool operator==(const ExtendedAngle&, const ExtendedAngle&) = default;
};

// The cut immediately counterclockwise of (lap, dir).
struct GenericAngle {
    i64 lap = 0;
    Direction dir{1, 0};
    friend bool operator==(const GenericAngle&, const GenericAngle&) = default;
};

// Common comparison key: eps = 1 marks the cut just after, eps = -1 the cut
// just before (used only for the start of a fundamental domain).
struct AngleKey {
    i64 lap = 0;
    Direction dir{1, 0};
    int eps = 0;

    AngleKey() = default;
    AngleKey(i64 l, Direction d, int e) : lap(l), dir(d), eps(e) {}
    AngleKey(const ExtendedAngle& a) : lap(a.lap), dir(a.dir), eps(0) {}
    AngleKey(const GenericAngle& a) : lap(a.lap), dir(a.dir), eps(1) {}

    friend bool operator==(const AngleKey&, const AngleKey&) = default;
};

inline bool key_less(const AngleKey& a, const AngleKey& b)
{
    if (a.lap != b.lap) return a.lap < b.lap;
    if (a.dir != b.dir) return dir_less(a.dir, b.dir);
    return a.eps < b.eps;
}

inline bool angle_less(const AngleKey& a, const AngleKey& b) { return key_less(a, b); }

inline bool operator<(const ExtendedAngle& a, const ExtendedAngle& b) { return key_less(a, b); }

// theta + pi.
AngleKey plus_pi(const AngleKey& a);
// theta + 2 pi k.
inline AngleKey plus_laps(AngleKey a, i64 k) { a.lap += k; return a; }
// Smallest angle with direction d that is strictly greater than a.
ExtendedAngle lift_after(Direction d, const AngleKey& a);
// Turning from a to b compared with pi: -1, 0, +1.  Requires a < b.
int compare_gap_with_pi(const AngleKey& a, const AngleKey& b);

std::ostream& operator<<(std::ostream& os, const ExtendedAngle& a);
std::ostream& operator<<(std::ostream& os, const GenericAngle& a);

std::vector<Vec> lattice_points_in_triangle(Vec a, Vec b, Vec c);

// Counterclockwise boundary of conv(points) from `from` to `to`, keeping
// boundary lattice points of the input that lie on hull edges.
std::vector<Vec> hull_chain(const std::vector<Vec>& points, Vec from, Vec to);

// Strict order on Z^2 seen from the generic angle `cut`.
bool theta_order_less(Vec p, Vec q, const GenericAngle& cut);

// Floor and ceiling of a/b for b != 0.
i64 floor_div(i64 a, i64 b);
i64 ceil_div(i64 a, i64 b);

struct VecHash {
    std::size_t operator()(const Vec& v) const noexcept
    {
        return std::hash<i64>()(v.x) * 1000003u ^ std::hash<i64>()(v.y);
    }
};

}  // namespace polyech
