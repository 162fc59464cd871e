#pragma once

// Tiling-window bookkeeping and the discrepancy lower-bound main terms.
//
// For minimum total degree delta, the window index r >= 2 satisfies
// (1 - 1/(r-1)) n <= delta <= (1 - 1/r) n; the smallest such r is used.
// Within it, A_r = (r-1) delta - (r-2) n tiles of size r and
// Abar_r = (r-1) n - r delta tiles of size r-1 tile all n vertices:
// r A_r + (r-1) Abar_r = n and A_r + Abar_r = n - delta.
//
// The tiling main term is g(delta, n) = A_r N(r) + Abar_r N(r-1), equal by
// substitution to ((r-1) N(r) - r N(r-1)) delta - ((r-2) N(r) - (r-1) N(r-1)) n.
// The guaranteed family value is f(delta, n) = 3 delta - n when
// delta <= (2/3 + 4 alpha / 3) n (near-threshold regime), else g(delta, n).
// All arithmetic is exact (integers and small rationals); no floating point.

#include <cstdint>
#include <optional>
#include <string>

#include "sqdisc/constants.hpp"
#include "sqdisc/oriented_graph.hpp"

namespace sqdisc {

// Minimal exact rational: normalized sign/gcd, cross-multiplied comparisons.
class Rational {
public:
    Rational() = default;
    Rational(long long num, long long den);
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design

    long long num() const { return num_; }
    long long den() const { return den_; }

    // Accepts "p/q", integers, and plain decimals ("0.05" -> 1/20).
    static Rational parse(const std::string& text);

    std::string str() const;

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator<(Rational a, Rational b);
    friend bool operator<=(Rational a, Rational b) { return a < b || a == b; }

private:
    long long num_ = 0;
    long long den_ = 1;
};

struct TilingProfile {
    int r = 0;
    long long a_r = 0;     // tiles of size r
    long long a_bar_r = 0; // tiles of size r-1
};

// Smallest valid window for (n, delta); 0 <= delta <= n-1, n >= 1.
TilingProfile tiling_profile(long long n, long long delta);

// A_r N(r) + Abar_r N(r-1) for the profile of (n, delta).  Table entries are
// required only for sizes with a nonzero tile count; both algebraic forms are
// evaluated and must agree.
long long g_bound(long long n, long long delta, const NTable& table);

// min{N(r) - r, N(r-1) - (r-1)}; requires both entries.
long long n_min_check(int r, const NTable& table);

enum class BoundRegime { near_threshold, general };

struct BoundProfile {
    BoundRegime regime = BoundRegime::near_threshold;
    TilingProfile profile;
    long long f_value = 0;
    std::optional<long long> g_value;  // absent when table entries are missing
    std::optional<long long> n_min;    // absent unless both window entries exist
};

// f(delta, n) for 0 < alpha < 1/4; requires delta >= ceil(2n/3).
BoundProfile f_bound(long long n, long long delta, Rational alpha, const NTable& table);

// Sparse-pair witness: (1/3 - alpha) n <= |A|, |B| <= n/3 and the number of
// ordered pairs (a, b), a != b, {a,b} an underlying edge, is < alpha |A| |B|.
bool verify_extremal_witness(const OrientedGraph& g, const VertexSetPair& pair, Rational alpha);

}  // namespace sqdisc
