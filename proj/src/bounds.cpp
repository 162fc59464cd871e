#include "sqdisc/bounds.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace sqdisc {

namespace {

long long checked_mul(long long a, long long b) {
    const __int128 p = __int128(a) * b;
    if (p > __int128(INT64_MAX) || p < __int128(INT64_MIN)) throw std::overflow_error("rational overflow");
    return (long long)(p);
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::size_t p1 = 0, p2 = 0;
            const long long num = std::stoll(text.substr(0, slash), &p1);
            const long long den = std::stoll(text.substr(slash + 1), &p2);
            if (p1 != slash || p2 != text.size() - slash - 1) throw std::invalid_argument("");
            return {num, den};
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) {
            std::size_t p = 0;
            const long long v = std::stoll(text, &p);
            if (p != text.size()) throw std::invalid_argument("");
            return {v, 1};
        }
        const std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
        if (tail.empty() || tail.size() > 15) throw std::invalid_argument("");
        std::size_t p1 = 0, p2 = 0;
        const long long whole = head.empty() || head == "-" ? 0 : std::stoll(head, &p1);
        const long long frac = std::stoll(tail, &p2);
        if ((!head.empty() && head != "-" && p1 != head.size()) || p2 != tail.size() || frac < 0)
            throw std::invalid_argument("");
        long long den = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) den = checked_mul(den, 10);
        const bool neg = !head.empty() && head[0] == '-';
        const long long num = checked_mul(whole < 0 ? -whole : whole, den) + frac;
        return {neg || whole < 0 ? -num : num, den};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + text + "'");
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational a, Rational b) {
    return {checked_mul(a.num_, b.den_) + checked_mul(b.num_, a.den_), checked_mul(a.den_, b.den_)};
}

Rational operator-(Rational a, Rational b) {
    return {checked_mul(a.num_, b.den_) - checked_mul(b.num_, a.den_), checked_mul(a.den_, b.den_)};
}

Rational operator*(Rational a, Rational b) {
    return {checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_)};
}

bool operator<(Rational a, Rational b) {
    return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
}

TilingProfile tiling_profile(long long n, long long delta) {
    if (n < 1) throw std::invalid_argument("tiling profile needs n >= 1");
    if (delta < 0 || delta >= n) throw std::invalid_argument("delta must lie in [0, n-1]");
    // delta <= (1 - 1/r) n  <=>  r (n - delta) >= n; the smallest such r,
    // clamped to r >= 2, also satisfies the window lower bound.
    const long long gap = n - delta;
    long long r = (n + gap - 1) / gap;
    if (r < 2) r = 2;
    TilingProfile p;
    p.r = int(r);
    p.a_r = (r - 1) * delta - (r - 2) * n;
    p.a_bar_r = (r - 1) * n - r * delta;
    if (p.a_r < 0 || p.a_bar_r < 0) throw std::logic_error("window bounds violated");
    if (r * p.a_r + (r - 1) * p.a_bar_r != n) throw std::logic_error("tile counts do not cover n");
    if (p.a_r + p.a_bar_r != gap) throw std::logic_error("tile count must equal n - delta");
    return p;
}

namespace {

long long g_bound_for(long long n, long long delta, const TilingProfile& p, const NTable& table) {
    const long long r = p.r;
    if (p.a_r > 0 && !table.contains(p.r)) throw std::out_of_range("no table entry for size-r tiles");
    if (p.a_bar_r > 0 && !table.contains(p.r - 1)) throw std::out_of_range("no table entry for size-(r-1) tiles");
    // zero-coefficient sizes may miss their entry; any placeholder keeps the
    // two algebraic forms identical, so use 0
    const long long nr = table.contains(p.r) ? table.at(p.r).n_value : 0;
    const long long nr1 = table.contains(p.r - 1) ? table.at(p.r - 1).n_value : 0;
    const long long direct = p.a_r * nr + p.a_bar_r * nr1;
    const long long expanded = ((r - 1) * nr - r * nr1) * delta - ((r - 2) * nr - (r - 1) * nr1) * n;
    if (direct != expanded) throw std::logic_error("tiling bound forms disagree");
    return direct;
}

}  // namespace

long long g_bound(long long n, long long delta, const NTable& table) {
    return g_bound_for(n, delta, tiling_profile(n, delta), table);
}

long long n_min_check(int r, const NTable& table) {
    if (!table.contains(r) || !table.contains(r - 1)) throw std::out_of_range("missing table entry");
    const long long a = table.at(r).n_value - r;
    const long long b = table.at(r - 1).n_value - (r - 1);
    return a < b ? a : b;
}

BoundProfile f_bound(long long n, long long delta, Rational alpha, const NTable& table) {
    if (n < 1) throw std::invalid_argument("f bound needs n >= 1");
    if (!(Rational(0) < alpha) || !(alpha < Rational(1, 4)))
        throw std::invalid_argument("alpha must lie in (0, 1/4)");
    if (3 * delta < 2 * n) throw std::invalid_argument("delta must be at least 2n/3");
    if (delta >= n) throw std::invalid_argument("delta must lie in [0, n-1]");

    BoundProfile out;
    out.profile = tiling_profile(n, delta);

    // near-threshold  <=>  delta <= (2/3 + 4 alpha / 3) n  <=>  3 q delta <= (2q + 4p) n
    const long long pq_num = alpha.num(), pq_den = alpha.den();
    const bool near = 3 * pq_den * delta <= (2 * pq_den + 4 * pq_num) * n;
    out.regime = near ? BoundRegime::near_threshold : BoundRegime::general;

    try {
        out.g_value = g_bound_for(n, delta, out.profile, table);
    } catch (const std::out_of_range&) {
        out.g_value = std::nullopt;
    }
    if (table.contains(out.profile.r) && table.contains(out.profile.r - 1))
        out.n_min = n_min_check(out.profile.r, table);

    if (near) {
        out.f_value = 3 * delta - n;
    } else {
        if (!out.g_value) throw std::out_of_range("missing table entry for the general regime");
        out.f_value = *out.g_value;
    }
    return out;
}

bool verify_extremal_witness(const OrientedGraph& g, const VertexSetPair& pair, Rational alpha) {
    const long long n = g.order();
    if (pair.a.empty() || pair.b.empty()) throw std::invalid_argument("witness sets must be non-empty");
    const std::set<int> a(pair.a.begin(), pair.a.end());
    const std::set<int> b(pair.b.begin(), pair.b.end());
    for (int v : a) (void)degrees(g, v);  // range check
    for (int v : b) (void)degrees(g, v);
    const long long sa = (long long)(a.size());
    const long long sb = (long long)(b.size());

    // (1/3 - alpha) n <= |A|, |B| <= n/3, exactly:
    // (q - 3p) n <= 3 q |A|  and  3 |A| <= n
    const long long p = alpha.num(), q = alpha.den();
    if ((q - 3 * p) * n > 3 * q * sa || 3 * sa > n) return false;
    if ((q - 3 * p) * n > 3 * q * sb || 3 * sb > n) return false;

    const UnderlyingGraph u = underlying(g);
    long long cross = 0;  // ordered pairs (x, y) in A x B, x != y, {x,y} an edge
    for (int x : a)
        for (int y : b)
            if (x != y && u.has_edge(x, y)) ++cross;
    // density: cross < alpha |A| |B|  <=>  q cross < p |A| |B|
    return q * cross < p * sa * sb;
}

}  // namespace sqdisc
