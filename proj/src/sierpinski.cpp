#include "gsa/sierpinski.hpp"

#include <stdexcept>

namespace gsa {

namespace {

long long pow_mod(long long b, long long e, long long mod) {
    long long r = 1;
    b %= mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return r;
}

// C(du, dv) mod p for digits du, dv < p, dv <= du.
int digit_binom_mod_p(int du, int dv, int p) {
    long long num = 1, den = 1;
    for (int i = 1; i <= dv; ++i) {
        num = num * ((du - dv + i) % p) % p;
        den = den * i % p;
    }
    return static_cast<int>(num * pow_mod(den, p - 2, p) % p);
}

}  // namespace

int binom_mod_p(unsigned long long u, unsigned long long v, int p) {
    if (p < 2) throw std::invalid_argument("characteristic must be >= 2");
    int result = 1;
    while (v > 0 || u > 0) {
        const int du = static_cast<int>(u % p);
        const int dv = static_cast<int>(v % p);
        if (dv > du) return 0;
        result = result * digit_binom_mod_p(du, dv, p) % p;
        u /= p;
        v /= p;
    }
    return result;
}

namespace {

void check_params(int p, int r, int ell) {
    if (p < 2) throw std::invalid_argument("characteristic must be >= 2");
    if (r < 1 || r > ell) throw std::invalid_argument("need 1 <= r <= ell");
}

// Least digit position of t with base-p digit < p-1 (0 for t = 0).
int first_incrementable_digit(int t, int p) {
    int z = 0;
    while (t % p == p - 1) {
        t /= p;
        ++z;
    }
    return z;
}

}  // namespace

std::optional<int> max_zero_column(int p, int r, int ell) {
    check_params(p, r, ell);
    if (ell < p) return std::nullopt;
    // No zero column when some a*p^j - 1 (1 <= a < p) lies in [r, ell]:
    // such a row dominates every t < r.
    for (long long pj = 1; pj <= ell + 1; pj *= p)
        for (int a = 1; a < p; ++a) {
            const long long v = a * pj - 1;
            if (v >= r && v <= ell) return std::nullopt;
        }
    // Column t is zero for ell iff its smallest dominating row t + p^z(t)
    // lies beyond ell.
    for (int t = r - 1; t >= 0; --t) {
        long long pz = 1;
        for (int z = first_incrementable_digit(t, p); z > 0; --z) pz *= p;
        if (t + pz > ell) return t;
    }
    return std::nullopt;
}

std::vector<int> spoiler_set(int p, int nu, int t0, int ell) {
    if (nu > t0 || t0 > ell) throw std::invalid_argument("need nu <= t0 <= ell");
    std::vector<int> out;
    for (int t = nu + 1; t <= t0; ++t)
        if (binom_mod_p(t, nu, p) != 0) out.push_back(t);
    return out;
}

std::vector<int> resolvable_set(int p, int r, int ell) {
    check_params(p, r, ell);
    const auto t0 = max_zero_column(p, r, ell);
    std::vector<int> out;
    if (!t0) return out;
    for (int t = 0; t < r; ++t) {
        int sum = 0;
        for (int lp = *t0 + 1; lp <= ell; ++lp) sum += binom_mod_p(lp, t, p);
        if (sum == 0) out.push_back(t);
    }
    return out;
}

SierpinskiContext SierpinskiContext::analyze(int p, int r, int ell) {
    SierpinskiContext ctx;
    ctx.p = p;
    ctx.r = r;
    ctx.ell = ell;
    ctx.t0 = max_zero_column(p, r, ell);
    ctx.r0 = resolvable_set(p, r, ell);
    for (int nu : ctx.r0) {
        const auto sp = spoiler_set(p, nu, *ctx.t0, ell);
        ctx.g[nu] = sp.empty() ? nu : sp.back();
    }
    return ctx;
}

int g_map(int nu, const SierpinskiContext& ctx) {
    const auto it = ctx.g.find(nu);
    if (it == ctx.g.end())
        throw std::invalid_argument("g-map is defined only on the resolvable set");
    return it->second;
}

}  // namespace gsa
