// Pascal-triangle-mod-p analysis: Lucas binomials, maximal zero columns,
// spoiler sets, resolvable-spoiler column sets and the g-map that drives the
// prefactor exponents.

#pragma once

#include <map>
#include <optional>
#include <vector>

namespace gsa {

// C(u, v) mod p via Lucas' theorem: zero iff some base-p digit of v exceeds
// the corresponding digit of u, else the product of digit binomials mod p.
int binom_mod_p(unsigned long long u, unsigned long long v, int p);

// Maximal (rightmost) zero column t0 < r of the Sierpinski triangle S_p,
// i.e. the largest t < r with C(t+1, t), ..., C(ell, t) all zero mod p;
// nullopt when no such column exists. A column t qualifies exactly when
// t + p^z(t) > ell, where z(t) is the least digit position of t with digit
// < p-1 (the smallest row index dominating t in the Lucas sense is
// t + p^z(t)). Throws when r > ell or r < 1.
std::optional<int> max_zero_column(int p, int r, int ell);

// Spoilers of column nu: the rows t in (nu, t0] with C(t, nu) != 0 mod p.
std::vector<int> spoiler_set(int p, int nu, int t0, int ell);

// Zero columns with resolvable spoilers, the set R_0^(ell):
// empty when t0 does not exist, otherwise
// { t < r : sum_{l'=t0+1}^{ell} (C(l', t) mod p) = 0 }.
std::vector<int> resolvable_set(int p, int r, int ell);

struct SierpinskiContext {
    int p{0};
    int r{0};
    int ell{0};
    std::optional<int> t0;
    std::vector<int> r0;         // sorted
    std::map<int, int> g;        // nu -> g[nu], for nu in r0

    bool contains(int nu) const { return g.count(nu) != 0; }
    static SierpinskiContext analyze(int p, int r, int ell);
};

// g[nu] = max spoiler of nu when one exists, else nu itself.
// Throws when nu is not in ctx.r0.
int g_map(int nu, const SierpinskiContext& ctx);

}  // namespace gsa
