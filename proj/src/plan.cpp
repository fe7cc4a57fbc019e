#include "gsa/plan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gsa {

GsaParams derive_params(const GrsCode& code, int r, int ell) {
    if (r < 1 || r > ell) throw std::invalid_argument("need 1 <= r <= ell");
    const long long n = code.n, k = code.k;
    GsaParams out;
    out.r = r;
    out.ell = ell;
    // eps0 = n(2l-r+1)/(2(l+1)) - l(k-1)/(2r) over the common denominator
    // 2r(l+1).
    long long num = n * (2 * ell - r + 1) * r - static_cast<long long>(ell) * (k - 1) * (ell + 1);
    long long den = 2LL * r * (ell + 1);
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    out.eps0_num = num;
    out.eps0_den = den;
    if (num <= 0)
        throw std::invalid_argument("parameters cannot correct any error (eps0 <= 0)");
    out.eps_max = static_cast<int>((num - 1) / den);  // ceil(num/den) - 1 for num > 0
    out.dQ.resize(ell + 1);
    for (int nu = 0; nu <= ell; ++nu)
        out.dQ[nu] = static_cast<int>(r * (n - out.eps_max) - static_cast<long long>(nu) * (k - 1) - 1);
    return out;
}

std::string to_string(PrefactorMode m) {
    switch (m) {
        case PrefactorMode::None: return "none";
        case PrefactorMode::Reencoding: return "reencoding";
        case PrefactorMode::Sierpinski: return "sierpinski";
        case PrefactorMode::Combined: return "combined";
    }
    return "?";
}

PrefactorMode mode_from_string(const std::string& s) {
    if (s == "none") return PrefactorMode::None;
    if (s == "reencoding") return PrefactorMode::Reencoding;
    if (s == "sierpinski") return PrefactorMode::Sierpinski;
    if (s == "combined") return PrefactorMode::Combined;
    throw std::invalid_argument("unknown prefactor mode: " + s);
}

PlanShape plan_shape(int n, int k, const GsaParams& params, PrefactorMode mode,
                     const SierpinskiContext& sier) {
    const int r = params.r, ell = params.ell;
    PlanShape shape;
    shape.mode = mode;
    shape.dG = params.dQ;

    auto add_row = [&](int nu, int factor_deg) {
        if (params.dQ[nu] < 0) return;  // row absent from the system
        shape.f_set.push_back(nu);
        shape.factor_degree[nu] = factor_deg;
        shape.dG[nu] = params.dQ[nu] - factor_deg;
    };

    switch (mode) {
        case PrefactorMode::None:
            shape.effective = PrefactorMode::None;
            break;
        case PrefactorMode::Reencoding:
            for (int nu = 0; nu < r; ++nu) add_row(nu, k * (r - nu));
            shape.skipped_points = k;
            shape.effective =
                shape.f_set.empty() ? PrefactorMode::None : PrefactorMode::Reencoding;
            break;
        case PrefactorMode::Sierpinski:
            for (int nu : sier.r0) add_row(nu, n * (r - sier.g.at(nu)));
            shape.effective =
                shape.f_set.empty() ? PrefactorMode::None : PrefactorMode::Sierpinski;
            break;
        case PrefactorMode::Combined:
            for (int nu = 0; nu < r; ++nu) {
                if (sier.contains(nu))
                    add_row(nu, k * (r - nu) + (n - k) * (r - sier.g.at(nu)));
                else
                    add_row(nu, k * (r - nu));
            }
            shape.skipped_points = k;
            if (shape.f_set.empty())
                shape.effective = PrefactorMode::None;
            else
                shape.effective = sier.r0.empty() ? PrefactorMode::Reencoding
                                                  : PrefactorMode::Combined;
            break;
    }
    (void)ell;
    return shape;
}

long long unknown_count(const PlanShape& shape) {
    long long total = 0;
    for (int d : shape.dG) total += std::max(d + 1, 0);
    return total;
}

long long unknown_count(const PrefactorPlan& plan) {
    long long total = 0;
    for (int d : plan.dG) total += std::max(d + 1, 0);
    return total;
}

long long equation_count(int n, const GsaParams& params, int skipped_points) {
    return static_cast<long long>(n - skipped_points) * params.r * (params.r + 1) / 2;
}

std::vector<int> default_reencoding_set(const GrsCode& code) {
    std::vector<int> J(code.k);
    for (int i = 0; i < code.k; ++i) J[i] = code.n - code.k + i;
    return J;
}

namespace {

std::vector<int> validated_J(const GrsCode& code, const std::optional<std::vector<int>>& J) {
    if (!J) throw std::invalid_argument("this prefactor mode requires a re-encoding set J");
    if (static_cast<int>(J->size()) != code.k)
        throw std::invalid_argument("re-encoding set must have size k");
    std::set<int> seen;
    for (int i : *J) {
        if (i < 0 || i >= code.n) throw std::invalid_argument("re-encoding index out of range");
        if (!seen.insert(i).second) throw std::invalid_argument("duplicate re-encoding index");
    }
    return *J;
}

}  // namespace

PrefactorPlan build_plan(const GrsCode& code, const GsaParams& params, PrefactorMode mode,
                         const std::optional<std::vector<int>>& J) {
    const int r = params.r;
    const SierpinskiContext sier =
        SierpinskiContext::analyze(code.field->p(), params.r, params.ell);
    const PlanShape shape = plan_shape(code.n, code.k, params, mode, sier);

    PrefactorPlan plan;
    plan.mode = shape.mode;
    plan.effective = shape.effective;
    plan.f_set = shape.f_set;
    plan.dG = shape.dG;
    plan.sier = sier;

    const bool reencoding_based =
        (mode == PrefactorMode::Reencoding || mode == PrefactorMode::Combined);
    if (reencoding_based) {
        plan.J = validated_J(code, J);
        plan.skip_rows = plan.J;
        std::sort(plan.skip_rows.begin(), plan.skip_rows.end());
    }

    // Power ladders over the abscissas.
    std::vector<Poly> pj_pow, pi_pow, pij_pow;  // P_J^e, P_I^e, P_{I\J}^e
    auto ladder = [&](const Poly& base, int max_e) {
        std::vector<Poly> pows;
        pows.push_back(Poly::constant(code.field->one()));
        for (int e = 1; e <= max_e; ++e) pows.push_back(pows.back() * base);
        return pows;
    };
    if (reencoding_based && !plan.f_set.empty())
        pj_pow = ladder(locator_product(plan.J, code.abscissas), r);
    if (mode == PrefactorMode::Sierpinski && !plan.f_set.empty()) {
        std::vector<int> all(code.n);
        std::iota(all.begin(), all.end(), 0);
        int max_e = 0;
        for (int nu : plan.f_set) max_e = std::max(max_e, r - sier.g.at(nu));
        pi_pow = ladder(locator_product(all, code.abscissas), max_e);
    }
    if (mode == PrefactorMode::Combined && !sier.r0.empty() && !plan.f_set.empty()) {
        std::vector<int> rest;
        std::set<int> js(plan.J.begin(), plan.J.end());
        for (int i = 0; i < code.n; ++i)
            if (!js.count(i)) rest.push_back(i);
        int max_e = 0;
        for (int nu : plan.f_set)
            if (sier.contains(nu)) max_e = std::max(max_e, r - sier.g.at(nu));
        pij_pow = ladder(locator_product(rest, code.abscissas), max_e);
    }

    for (int nu : plan.f_set) {
        Poly f = Poly::constant(code.field->one());
        switch (mode) {
            case PrefactorMode::Reencoding:
                f = pj_pow[r - nu];
                break;
            case PrefactorMode::Sierpinski:
                f = pi_pow[r - sier.g.at(nu)];
                break;
            case PrefactorMode::Combined:
                f = sier.contains(nu) ? pj_pow[r - nu] * pij_pow[r - sier.g.at(nu)]
                                      : pj_pow[r - nu];
                break;
            case PrefactorMode::None:
                break;
        }
        if (f.coeff(0).is_zero())
            throw std::invalid_argument(
                "prefactor has zero constant term (an abscissa is zero); "
                "prefactor modes need nonzero abscissas");
        if (f.degree() != shape.factor_degree.at(nu))
            throw std::logic_error("prefactor degree mismatch");
        plan.factors.emplace(nu, std::move(f));
    }
    return plan;
}

}  // namespace gsa
