#include "gsa/listdec.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace gsa {

namespace {

// Largest power of x dividing every row; Q must be nonzero.
int common_x_valuation(const BivarPoly& q) {
    int val = -1;
    for (const Poly& row : q.rows) {
        if (row.is_zero()) continue;
        int v = 0;
        while (row.coeff(v).is_zero()) ++v;
        val = (val < 0) ? v : std::min(val, v);
        if (val == 0) break;
    }
    return std::max(val, 0);
}

BivarPoly shift_x_down(const BivarPoly& q, int v, const Field& f) {
    BivarPoly out;
    out.rows.reserve(q.rows.size());
    for (const Poly& row : q.rows) {
        if (row.is_zero()) {
            out.rows.emplace_back(f);
            continue;
        }
        std::vector<uint16_t> c(row.coeffs().begin() + v, row.coeffs().end());
        out.rows.emplace_back(f, std::move(c));
    }
    return out;
}

// Q(x, x*z + gamma): row t of the result is x^t * sum_{nu>=t} C(nu,t)
// gamma^{nu-t} Q_nu(x).
BivarPoly substitute_scaled_shift(const BivarPoly& q, FieldElement gamma, const Field& f) {
    const int dz = q.z_degree();
    BivarPoly out;
    out.rows.reserve(dz + 1);
    for (int t = 0; t <= dz; ++t) {
        Poly acc(f);
        for (int nu = t; nu <= dz; ++nu) {
            const int c = binom_mod_p(nu, t, f.p());
            if (!c) continue;
            const FieldElement w = FieldElement{static_cast<uint16_t>(c), &f} * pow(gamma, nu - t);
            if (!w.is_zero()) acc += q.rows[nu] * w;
        }
        out.rows.push_back(Poly::monomial(f, t, f.one()) * acc);
    }
    return out;
}

void rr_recurse(const BivarPoly& q, int depth, int k, std::vector<uint16_t>& prefix,
                std::vector<std::vector<uint16_t>>& candidates, const Field& f) {
    if (q.is_zero()) {
        // Every completion works; the all-zero tail suffices, the division
        // check at the end keeps only genuine roots.
        candidates.push_back(prefix);
        return;
    }
    const BivarPoly qq = shift_x_down(q, common_x_valuation(q), f);
    // Roots gamma of Q(0, z).
    std::vector<uint16_t> rz;
    for (const Poly& row : qq.rows) rz.push_back(row.coeff(0).value);
    Poly r0(f, std::move(rz));
    for (int v = 0; v < f.q(); ++v) {
        const FieldElement gamma{static_cast<uint16_t>(v), &f};
        if (!r0(gamma).is_zero()) continue;
        prefix.push_back(gamma.value);
        if (depth == k - 1) {
            candidates.push_back(prefix);
        } else {
            const BivarPoly next = substitute_scaled_shift(qq, gamma, f);
            rr_recurse(next, depth + 1, k, prefix, candidates, f);
        }
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Poly> z_roots(const BivarPoly& Q, int k) {
    if (Q.rows.empty() || Q.is_zero())
        throw std::invalid_argument("z_roots requires a nonzero polynomial");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const Field& f = Q.rows[0].field();

    std::vector<std::vector<uint16_t>> candidates;
    std::vector<uint16_t> prefix;
    rr_recurse(Q, 0, k, prefix, candidates, f);

    std::vector<Poly> out;
    for (auto& c : candidates) {
        c.resize(k, 0);
        Poly w(f, std::move(c));
        if (!bivar_rem_linear(Q, w).is_zero()) continue;
        if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
    }
    return out;
}

DecodeResult gsa_decode(const GrsCode& code, const GsaParams& params, const Vector& y,
                        PrefactorMode mode) {
    using clock = std::chrono::steady_clock;
    auto seconds_since = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    DecodeResult result;
    result.diag.requested = mode;
    const bool reencoding_based =
        (mode == PrefactorMode::Reencoding || mode == PrefactorMode::Combined);

    // For re-encoding modes the projection must live in the code the
    // factorization step sees, which evaluates on the abscissas; project
    // over the abscissa view (identical to the code itself when A == X).
    Vector y_work = y;
    Poly chat_message(*code.field);
    std::optional<std::vector<int>> J;
    if (reencoding_based) {
        J = default_reencoding_set(code);
        const auto proj = reencode_project(code.abscissa_view(), *J, y);
        y_work = proj.projected;
        chat_message = proj.message;
        result.diag.reencoding_set = *J;
    }

    const auto t_build = clock::now();
    const PrefactorPlan plan = build_plan(code, params, mode, J);
    const ReducedBuilder builder(code, params, plan);
    const InterpSystem sys = builder.build(y_work);
    result.diag.build_seconds = seconds_since(t_build);
    result.diag.effective = plan.effective;
    result.diag.unknowns = sys.matrix.cols();
    result.diag.rows = sys.matrix.rows();
    result.diag.unknowns_full =
        unknown_count(plan_shape(code.n, code.k, params, PrefactorMode::None, plan.sier));

    const auto t_solve = clock::now();
    const auto solution = nullspace_vector(sys);
    result.q = assemble_q(solution, sys);
    result.diag.solve_seconds = seconds_since(t_solve);

    const auto t_factor = clock::now();
    const auto roots = z_roots(result.q, code.k);
    result.diag.factor_seconds = seconds_since(t_factor);

    for (const Poly& w : roots) {
        const Poly w_orig = reencoding_based ? w - chat_message : w;
        Vector c(code.n);
        for (int i = 0; i < code.n; ++i)
            c[i] = code.multipliers[i] * w_orig(code.abscissas[i]);
        const int d = hamming_distance(y, c);
        if (d > params.eps_max) continue;  // candidates beyond the radius are discarded
        result.list.push_back({w_orig, std::move(c), d});
    }
    std::sort(result.list.begin(), result.list.end(), [](const ListEntry& a, const ListEntry& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return std::lexicographical_compare(a.message.coeffs().begin(), a.message.coeffs().end(),
                                            b.message.coeffs().begin(), b.message.coeffs().end());
    });
    if (static_cast<int>(result.list.size()) > params.ell)
        throw std::logic_error("list size exceeds ell");
    return result;
}

ModeApplicability mode_applicability(const GrsCode& code, const GsaParams& params) {
    ModeApplicability out;
    out.sier = SierpinskiContext::analyze(code.field->p(), params.r, params.ell);
    out.sierpinski_applicable = !out.sier.r0.empty();
    const PrefactorMode modes[4] = {PrefactorMode::None, PrefactorMode::Reencoding,
                                    PrefactorMode::Sierpinski, PrefactorMode::Combined};
    for (int i = 0; i < 4; ++i)
        out.effective_of[i] =
            plan_shape(code.n, code.k, params, modes[i], out.sier).effective;
    return out;
}

}  // namespace gsa
