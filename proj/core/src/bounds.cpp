#include "wradius/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <fmt/format.h>

#include "wradius/error.hpp"
#include "wradius/golden.hpp"
#include "wradius/spectral.hpp"

namespace wradius {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct NormAndCrawford {
    double norm;
    double crawford;
};

NormAndCrawford norm_and_crawford(const HermitianMatrix& h) {
    const auto s = hermitian_eigen(h);
    const double norm = std::max(std::abs(s.min()), std::abs(s.max()));
    const double c = (s.min() <= 0.0 && s.max() >= 0.0) ? 0.0 : std::min(std::abs(s.min()), std::abs(s.max()));
    return {norm, c};
}

double sq(double x) { return x * x; }

void require_r(double r) {
    if (!std::isfinite(r) || r < 1.0) {
        throw DomainError(fmt::format("thp exponent r must be a finite real >= 1, got {}", r));
    }
}

}  // namespace

SumDiffParts sum_diff_parts(const ComplexMatrix& a) {
    const auto [re, im] = cartesian_parts(a);
    SumDiffParts p{re + im, re - im};
    const auto plus = norm_and_crawford(p.s_plus);
    const auto minus = norm_and_crawford(p.s_minus);
    p.norm_plus = plus.norm;
    p.crawford_plus = plus.crawford;
    p.norm_minus = minus.norm;
    p.crawford_minus = minus.crawford;

    p.k_norm = operator_norm(gram(a) + cogram(a));
    const double via_parts = operator_norm(square(p.s_plus) + square(p.s_minus));
    p.identity_residual = std::abs(p.k_norm - via_parts) / (1.0 + p.k_norm);
    return p;
}

KittanehBounds bound_kittaneh(const SumDiffParts& p) {
    return {p.k_norm / 4.0, p.k_norm / 2.0};
}

KittanehBounds bound_kittaneh(const ComplexMatrix& a) {
    const double k = operator_norm(gram(a) + cogram(a));
    return {k / 4.0, k / 2.0};
}

Th1Bounds bound_th1(const SumDiffParts& p) {
    const double l1 = (sq(p.norm_plus) + sq(p.norm_minus)) / 4.0;
    return {l1, l1 + (sq(p.crawford_plus) + sq(p.crawford_minus)) / 4.0};
}

Th1Bounds bound_th1(const ComplexMatrix& a) {
    return bound_th1(sum_diff_parts(a));
}

double bound_cor1(const SumDiffParts& p) {
    return p.k_norm / 4.0 + (sq(p.crawford_plus) + sq(p.crawford_minus)) / 4.0;
}

BetaBounds bound_betas(const SumDiffParts& p) {
    const double b1 = 0.5 * sq(p.crawford_plus) + 0.5 * sq(p.norm_minus);
    const double b2 = 0.5 * sq(p.crawford_minus) + 0.5 * sq(p.norm_plus);
    return {b1, b2, std::max(b1, b2)};
}

BetaBounds bound_betas(const ComplexMatrix& a) {
    return bound_betas(sum_diff_parts(a));
}

double bound_remark_refined(const SumDiffParts& p) {
    const double spread =
        std::abs(sq(p.norm_plus) - sq(p.norm_minus) + sq(p.crawford_minus) - sq(p.crawford_plus));
    return bound_cor1(p) + spread / 4.0;
}

double bound_remark_refined(const ComplexMatrix& a) {
    return bound_remark_refined(sum_diff_parts(a));
}

double bound_theor16(const SumDiffParts& p) {
    const double a = sq(p.norm_plus);
    const double b = sq(p.norm_minus);
    return 0.25 * std::sqrt(1.5 * a * a + 1.5 * b * b + a * b);
}

double bound_theor16(const ComplexMatrix& a) {
    return bound_theor16(sum_diff_parts(a));
}

double bound_thn16(const SumDiffParts& p) {
    const double a = sq(p.norm_plus);
    const double b = sq(p.norm_minus);
    return std::sqrt(a * a + b * b) / (2.0 * std::sqrt(2.0));
}

double bound_thn16(const ComplexMatrix& a) {
    return bound_thn16(sum_diff_parts(a));
}

double bound_thp(const SumDiffParts& p, double r) {
    require_r(r);
    const double hi = std::max(sq(p.norm_plus), sq(p.norm_minus));
    const double lo = std::min(sq(p.norm_plus), sq(p.norm_minus));
    if (hi == 0.0) {
        return 0.0;
    }
    // Power mean with the larger term factored out so large r cannot overflow.
    return 0.5 * hi * std::pow(0.5 + 0.5 * std::pow(lo / hi, r), 1.0 / r);
}

double bound_thp(const ComplexMatrix& a, double r) {
    require_r(r);
    return bound_thp(sum_diff_parts(a), r);
}

double thp_limit(const SumDiffParts& p) {
    return 0.5 * std::max(sq(p.norm_plus), sq(p.norm_minus));
}

double bound_theor17(const SumDiffParts& p) {
    return 0.25 * (std::max(sq(p.norm_plus), sq(p.norm_minus)) + p.norm_plus * p.norm_minus);
}

double bound_theor17(const ComplexMatrix& a) {
    return bound_theor17(sum_diff_parts(a));
}

// ---------------------------------------------------------------------------

ConvexMin convex_min_t(const HermitianMatrix& p, const HermitianMatrix& q) {
    if (p.dim() != q.dim()) {
        throw DimensionError("convex_min_t: operands differ in dimension");
    }
    const auto g = [&](double t) { return operator_norm(t * p + (1.0 - t) * q); };
    auto best = golden_section_minimize(g, 0.0, 1.0, 200, 1e-12);
    // The minimum of a convex function may sit on an endpoint; compare with
    // the anchors the contract names.
    for (double t : {0.0, 0.5, 1.0}) {
        const double v = g(t);
        if (v < best.value) {
            best = {t, v};
        }
    }
    return {best.x, best.value};
}

namespace {

// Every quantity the upper bounds are built from, computed once.
struct UpperIngredients {
    double norm = 0.0;
    double w = 0.0;
    double k_norm = 0.0;
    double w_a2 = 0.0;
    double norm_a2 = 0.0;
    double w_a3 = 0.0;
    double w_mixed = 0.0;        // w(A* A^2 A*)
    double gram_sq_norm = 0.0;   // ||(A*A)^2 + (AA*)^2||
    ConvexMin convex{0.0, 0.0};  // min_t ||t A*A + (1-t) AA*||
};

enum Need : unsigned { kNeedW = 1, kNeedA3 = 2, kNeedMixed = 4, kNeedConvex = 8 };

UpperIngredients upper_ingredients(const ComplexMatrix& a, const SweepPolicy& policy, unsigned need) {
    UpperIngredients u;
    const HermitianMatrix p = gram(a);
    const HermitianMatrix q = cogram(a);
    const ComplexMatrix a2 = multiply(a, a);
    u.norm = operator_norm(a);
    u.k_norm = operator_norm(p + q);
    u.w_a2 = numerical_radius(a2, policy);
    u.norm_a2 = operator_norm(a2);
    if (need & kNeedW) {
        u.w = numerical_radius(a, policy);
    }
    if (need & kNeedA3) {
        u.w_a3 = numerical_radius(multiply(a2, a), policy);
    }
    if (need & kNeedMixed) {
        const ComplexMatrix as = adjoint(a);
        u.w_mixed = numerical_radius(multiply(multiply(as, a2), as), policy);
        u.gram_sq_norm = operator_norm(square(p) + square(q));
    }
    if (need & kNeedConvex) {
        u.convex = convex_min_t(p, q);
    }
    return u;
}

double dragomir_from(const UpperIngredients& u) {
    return 0.5 * (sq(u.norm) + u.w_a2);
}

double th13_from(const UpperIngredients& u) {
    return 0.5 * std::sqrt(sq(u.norm) * u.convex.value + sq(u.w_a2) + u.w_a2 * u.k_norm);
}

PowerBound th14_from(const UpperIngredients& u) {
    const double w4 = 0.25 * (sq(u.w_a2) + 0.25 * u.gram_sq_norm + 0.5 * u.w_mixed + u.w_a2 * u.k_norm);
    return {w4, std::sqrt(w4)};
}

PowerBound thp1_from(const UpperIngredients& u) {
    const double w3 = 0.25 * (u.w_a3 + u.norm * u.norm_a2 + u.w * u.k_norm);
    return {w3, std::cbrt(w3 * w3)};
}

}  // namespace

double upper_dragomir(const ComplexMatrix& a, const SweepPolicy& policy) {
    return dragomir_from(upper_ingredients(a, policy, 0));
}

double upper_th13(const ComplexMatrix& a, const SweepPolicy& policy) {
    return th13_from(upper_ingredients(a, policy, kNeedConvex));
}

PowerBound upper_th14(const ComplexMatrix& a, const SweepPolicy& policy) {
    return th14_from(upper_ingredients(a, policy, kNeedMixed));
}

PowerBound upper_thp1(const ComplexMatrix& a, const SweepPolicy& policy) {
    return thp1_from(upper_ingredients(a, policy, kNeedW | kNeedA3));
}

// ---------------------------------------------------------------------------

std::vector<LemmaRow> lemma_suite(const ComplexMatrix& a, const ComplexMatrix& d, std::span<const Complex> x,
                                  std::span<const Complex> y, std::span<const Complex> e,
                                  const SweepPolicy& policy) {
    if (a.dim() != d.dim()) {
        throw DimensionError("lemma_suite: operator dimensions differ");
    }
    if (std::abs(vector_norm(e) - 1.0) > 1e-12) {
        throw DomainError("lemma_suite: e must be a unit vector");
    }
    const ComplexMatrix as = adjoint(a);
    const ComplexMatrix ds = adjoint(d);
    const double sum_sq = sq(operator_norm(a + d));
    const double na2 = sq(operator_norm(a));
    const double nd2 = sq(operator_norm(d));
    const double gram_sum = operator_norm(gram(a) + gram(d));
    const double cogram_sum = operator_norm(cogram(a) + cogram(d));

    std::vector<LemmaRow> rows;
    rows.push_back({"norm_sum_adjoint_product", sum_sq,
                    na2 + nd2 + 0.5 * gram_sum + numerical_radius(multiply(as, d), policy), true, {}});
    rows.push_back({"norm_sum_product_adjoint", sum_sq,
                    na2 + nd2 + 0.5 * cogram_sum + numerical_radius(multiply(a, ds), policy), true, {}});
    rows.push_back({"norm_sum_max_gram", sum_sq, 2.0 * std::max(gram_sum, cogram_sum), true, {}});

    const bool a_psd = a.is_hermitian(1e-12 * (1.0 + a.max_abs())) && is_positive_semidefinite(HermitianMatrix(a));
    const bool d_psd = d.is_hermitian(1e-12 * (1.0 + d.max_abs())) && is_positive_semidefinite(HermitianMatrix(d));
    if (a_psd && d_psd) {
        rows.push_back({"positive_sum", std::sqrt(sum_sq),
                        std::max(std::sqrt(na2), std::sqrt(nd2)) + std::sqrt(operator_norm(multiply(a, d))), true, {}});
    } else {
        rows.push_back({"positive_sum", kNaN, kNaN, false, "skipped: operands are not both positive semidefinite"});
    }

    const double buzano_lhs = std::abs(inner(x, e) * inner(e, y));
    const double buzano_rhs = 0.5 * (std::abs(inner(x, y)) + vector_norm(x) * vector_norm(y));
    rows.push_back({"buzano", buzano_lhs, buzano_rhs, true, {}});
    return rows;
}

// ---------------------------------------------------------------------------

bool BoundReport::all_pass() const {
    return std::none_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.failed(); });
}

BoundReport full_report(const ComplexMatrix& a, const SweepPolicy& policy, std::span<const double> r_list) {
    if (r_list.empty()) {
        throw DomainError("full_report: r_list must be nonempty");
    }
    for (double r : r_list) {
        require_r(r);
    }
    policy.validate();

    BoundReport rep;
    auto guarded = [&](const char* section, const std::function<void()>& body, std::initializer_list<double*> fields) {
        try {
            body();
        } catch (const std::exception& ex) {
            for (double* f : fields) {
                *f = kNaN;
            }
            rep.errors.push_back(fmt::format("{}: {}", section, ex.what()));
        }
    };

    guarded("numerical_radius", [&] {
        rep.w = numerical_radius(a, policy);
        rep.w_sq = rep.w * rep.w;
        rep.norm = operator_norm(a);
    }, {&rep.w, &rep.w_sq, &rep.norm});

    guarded("lower_bounds", [&] {
        const SumDiffParts parts = sum_diff_parts(a);
        const auto kit = bound_kittaneh(parts);
        const auto th1 = bound_th1(parts);
        const auto betas = bound_betas(parts);
        rep.kittaneh_lower = kit.lower;
        rep.kittaneh_upper = kit.upper;
        rep.th1_l1 = th1.l1;
        rep.th1_l2 = th1.l2;
        rep.cor1 = bound_cor1(parts);
        rep.beta1 = betas.beta1;
        rep.beta2 = betas.beta2;
        rep.beta_max = betas.beta_max;
        rep.remark_refined = bound_remark_refined(parts);
        rep.theor16 = bound_theor16(parts);
        rep.thn16 = bound_thn16(parts);
        rep.theor17 = bound_theor17(parts);
        rep.thp_limit = thp_limit(parts);
        rep.identity_residual = parts.identity_residual;
        for (double r : r_list) {
            rep.thp.push_back({r, bound_thp(parts, r)});
        }
    }, {&rep.kittaneh_lower, &rep.kittaneh_upper, &rep.th1_l1, &rep.th1_l2, &rep.cor1, &rep.beta1, &rep.beta2,
        &rep.beta_max, &rep.remark_refined, &rep.theor16, &rep.thn16, &rep.theor17, &rep.thp_limit,
        &rep.identity_residual});

    guarded("upper_bounds", [&] {
        auto u = upper_ingredients(a, policy, kNeedA3 | kNeedMixed | kNeedConvex);
        u.w = rep.w;
        rep.dragomir = dragomir_from(u);
        rep.th13 = th13_from(u);
        rep.th13_t = u.convex.t;
        const auto th14 = th14_from(u);
        rep.th14_w4 = th14.raw;
        rep.th14_as_sq = th14.as_sq;
        const auto thp1 = thp1_from(u);
        rep.thp1_w3 = thp1.raw;
        rep.thp1_as_sq = thp1.as_sq;
    }, {&rep.dragomir, &rep.th13, &rep.th13_t, &rep.th14_w4, &rep.th14_as_sq, &rep.thp1_w3, &rep.thp1_as_sq});

    auto& v = rep.verdicts;
    const double w2 = rep.w_sq;
    const double eps_sandwich = 1e-8 * (1.0 + rep.norm);

    v.push_back(check_le("identity.k_equals_sum_diff_squares", rep.identity_residual, 1e-9, 0.0, 0.0));
    v.push_back(check_le("sandwich.half_norm_le_w", 0.5 * rep.norm, rep.w, 0.0, eps_sandwich));
    v.push_back(check_le("sandwich.w_le_norm", rep.w, rep.norm, 0.0, eps_sandwich));

    v.push_back(check_le("th1.kittaneh_lower_le_l1", rep.kittaneh_lower, rep.th1_l1));
    v.push_back(check_le("th1.l1_le_l2", rep.th1_l1, rep.th1_l2));
    v.push_back(check_le("th1.l2_le_w_sq", rep.th1_l2, w2));
    v.push_back(check_le("cor1.le_w_sq", rep.cor1, w2));
    v.push_back(check_le("betas.beta_max_le_w_sq", rep.beta_max, w2));
    v.push_back(check_le("remark.refined_le_beta_max", rep.remark_refined, rep.beta_max));
    v.push_back(check_le("remark.cor1_le_refined", rep.cor1, rep.remark_refined));
    v.push_back(check_le("theor16.kittaneh_lower_le", rep.kittaneh_lower, rep.theor16));
    v.push_back(check_le("theor16.le_w_sq", rep.theor16, w2));
    v.push_back(check_le("thn16.kittaneh_lower_le", rep.kittaneh_lower, rep.thn16));
    v.push_back(check_le("thn16.le_w_sq", rep.thn16, w2));
    v.push_back(check_le("theor17.kittaneh_lower_le", rep.kittaneh_lower, rep.theor17));
    v.push_back(check_le("theor17.le_w_sq", rep.theor17, w2));
    v.push_back(check_le("thn16.dominates_th1_l1", rep.th1_l1, rep.thn16));
    v.push_back(check_le("thn16.dominates_theor16", rep.theor16, rep.thn16));

    for (const auto& [r, value] : rep.thp) {
        v.push_back(check_le(fmt::format("thp.kittaneh_lower_le[r={}]", r), rep.kittaneh_lower, value));
        v.push_back(check_le(fmt::format("thp.le_w_sq[r={}]", r), value, w2));
    }
    std::vector<ThpValue> sorted = rep.thp;
    std::sort(sorted.begin(), sorted.end(), [](const ThpValue& x, const ThpValue& y) { return x.r < y.r; });
    for (std::size_t k = 1; k < sorted.size(); ++k) {
        v.push_back(check_le(fmt::format("thp.monotone[r={}->{}]", sorted[k - 1].r, sorted[k].r), sorted[k - 1].value,
                             sorted[k].value));
    }
    auto thp_at = [&](double r) -> const ThpValue* {
        const auto it = std::find_if(rep.thp.begin(), rep.thp.end(), [&](const ThpValue& t) { return t.r == r; });
        return it == rep.thp.end() ? nullptr : &*it;
    };
    if (const auto* t1 = thp_at(1.0)) {
        v.push_back(check_close("thp.r1_equals_th1_l1", t1->value, rep.th1_l1, 1e-12));
    } else {
        v.push_back(skipped("thp.r1_equals_th1_l1", "r = 1 not in r_list"));
    }
    if (const auto* t2 = thp_at(2.0)) {
        v.push_back(check_close("thp.r2_equals_thn16", t2->value, rep.thn16, 1e-12));
    } else {
        v.push_back(skipped("thp.r2_equals_thn16", "r = 2 not in r_list"));
    }

    v.push_back(check_le("upper.w_sq_le_kittaneh_upper", w2, rep.kittaneh_upper));
    v.push_back(check_le("upper.w_sq_le_th13", w2, rep.th13));
    v.push_back(check_le("upper.th13_le_dragomir", rep.th13, rep.dragomir));
    v.push_back(check_le("upper.w_sq_le_dragomir", w2, rep.dragomir));
    v.push_back(check_le("upper.w4_le_th14", w2 * w2, rep.th14_w4));
    v.push_back(check_le("upper.th14_le_dragomir_sq", rep.th14_w4, rep.dragomir * rep.dragomir));
    v.push_back(check_le("upper.w3_le_thp1", w2 * rep.w, rep.thp1_w3));

    for (const auto& err : rep.errors) {
        v.push_back(check_true("errors.none", false, 0.0, 0.0, err));
    }
    return rep;
}

}  // namespace wradius
