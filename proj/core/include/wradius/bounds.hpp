#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "wradius/matrix.hpp"
#include "wradius/range.hpp"
#include "wradius/verdict.hpp"

namespace wradius {

/// s+ = Re(A) + Im(A) and s- = Re(A) - Im(A) with their norms and Crawford
/// numbers, plus K = ||A*A + AA*||, the quantity every lower bound improves on.
struct SumDiffParts {
    HermitianMatrix s_plus;
    HermitianMatrix s_minus;
    double norm_plus = 0.0;
    double norm_minus = 0.0;
    double crawford_plus = 0.0;
    double crawford_minus = 0.0;
    /// ||A*A + AA*||.
    double k_norm = 0.0;
    /// |K - ||s+^2 + s-^2|| / (1 + K); zero up to roundoff.
    double identity_residual = 0.0;
};

SumDiffParts sum_diff_parts(const ComplexMatrix& a);

// ---- lower bounds on w^2 -------------------------------------------------

struct KittanehBounds {
    double lower;  // K / 4
    double upper;  // K / 2
};
KittanehBounds bound_kittaneh(const ComplexMatrix& a);
KittanehBounds bound_kittaneh(const SumDiffParts& p);

struct Th1Bounds {
    double l1;  // (||s+||^2 + ||s-||^2) / 4
    double l2;  // l1 + (c^2(s+) + c^2(s-)) / 4
};
Th1Bounds bound_th1(const ComplexMatrix& a);
Th1Bounds bound_th1(const SumDiffParts& p);

/// K/4 + (c^2(s+) + c^2(s-)) / 4.
double bound_cor1(const SumDiffParts& p);

struct BetaBounds {
    double beta1;
    double beta2;
    double beta_max;
};
BetaBounds bound_betas(const ComplexMatrix& a);
BetaBounds bound_betas(const SumDiffParts& p);

double bound_remark_refined(const ComplexMatrix& a);
double bound_remark_refined(const SumDiffParts& p);

double bound_theor16(const ComplexMatrix& a);
double bound_theor16(const SumDiffParts& p);

double bound_thn16(const ComplexMatrix& a);
double bound_thn16(const SumDiffParts& p);

/// (1/2) ((||s+||^{2r} + ||s-||^{2r}) / 2)^{1/r}; throws DomainError unless r >= 1 and finite.
double bound_thp(const ComplexMatrix& a, double r);
double bound_thp(const SumDiffParts& p, double r);

/// The r -> infinity limit of bound_thp, max(||s+||^2, ||s-||^2) / 2.
double thp_limit(const SumDiffParts& p);

double bound_theor17(const ComplexMatrix& a);
double bound_theor17(const SumDiffParts& p);

// ---- upper bounds --------------------------------------------------------

/// (||A||^2 + w(A^2)) / 2.
double upper_dragomir(const ComplexMatrix& a, const SweepPolicy& policy = {});

struct ConvexMin {
    double t;
    double value;
};

/// min over t in [0, 1] of ||t P + (1 - t) Q|| for PSD P, Q, by golden-section
/// search (200 iterations or bracket width 1e-12).
ConvexMin convex_min_t(const HermitianMatrix& p, const HermitianMatrix& q);

/// (1/2) [ ||A||^2 min_t ||t A*A + (1-t) AA*|| + w^2(A^2) + w(A^2) K ]^{1/2}.
double upper_th13(const ComplexMatrix& a, const SweepPolicy& policy = {});

struct PowerBound {
    /// The bound as stated (on w^4 or w^3).
    double raw;
    /// Rescaled to the w^2 scale.
    double as_sq;
};

/// Bound on w^4: (1/4) [ w^2(A^2) + ||(A*A)^2 + (AA*)^2|| / 4 + w(A*A^2A*) / 2 + w(A^2) K ].
PowerBound upper_th14(const ComplexMatrix& a, const SweepPolicy& policy = {});

/// Bound on w^3: (1/4) [ w(A^3) + ||A|| ||A^2|| + w(A) K ].
PowerBound upper_thp1(const ComplexMatrix& a, const SweepPolicy& policy = {});

// ---- auxiliary inequalities ------------------------------------------------

struct LemmaRow {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    bool evaluated = true;
    std::string note;

    bool holds(double slack = 1e-8) const { return !evaluated || lhs <= rhs + slack * (1.0 + std::abs(rhs)); }
};

/// Five auxiliary inequalities used by the bounds:
///   norm_sum_adjoint_product   ||A+D||^2 <= ||A||^2 + ||D||^2 + ||A*A + D*D|| / 2 + w(A*D)
///   norm_sum_product_adjoint   ||A+D||^2 <= ||A||^2 + ||D||^2 + ||AA* + DD*|| / 2 + w(AD*)
///   norm_sum_max_gram          ||A+D||^2 <= 2 max(||A*A + D*D||, ||AA* + DD*||)
///   positive_sum               ||A+D|| <= max(||A||, ||D||) + ||AD||^{1/2}   (A, D PSD only)
///   buzano                     |<x,e><e,y>| <= (|<x,y>| + ||x|| ||y||) / 2
/// The positive_sum row is flagged unevaluated when A or D is not PSD.
/// Throws DomainError when ||e|| differs from 1 by more than 1e-12.
std::vector<LemmaRow> lemma_suite(const ComplexMatrix& a, const ComplexMatrix& d, std::span<const Complex> x,
                                  std::span<const Complex> y, std::span<const Complex> e,
                                  const SweepPolicy& policy = {});

// ---- aggregate -------------------------------------------------------------

struct ThpValue {
    double r;
    double value;
};

/// Every bound for one matrix on the w^2 scale, together with the verdicts of
/// the chains and orderings they are claimed to satisfy. Fields whose
/// computation failed hold NaN and the failure is listed in `errors`.
struct BoundReport {
    double w = 0.0;
    double w_sq = 0.0;
    double norm = 0.0;

    // lower bounds on w^2
    double kittaneh_lower = 0.0;
    double th1_l1 = 0.0;
    double th1_l2 = 0.0;
    double cor1 = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta_max = 0.0;
    double remark_refined = 0.0;
    double theor16 = 0.0;
    double thn16 = 0.0;
    double theor17 = 0.0;
    std::vector<ThpValue> thp;
    double thp_limit = 0.0;

    // upper bounds on w^2
    double kittaneh_upper = 0.0;
    double dragomir = 0.0;
    double th13 = 0.0;
    double th13_t = 0.0;
    double th14_w4 = 0.0;
    double th14_as_sq = 0.0;
    double thp1_w3 = 0.0;
    double thp1_as_sq = 0.0;

    double identity_residual = 0.0;

    std::vector<Verdict> verdicts;
    std::vector<std::string> errors;

    bool all_pass() const;
};

inline const std::vector<double> kDefaultRList{1.0, 1.5, 2.0, 3.0, 5.0, 10.0};

/// Throws DomainError if r_list is empty or contains r < 1.
BoundReport full_report(const ComplexMatrix& a, const SweepPolicy& policy = {},
                        std::span<const double> r_list = kDefaultRList);

}  // namespace wradius
