#pragma once

// ----------------------------------------------------------------------------
// Standard normal quantile (inverse CDF).
//
// Acklam's rational approximation refined by one Halley step against the
// erfc-based CDF; absolute error is at machine precision, far inside the
// 1e-8 contract required by the plan formulas. No table lookups.
// ----------------------------------------------------------------------------

namespace qckit {

// Controls which critical values the plan formulas use.
//   precise:       full-precision quantiles (z_0.95 = 1.644854, z_0.90 = 1.281552)
//   paper_rounded: the rounded constants 1.645 and 1.28 commonly quoted in
//                  tables, kept for traceability of published sample sizes
enum class QuantileMode { precise, paper_rounded };

// Phi^{-1}(p) for 0 < p < 1. Throws std::domain_error otherwise.
double normal_quantile(double p);

// Phi(x), via erfc.
double normal_cdf(double x);

// Critical value z_{prob}. In paper_rounded mode the published constants are
// substituted for prob = 0.95 (1.645) and prob = 0.90 (1.28); any other
// probability falls back to the precise quantile since no rounded value
// exists for it.
double critical_z(double prob, QuantileMode mode);

}  // namespace qckit
