#pragma once

/*
 * csv.hpp — flat artifacts with lossless floats.
 *
 * Every real is printed with 17 significant digits so a written file reads
 * back bit-identically; complex values occupy re/im column pairs.
 */

#include <string>
#include <vector>

#include "sinetype/model.hpp"
#include "sinetype/stability.hpp"
#include "sinetype/sturm_liouville.hpp"

namespace sinetype {

std::string format_real(double x); // %.17g

// n, re(z_n), im(z_n), re(z_n0), im(z_n0), re(kappa), im(kappa)
std::string zeros_to_csv(const ZeroSequence& zeros, const MainPart& main);
ZeroSequence zeros_from_csv(const std::string& text); // z_n columns only

// seed_a, seed_b, r, numerator, denominator, ratio
std::string stability_records_to_csv(const std::vector<StabilityRecord>& records);

// r, trials, C_r_est, mean, stddev
std::string cr_summary_to_csv(const std::vector<LipschitzEstimate>& estimates);

// r, lhs, rhs, ratio, profile
std::string experiments_to_csv(const std::vector<Theorem12Report>& reports);

// n, re(lambda), im(lambda)
std::string spectrum_to_csv(const Spectrum& spec);
Spectrum spectrum_from_csv(const std::string& text);

// residual_norm, frame bounds, and per-mode errors against a reference
std::string recon_report_to_csv(double residual_norm, double m_est, double M_est,
                                const FourierTail& recovered, const FourierTail* reference);

} // namespace sinetype
