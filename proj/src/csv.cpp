#include "sinetype/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sinetype {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string row(std::initializer_list<std::string> cells) {
    std::string line;
    for (const std::string& c : cells) {
        if (!line.empty()) line += ',';
        line += c;
    }
    return line + '\n';
}

std::vector<std::vector<std::string>> parse_table(const std::string& text,
                                                  std::size_t columns) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) { // header
            first = false;
            continue;
        }
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != columns)
            throw std::invalid_argument("csv row has " + std::to_string(cells.size()) +
                                        " cells, expected " + std::to_string(columns));
        rows.push_back(std::move(cells));
    }
    return rows;
}

double to_real(const std::string& cell) {
    std::size_t used = 0;
    double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument("bad number in csv: " + cell);
    return v;
}

int to_int(const std::string& cell) {
    std::size_t used = 0;
    int v = std::stoi(cell, &used);
    if (used != cell.size()) throw std::invalid_argument("bad integer in csv: " + cell);
    return v;
}

} // namespace

std::string zeros_to_csv(const ZeroSequence& zeros, const MainPart& main) {
    ResidualReport res = residuals(zeros, main);
    std::string out = "n,re_z,im_z,re_z0,im_z0,re_kappa,im_kappa\n";
    for (int n = zeros.first_index(); n <= zeros.last_index(); ++n) {
        Complex z = zeros.at(n);
        Complex z0 = main.lattice_point(n);
        Complex kappa = res.kappa[std::size_t(n - zeros.first_index())];
        out += row({std::to_string(n), format_real(z.real()), format_real(z.imag()),
                    format_real(z0.real()), format_real(z0.imag()),
                    format_real(kappa.real()), format_real(kappa.imag())});
    }
    return out;
}

ZeroSequence zeros_from_csv(const std::string& text) {
    auto rows = parse_table(text, 7);
    if (rows.empty()) throw std::invalid_argument("zeros csv has no data rows");
    std::map<int, Complex> by_index;
    for (const auto& cells : rows) {
        int n = to_int(cells[0]);
        if (!by_index.emplace(n, Complex(to_real(cells[1]), to_real(cells[2]))).second)
            throw std::invalid_argument("duplicate index in zeros csv: " + cells[0]);
    }
    int first = by_index.begin()->first;
    int last = by_index.rbegin()->first;
    if (last - first + 1 != int(by_index.size()))
        throw std::invalid_argument("zeros csv indices are not contiguous");
    std::vector<Complex> pts;
    pts.reserve(by_index.size());
    for (const auto& [n, z] : by_index) {
        (void)n;
        pts.push_back(z);
    }
    return ZeroSequence(first, std::move(pts));
}

std::string stability_records_to_csv(const std::vector<StabilityRecord>& records) {
    std::string out = "seed_a,seed_b,r,numerator,denominator,ratio\n";
    for (const StabilityRecord& rec : records)
        out += row({std::to_string(rec.seed_a), std::to_string(rec.seed_b),
                    format_real(rec.r), format_real(rec.numerator),
                    format_real(rec.denominator), format_real(rec.ratio)});
    return out;
}

std::string cr_summary_to_csv(const std::vector<LipschitzEstimate>& estimates) {
    std::string out = "r,trials,C_r_est,mean,stddev\n";
    for (const LipschitzEstimate& est : estimates)
        out += row({format_real(est.r), std::to_string(est.trials), format_real(est.c_r_est),
                    format_real(est.mean), format_real(est.stddev)});
    return out;
}

std::string experiments_to_csv(const std::vector<Theorem12Report>& reports) {
    std::string out = "r,lhs,rhs,ratio,profile\n";
    for (const Theorem12Report& rep : reports)
        out += row({format_real(rep.r), format_real(rep.lhs), format_real(rep.rhs),
                    format_real(rep.ratio), std::to_string(rep.profile_N)});
    return out;
}

std::string spectrum_to_csv(const Spectrum& spec) {
    std::string out = "n,re_lambda,im_lambda\n";
    for (int n = 1; n <= spec.size(); ++n) {
        Complex v = spec.at(n);
        out += row({std::to_string(n), format_real(v.real()), format_real(v.imag())});
    }
    return out;
}

Spectrum spectrum_from_csv(const std::string& text) {
    auto rows = parse_table(text, 3);
    if (rows.empty()) throw std::invalid_argument("spectrum csv has no data rows");
    std::map<int, Complex> by_index;
    for (const auto& cells : rows) {
        int n = to_int(cells[0]);
        if (n < 1) throw std::invalid_argument("spectrum csv index must be >= 1");
        if (!by_index.emplace(n, Complex(to_real(cells[1]), to_real(cells[2]))).second)
            throw std::invalid_argument("duplicate index in spectrum csv: " + cells[0]);
    }
    if (by_index.begin()->first != 1 || by_index.rbegin()->first != int(by_index.size()))
        throw std::invalid_argument("spectrum csv must cover n = 1..K contiguously");
    std::vector<Complex> values;
    values.reserve(by_index.size());
    for (const auto& [n, v] : by_index) {
        (void)n;
        values.push_back(v);
    }
    return Spectrum(std::move(values));
}

std::string recon_report_to_csv(double residual_norm, double m_est, double M_est,
                                const FourierTail& recovered, const FourierTail* reference) {
    std::string out = "key,value\n";
    out += row({"residual_norm", format_real(residual_norm)});
    out += row({"m_est", format_real(m_est)});
    out += row({"M_est", format_real(M_est)});
    if (reference != nullptr) {
        int M = std::max(recovered.cutoff(), reference->cutoff());
        double max_err = 0.0;
        for (int k = -M; k <= M; ++k) {
            double err = std::abs(recovered.mode(k) - reference->mode(k));
            max_err = std::max(max_err, err);
            out += row({"mode_error_" + std::to_string(k), format_real(err)});
        }
        out += row({"mode_error_max", format_real(max_err)});
    }
    return out;
}

} // namespace sinetype
