#include "sinetype/moments.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>

#include "sinetype/errors.hpp"

namespace sinetype {

namespace {
constexpr double kNodeMergeTol = 1e-7;
const double kPi = SineTypeBase::pi();
} // namespace

MomentSystem build_moment_system(const ZeroSequence& zeros, const MainPart& main, int M, int K) {
    if (M < 0) throw std::invalid_argument("mode cutoff M must be nonnegative");
    if (zeros.first_index() > 1 || zeros.last_index() < 1)
        throw std::invalid_argument("sequence must cover indices starting at n = 1");
    const int avail = zeros.last_index();
    if (K == 0) K = avail;
    if (K > avail)
        throw InsufficientZeros("requested " + std::to_string(K) + " equations, sequence has " +
                                std::to_string(avail));
    if (K < 2 * M + 1)
        throw InsufficientZeros("K = " + std::to_string(K) + " below 2M+1 = " +
                                std::to_string(2 * M + 1));

    MomentSystem sys;
    sys.M = M;
    sys.b = main.base().type();
    sys.K = K;

    // group consecutive equal entries into multiple nodes
    for (int n = 1; n <= K;) {
        Complex zk = zeros.at(n);
        int m = 1;
        while (n + m <= K && std::abs(zeros.at(n + m) - zk) < kNodeMergeTol) ++m;
        sys.nodes.push_back({zk, m});
        n += m;
    }

    const double b = sys.b;
    sys.A.resize(K, 2 * M + 1);
    sys.rhs.resize(K);
    int row = 0;
    for (const MomentNode& node : sys.nodes) {
        if (node.multiplicity > 3)
            throw std::invalid_argument("zero multiplicity beyond 3 is not supported");
        for (int nu = 0; nu < node.multiplicity; ++nu, ++row) {
            double scale = 2.0;
            for (int i = 0; i <= nu; ++i) scale *= b;
            for (int j = -M; j <= M; ++j)
                sys.A(row, j + M) = scale * sinc_deriv(b * node.z + kPi * double(j), nu);
            sys.rhs(row) = -main.eval(node.z, nu);
        }
    }
    return sys;
}

FrameEstimate frame_bounds_estimate(const MomentSystem& system) {
    Eigen::MatrixXcd scaled = system.A / (2.0 * system.b);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(scaled);
    const auto& sv = svd.singularValues();
    FrameEstimate fe;
    fe.M_est = sv(0) * sv(0);
    fe.m_est = sv(sv.size() - 1) * sv(sv.size() - 1);
    return fe;
}

InversionResult invert_to_tail(const MomentSystem& system) {
    FrameEstimate fe = frame_bounds_estimate(system);
    if (!(fe.m_est > 1e-8))
        throw IllConditioned("frame lower estimate " + std::to_string(fe.m_est) +
                             " too small to invert");
    Eigen::VectorXcd c = system.A.colPivHouseholderQr().solve(system.rhs);
    double resid = (system.A * c - system.rhs).norm();
    std::map<int, Complex> modes;
    for (int j = -system.M; j <= system.M; ++j) modes[j] = c(j + system.M);
    return InversionResult{FourierTail(system.b, system.M, modes), resid};
}

} // namespace sinetype
