#pragma once

// Floating-point cross-check: recovers central character values and
// character degrees by simultaneously diagonalizing the class
// multiplication matrices. Never used on the exact path.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "harada/class_algebra.hpp"

namespace harada {

struct SpectralCharacterData {
    std::vector<std::vector<std::complex<double>>> omega;  // omega[chi][j]
    std::vector<unsigned long> degrees;
    BigRational h_oracle;
    double residual = 0;      // max ||M_j v - omega v|| / ||v||
    double degree_defect = 0;  // max distance of a recovered degree from its rounding
    std::uint64_t seed = 0;
    int attempts = 0;
};

struct OracleOptions {
    std::uint64_t seed = 20240607;
    int max_attempts = 5;
    double tolerance = 1e-6;
};

inline SpectralCharacterData spectral_oracle(const GroupData& gd, const OracleOptions& opt = {},
                                             const Limits& limits = {}) {
    const std::size_t n = gd.group.order();
    if (n > limits.oracle_max_order) throw cap_exceeded("spectral oracle limited to order " +
                                                        std::to_string(limits.oracle_max_order));
    const std::size_t s = gd.classes.count();
    // (M_j)_{k,i} = alpha_{ji}^k: multiplication by [K_j] on class-sum coordinates.
    std::vector<Eigen::MatrixXd> mats(s, Eigen::MatrixXd::Zero(s, s));
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < s; ++i)
            for (const auto& t : gd.algebra.product(j, i)) mats[j](t.k, i) = static_cast<double>(t.count);

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    for (int attempt = 1; attempt <= opt.max_attempts; ++attempt) {
        Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(s, s);
        for (std::size_t j = 0; j < s; ++j) comb += coef(rng) * mats[j] / static_cast<double>(gd.classes.size(j));
        Eigen::EigenSolver<Eigen::MatrixXd> es(comb);
        if (es.info() != Eigen::Success) continue;
        auto ev = es.eigenvalues();
        double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
        double gap = 1e300;
        for (Eigen::Index a = 0; a < ev.size(); ++a)
            for (Eigen::Index b = a + 1; b < ev.size(); ++b) gap = std::min(gap, std::abs(ev[a] - ev[b]));
        if (s > 1 && gap < 1e-7 * scale) continue;

        Eigen::MatrixXcd vecs = es.eigenvectors();
        SpectralCharacterData out;
        out.seed = opt.seed;
        out.attempts = attempt;
        for (std::size_t c = 0; c < s; ++c) {
            Eigen::VectorXcd v = vecs.col(static_cast<Eigen::Index>(c));
            std::complex<double> vv = v.squaredNorm();
            std::vector<std::complex<double>> row(s);
            for (std::size_t j = 0; j < s; ++j) {
                Eigen::VectorXcd mv = mats[j].cast<std::complex<double>>() * v;
                row[j] = v.dot(mv) / vv;  // v^H M_j v / v^H v
                out.residual = std::max(out.residual, (mv - row[j] * v).norm() / std::sqrt(vv.real()));
            }
            out.omega.push_back(std::move(row));
        }
        bool ok = out.residual < opt.tolerance * scale * static_cast<double>(n);
        BigInt deg_prod = 1;
        unsigned long sum_sq = 0;
        for (const auto& row : out.omega) {
            double norm = 0;
            for (std::size_t j = 0; j < s; ++j) norm += std::norm(row[j]) / static_cast<double>(gd.classes.size(j));
            double d = std::sqrt(static_cast<double>(n) / norm);
            double r = std::round(d);
            out.degree_defect = std::max(out.degree_defect, std::abs(d - r));
            if (std::abs(d - r) > opt.tolerance || r < 1) ok = false;
            unsigned long di = static_cast<unsigned long>(r);
            out.degrees.push_back(di);
            sum_sq += di * di;
            if (di == 0 || n % di != 0) ok = false;
            deg_prod *= di;
        }
        if (!ok || sum_sq != n) continue;
        out.h_oracle = make_rational(class_size_product(gd.classes), deg_prod);
        return out;
    }
    throw anomaly("spectral oracle failed to separate characters after " + std::to_string(opt.max_attempts) +
                  " attempts");
}

}  // namespace harada
