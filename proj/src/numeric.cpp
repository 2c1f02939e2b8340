#include "sg/numeric.hpp"

#include <eigen3/Eigen/Dense>
#include <eigen3/Eigen/Eigenvalues>

namespace sg {

namespace {

Eigen::MatrixXd to_eigen(const QMatrix& m) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (const auto& [rc, v] : m.entries()) out(rc.first, rc.second) = to_double(v);
    return out;
}

}  // namespace

JointEigenResult joint_numeric_eigen(const std::vector<QMatrix>& commuting,
                                     std::uint64_t seed, double tol) {
    if (commuting.empty()) throw std::invalid_argument("joint_numeric_eigen: no matrices");
    const int n = commuting[0].rows();
    for (const auto& a : commuting)
        if (a.rows() != n || a.cols() != n)
            throw std::invalid_argument("joint_numeric_eigen: sizes differ");
    for (size_t i = 0; i < commuting.size(); ++i)
        for (size_t j = i + 1; j < commuting.size(); ++j)
            if (!commuting[i].commutator(commuting[j]).is_zero())
                throw NotCommuting("matrices " + std::to_string(i) + "," + std::to_string(j) +
                                   " do not commute exactly");

    Rng rng(seed);
    QMatrix combo(n, n);
    for (const auto& a : commuting) combo = combo + a * rng.rat(-50, 50);

    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(combo));
    std::vector<Eigen::MatrixXcd> gens;
    std::vector<double> gen_norms;
    for (const auto& a : commuting) {
        Eigen::MatrixXd d = to_eigen(a);
        gen_norms.push_back(d.norm());
        gens.push_back(d.cast<std::complex<double>>());
    }

    JointEigenResult res;
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXcd v = es.eigenvectors().col(k);
        double vn = v.norm();
        std::vector<std::complex<double>> evals;
        bool ok = true;
        for (size_t g = 0; g < gens.size(); ++g) {
            Eigen::VectorXcd av = gens[g] * v;
            std::complex<double> theta = v.dot(av) / v.dot(v);
            double resid = (av - theta * v).norm();
            double scale = gen_norms[g] * vn;
            if (scale == 0.0) scale = 1.0;
            if (resid > tol * scale) {
                ok = false;
                break;
            }
            evals.push_back(theta);
        }
        if (!ok) continue;
        res.vectors.emplace_back(v.data(), v.data() + n);
        res.eigenvalues.push_back(std::move(evals));
        res.combo_eigenvalues.push_back(es.eigenvalues()(k));
    }

    bool separated = true;
    for (size_t i = 0; i < res.combo_eigenvalues.size() && separated; ++i)
        for (size_t j = i + 1; j < res.combo_eigenvalues.size(); ++j)
            if (std::abs(res.combo_eigenvalues[i] - res.combo_eigenvalues[j]) <= tol) {
                separated = false;
                break;
            }
    res.simple_spectrum = separated && (int)res.vectors.size() == n;
    return res;
}

}  // namespace sg
