#pragma once

// Kinetic cylinders for the d = 1 probe: boxes over the coordinates
// (t, x_1, ..., x_k, v). Q1 is the present unit cylinder, Q1minus the
// past one, Qtilde the enlarged cylinder whose space radii scale with the
// containment factor r0.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace kintraj {

struct Box {
    // axes[i] = {lo, hi}; axis 0 is time, then k position axes, then velocity.
    std::vector<std::pair<double, double>> axes;

    std::size_t dims() const { return axes.size(); }
    double volume() const {
        double v = 1.0;
        for (const auto& [lo, hi] : axes) v *= hi - lo;
        return v;
    }
    bool contains(const std::vector<double>& p, double slack = 0.0) const {
        if (p.size() != axes.size()) return false;
        for (std::size_t i = 0; i < axes.size(); ++i)
            if (p[i] < axes[i].first - slack || p[i] > axes[i].second + slack) return false;
        return true;
    }
};

struct CylinderGeometry {
    int k = 1;
    double kappa = 1.0;
    double r0 = 1.0;
    Box q1;        // (-1, 0] x unit balls
    Box q1_minus;  // (-2-kappa, -1-kappa] x unit balls
    Box q_tilde;   // (-2-kappa, 0] x enlarged balls

    double sigma_lo() const { return -2.0 - kappa; }
    double sigma_hi() const { return -kappa; }

    // Space radius of the enlarged cylinder for block i (0-based; block k
    // is velocity). The single-step convention scales the position block
    // by (1+kappa); the k-step convention scales block i by
    // (1+1/kappa)^i.
    static double tilde_radius(int k, int block, double kappa, double r0,
                               bool conjecture_radii) {
        if (conjecture_radii) return r0 * std::pow(1.0 + 1.0 / kappa, block);
        return block < k ? r0 * (1.0 + kappa) : r0 * (1.0 + 1.0 / kappa);
    }

    static CylinderGeometry make(int k, double kappa, double r0) {
        return make(k, kappa, r0, k > 1);
    }

    static CylinderGeometry make(int k, double kappa, double r0, bool conjecture_radii) {
        if (k < 1) throw std::invalid_argument("CylinderGeometry: k must be positive");
        if (kappa <= 0.0) throw std::invalid_argument("CylinderGeometry: kappa must be positive");
        CylinderGeometry g;
        g.k = k;
        g.kappa = kappa;
        g.r0 = r0;
        g.q1.axes.push_back({-1.0, 0.0});
        g.q1_minus.axes.push_back({-2.0 - kappa, -1.0 - kappa});
        g.q_tilde.axes.push_back({-2.0 - kappa, 0.0});
        for (int block = 0; block <= k; ++block) {
            g.q1.axes.push_back({-1.0, 1.0});
            g.q1_minus.axes.push_back({-1.0, 1.0});
            const double rad = tilde_radius(k, block, kappa, r0, conjecture_radii);
            g.q_tilde.axes.push_back({-rad, rad});
        }
        return g;
    }
};

}  // namespace kintraj
