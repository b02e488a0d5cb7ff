#pragma once

#include "cigarlab/geometry.hpp"

namespace cigarlab {

// Two-Killing-field metric family on coordinates (t, x, y), active (x, y):
//   g_tt = y^2, g_tx = y^2 (q(y) - tau(x)), g_xx = y^2 (q - tau)^2 + p(y)^2,
//   g_yy = Omega(y)^2, potential f(y).
struct KillingMetricSpec {
    ScalarField1 p, q, Omega, f;  // functions of y
    ScalarField1 tau;             // function of x
    double y_lo = 0.1, y_hi = 10.0;
    std::string name = "killing-spec";
};

struct AppendixHessian {
    double f11 = 0, f12 = 0, f22 = 0, f33 = 0;
    double det2 = 0;    // f11*f22 - f12^2
    double D = 0;       // y^4 q'^2 - 4 y p p'
    double wedge2 = 0;  // g_tt g_xx - g_tx^2
    double k12 = 0;     // D / (4 Omega^2 wedge2)
};

MetricModel cigar3d();
MetricModel cigar2d();
MetricModel sigma_surface();
MetricModel euclidean3();

MetricModel appendix_metric(const KillingMetricSpec& s);

AppendixHessian appendix_hessian_closed(const KillingMetricSpec& s, double x, double y);

// det2 * k12; <= 0 identically, < 0 wherever f'(y) * D != 0.
double rigidity_obstruction(const KillingMetricSpec& s, double x, double y);

// Named demo spec (p = cosh y, q = y^2, Omega = 1, tau = sin x, f = y^2).
KillingMetricSpec appendix_demo_spec();
// Flat-slice spec (p = y, q = 0, Omega = 1, tau = 0, f = y).
KillingMetricSpec appendix_flat_spec();

// CLI fixture registry: cigar2d | cigar3d | sigma | appendix-demo.
MetricModel model_by_name(const std::string& id);

}  // namespace cigarlab
