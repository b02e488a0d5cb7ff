#pragma once

#include <random>
#include <utility>
#include <vector>

#include "cigarlab/jets.hpp"
#include "cigarlab/models.hpp"
#include "cigarlab/variation.hpp"

namespace cigarlab {

// Random smooth fields with exact jets: finite trigonometric polynomials in x
// times rational-in-r radial profiles with bounded coefficients and
// pole-free denominators.
VariationField random_variation(std::mt19937_64& rng, bool even_in_r = false);

// Profiles of x.
ScalarField1 random_affine_profile(std::mt19937_64& rng);
ScalarField1 random_curved_profile(std::mt19937_64& rng);
// Smooth radial profile on (0, 2).
ScalarField1 random_radial_profile(std::mt19937_64& rng);
// Smooth scalar on the half-strip (xi, x).
ScalarField2 random_strip_scalar(std::mt19937_64& rng);

// Random member of the Killing-coordinates metric family on y in [0.5, 3]
// (positive p and Omega by construction).
KillingMetricSpec random_killing_spec(std::mt19937_64& rng);

std::vector<std::pair<double, double>> sample_box(std::mt19937_64& rng, int n,
                                                  double lo1, double hi1,
                                                  double lo2, double hi2);

}  // namespace cigarlab
