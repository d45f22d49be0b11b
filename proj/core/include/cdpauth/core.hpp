#pragma once

#include <cstdint>

#include "cdpauth/types.hpp"

namespace cdpauth {

// Deterministic i.i.d. Bernoulli(density) template. Same inputs give a
// bit-identical matrix on every platform (integer counter generator).
DigitalTemplate generate_template(std::uint64_t seed, std::size_t height, std::size_t width,
                                  double density = 0.5);

// Mean of squared per-pixel differences. Shapes must match.
double mse(const Matrix& a, const Matrix& b);

// Sample Pearson correlation over flattened pixels. Both inputs must be
// non-constant; a constant input raises DegenerateInputError instead of
// silently returning 0.
double pearson(const Matrix& a, const Matrix& b);

// Per-pixel threshold helper: 1 where v >= tau, else 0.
Matrix threshold_matrix(const Matrix& m, double tau);

// Threshold a printed code into a template. Callers are responsible for the
// polarity of x: printed codes are reflectance images (ink = dark), so
// template estimation thresholds 1 - x (see the attack module).
DigitalTemplate binarize(const PrintedCode& x, double tau);

} // namespace cdpauth
