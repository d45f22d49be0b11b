#pragma once

#include <cstdint>

#include "cdpauth/types.hpp"

namespace cdpauth {

// Parametric model of an electrophotographic printer plus flatbed
// acquisition. Stages run in order: stochastic dot gain, ink scaling,
// Gaussian optical blur, additive noise, reflectance flip, clamp.
struct ChannelParams {
    PrinterId printer;
    double dot_gain = 0.0;    // probability an off pixel bordering ink turns on
    double blur_sigma = 0.0;  // Gaussian PSF std in pixels
    double noise_sigma = 0.0; // additive noise std in intensity units
    double ink_level = 1.0;   // peak darkness in (0,1]
    std::uint64_t seed = 0;
};

// Shape-independent parameter checks; blur_sigma is additionally checked
// against min(H,W)/4 inside print_code.
void validate_channel(const ChannelParams& p);

// Simulator presets for the two synthetic defender printers used in the
// experiments. synth55 is deliberately the noisier one.
ChannelParams synth55_preset();
ChannelParams synth76_preset();
ChannelParams preset_by_label(const std::string& label);

// Separable Gaussian convolution with symmetric (reflective) boundaries.
// Kernel radius is ceil(3*sigma); sigma == 0 is the identity.
Matrix gaussian_blur(const Matrix& image, double sigma);

// Pure function of (t, params, draw). Different draw values give different
// outputs whenever noise_sigma > 0 or dot_gain is in (0,1).
PrintedCode print_code(const DigitalTemplate& t, const ChannelParams& params, std::uint64_t draw);

} // namespace cdpauth
