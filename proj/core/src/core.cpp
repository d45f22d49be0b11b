#include "cdpauth/core.hpp"

#include <cmath>

#include "cdpauth/errors.hpp"
#include "cdpauth/rng.hpp"

namespace cdpauth {

DigitalTemplate generate_template(std::uint64_t seed, std::size_t height, std::size_t width,
                                  double density) {
    if (height < 2 || width < 2) throw ParameterError("template dimensions must be >= 2");
    if (!(density > 0.0 && density < 1.0)) throw ParameterError("density must lie in (0,1)");

    DigitalTemplate t;
    t.pixels = Matrix(height, width);
    t.seed = seed;
    const std::uint64_t key = rng::derive(seed, 0x7e3131u);
    for (std::size_t i = 0; i < t.pixels.size(); ++i) {
        t.pixels[i] = rng::unit_at(key, i) < density ? 1.0 : 0.0;
    }
    return t;
}

double mse(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ParameterError("mse: shape mismatch");
    if (a.empty()) throw ParameterError("mse: empty input");
    double acc = 0.0;
    const double* pa = a.data();
    const double* pb = b.data();
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = pa[i] - pb[i];
        acc += d * d;
    }
    return acc / static_cast<double>(a.size());
}

double pearson(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ParameterError("pearson: shape mismatch");
    if (a.size() < 2) throw ParameterError("pearson: need at least 2 pixels");
    const std::size_t n = a.size();
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);

    double cov = 0.0, var_a = 0.0, var_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double da = a[i] - mean_a;
        double db = b[i] - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if (var_a == 0.0 || var_b == 0.0)
        throw DegenerateInputError("pearson: constant input has no defined correlation");
    return cov / std::sqrt(var_a * var_b);
}

Matrix threshold_matrix(const Matrix& m, double tau) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] >= tau ? 1.0 : 0.0;
    return out;
}

DigitalTemplate binarize(const PrintedCode& x, double tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw ParameterError("binarize: tau must lie in (0,1)");
    DigitalTemplate t;
    t.pixels = threshold_matrix(x.pixels, tau);
    t.id = x.id;
    return t;
}

} // namespace cdpauth
