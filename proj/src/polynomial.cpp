#include "scratchpad/polynomial.hpp"

#include "scratchpad/errors.hpp"

#include <cstdlib>

namespace scratchpad {

int Polynomial::degree() const {
    for (int k = 3; k >= 1; --k) {
        if (coeffs[static_cast<std::size_t>(k)] != 0) return k;
    }
    return 0;
}

bool Polynomial::is_zero() const {
    return coeffs[0] == 0 && coeffs[1] == 0 && coeffs[2] == 0 && coeffs[3] == 0;
}

std::string render_poly_term(long long coeff, int power, bool elide_unit_coeffs) {
    std::string c = std::to_string(coeff);
    if (power == 0) return c;
    std::string var = power == 1 ? "x" : "x**" + std::to_string(power);
    if (elide_unit_coeffs) {
        if (coeff == 1) return var;
        if (coeff == -1) return "-" + var;
    }
    return c + "*" + var;
}

std::string render_poly(const Polynomial& poly, bool elide_unit_coeffs) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (int k = 3; k >= 0; --k) {
        const long long c = poly.coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (out.empty()) {
            out = render_poly_term(c, k, elide_unit_coeffs);
        } else {
            out += c > 0 ? " + " : " - ";
            out += render_poly_term(std::llabs(c), k, elide_unit_coeffs);
        }
    }
    return out;
}

PolyEvalExample evaluate_terms(const Polynomial& poly, long long x) {
    PolyEvalExample ex;
    ex.poly = poly;
    ex.x = x;
    if (poly.is_zero()) {
        ex.term_values.push_back(0);
        ex.total = 0;
        return ex;
    }
    for (int k = 3; k >= 0; --k) {
        const long long c = poly.coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigInt term = c;
        for (int i = 0; i < k; ++i) term *= x;
        ex.term_values.push_back(term);
        ex.total += term;
    }
    return ex;
}

namespace {

std::string render_poly_input(const Polynomial& poly, long long x, bool elide) {
    return "Evaluate " + render_poly(poly, elide) + " at x = " + std::to_string(x);
}

}  // namespace

ExampleRecord eval_scratchpad(const Polynomial& poly, long long x, bool elide_unit_coeffs) {
    const PolyEvalExample ex = evaluate_terms(poly, x);
    ExampleRecord rec;
    rec.mode = RecordMode::scratchpad;
    rec.input_text = render_poly_input(poly, x, elide_unit_coeffs);

    std::string target = "<scratch>\n";
    std::size_t term_index = 0;
    if (poly.is_zero()) {
        target += "0: 0\n";
    } else {
        for (int k = 3; k >= 0; --k) {
            const long long c = poly.coeffs[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            target += render_poly_term(c, k, elide_unit_coeffs);
            target += ": ";
            target += ex.term_values[term_index++].str();
            target += '\n';
        }
    }
    target += "</scratch>\ntotal: " + ex.total.str();
    rec.target_text = target;
    return rec;
}

ExampleRecord eval_direct(const Polynomial& poly, long long x, bool elide_unit_coeffs) {
    const PolyEvalExample ex = evaluate_terms(poly, x);
    ExampleRecord rec;
    rec.mode = RecordMode::direct;
    rec.input_text = render_poly_input(poly, x, elide_unit_coeffs);
    rec.target_text = ex.total.str();
    return rec;
}

PolyEvalExample sample_polynomial(Rng& rng, const PolySampleConfig& cfg, long long* attempts) {
    for (int attempt = 1; attempt <= cfg.attempt_cap; ++attempt) {
        Polynomial poly;
        for (auto& c : poly.coeffs) c = rng.uniform(cfg.coeff_min, cfg.coeff_max);
        const long long x = rng.uniform(cfg.x_min, cfg.x_max);
        if (poly.is_zero() && !cfg.allow_zero_poly) continue;
        PolyEvalExample ex = evaluate_terms(poly, x);
        if (abs(ex.total) > cfg.output_bound) continue;
        if (attempts) *attempts += attempt;
        return ex;
    }
    throw SamplingExhausted("no polynomial satisfied the output bound within " +
                            std::to_string(cfg.attempt_cap) + " attempts");
}

}  // namespace scratchpad
