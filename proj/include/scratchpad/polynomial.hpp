#pragma once

#include "scratchpad/record.hpp"
#include "scratchpad/rng.hpp"
#include "scratchpad/value.hpp"

#include <array>
#include <string>
#include <vector>

namespace scratchpad {

// Integer polynomial of degree at most three; coeffs[k] multiplies x**k.
struct Polynomial {
    std::array<long long, 4> coeffs{};

    int degree() const;
    bool is_zero() const;
    bool operator==(const Polynomial&) const = default;
};

struct PolyEvalExample {
    Polynomial poly;
    long long x = 0;
    std::vector<BigInt> term_values;  // one per rendered term, descending power
    BigInt total = 0;

    bool operator==(const PolyEvalExample&) const = default;
};

// Signed term text: "-7*x**2", "7*x", "5". Unit coefficients stay explicit
// ("1*x") unless elision is requested.
std::string render_poly_term(long long coeff, int power, bool elide_unit_coeffs = false);

// "-7*x**2 + 7*x + 5": descending powers joined with " + " / " - " by the sign
// of the following coefficient; zero terms omitted; all-zero renders as "0".
std::string render_poly(const Polynomial& poly, bool elide_unit_coeffs = false);

// Per-term evaluation at x (the term values the scratchpad prints).
PolyEvalExample evaluate_terms(const Polynomial& poly, long long x);

// Record with input "Evaluate {poly} at x = {x}" and target
//   <scratch>
//   {term}: {value}      one line per rendered term
//   </scratch>
//   total: {total}
ExampleRecord eval_scratchpad(const Polynomial& poly, long long x, bool elide_unit_coeffs = false);

// Baseline record: same input, target is the total alone.
ExampleRecord eval_direct(const Polynomial& poly, long long x, bool elide_unit_coeffs = false);

struct PolySampleConfig {
    long long coeff_min = -10;
    long long coeff_max = 10;
    long long x_min = -10;
    long long x_max = 10;
    long long output_bound = 1000;  // |total| must not exceed this
    int attempt_cap = 100000;
    bool allow_zero_poly = false;
    bool elide_unit_coeffs = false;
};

// Rejection-samples (poly, x) until |total| <= output_bound. Deterministic
// under a fixed Rng. Throws SamplingExhausted past the attempt cap. attempts,
// when given, receives the number of draws used (for acceptance-rate stats).
PolyEvalExample sample_polynomial(Rng& rng, const PolySampleConfig& cfg, long long* attempts = nullptr);

}  // namespace scratchpad
