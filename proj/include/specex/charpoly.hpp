#pragma once

#include <string>
#include <vector>

#include "specex/bigint.hpp"
#include "specex/graph.hpp"

namespace specex {

/// Exact integer characteristic polynomial det(xI - A). Monic; the x^(n-1)
/// coefficient is zero (trace) and the x^(n-2) coefficient is -m(G).
struct CharPoly {
    std::vector<BigInt> coeffs;  // coeffs[i] multiplies x^i; size degree+1

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const CharPoly&, const CharPoly&) = default;
    std::string to_string() const;  // human-readable, highest power first
};

/// Faddeev-LeVerrier recurrence in exact integer arithmetic. Throws
/// std::invalid_argument above the n <= 16 desk-scale cap.
CharPoly char_poly_exact(const Graph& g);

double evaluate(const CharPoly& p, double x);

/// p(num/den) * den^degree, an exact integer (den > 0).
BigInt evaluate_scaled(const CharPoly& p, const BigInt& num, const BigInt& den);

/// Number of roots strictly above num/den, counted with multiplicity.
/// Exact for real-rooted polynomials (Fourier sign-variation count), which
/// characteristic polynomials of symmetric matrices are.
int count_roots_above(const CharPoly& p, const BigInt& num, const BigInt& den);

enum class RootOrder { Less, Equal, Greater };

/// Exact comparison of the largest roots of two real-rooted integer
/// polynomials by dyadic bisection; lp/lq are floating estimates used only
/// to seed the bracket (they must be within 1e-6 of the true values).
/// Returns Equal when the roots cannot be separated within the depth cap.
RootOrder compare_largest_roots(const CharPoly& p, double lp, const CharPoly& q, double lq);

}  // namespace specex
