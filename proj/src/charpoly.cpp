#include "specex/charpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace specex {

std::string CharPoly::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        BigInt a = abs(c);
        if (a != 1 || i == 0) out << a.str();
        if (i > 0) {
            out << "x";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

CharPoly char_poly_exact(const Graph& g) {
    const int n = g.order();
    if (n > 16) throw std::invalid_argument("char_poly_exact is capped at n <= 16");

    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(M_k)/k,
    // M_{k+1} = A (M_k + c_{n-k} I). Divisions are exact over the integers.
    std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                       std::vector<BigInt>(static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (g.has_edge(u, v)) a[v][u] = 1;

    CharPoly p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    p.coeffs[static_cast<std::size_t>(n)] = 1;

    auto m = a;
    for (int k = 1; k <= n; ++k) {
        BigInt trace = 0;
        for (int i = 0; i < n; ++i) trace += m[i][i];
        BigInt c = -trace / k;
        p.coeffs[static_cast<std::size_t>(n - k)] = c;
        if (k == n) break;
        for (int i = 0; i < n; ++i) m[i][i] += c;
        std::vector<std::vector<BigInt>> next(static_cast<std::size_t>(n),
                                              std::vector<BigInt>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < n; ++t) {
                if (a[i][t] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += m[t][j];
            }
        m = std::move(next);
    }
    return p;
}

double evaluate(const CharPoly& p, double x) {
    double acc = 0.0;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + static_cast<double>(p.coeffs[static_cast<std::size_t>(i)]);
    return acc;
}

BigInt evaluate_scaled(const CharPoly& p, const BigInt& num, const BigInt& den) {
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    BigInt acc = 0;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * num + p.coeffs[static_cast<std::size_t>(i)] * pow(den, static_cast<unsigned>(p.degree() - i));
    return acc;
}

namespace {

std::vector<CharPoly> derivative_chain(const CharPoly& p) {
    std::vector<CharPoly> chain{p};
    while (chain.back().degree() > 0) {
        const CharPoly& prev = chain.back();
        CharPoly d;
        d.coeffs.resize(static_cast<std::size_t>(prev.degree()));
        for (int i = 1; i <= prev.degree(); ++i)
            d.coeffs[static_cast<std::size_t>(i - 1)] = prev.coeffs[static_cast<std::size_t>(i)] * i;
        chain.push_back(std::move(d));
    }
    return chain;
}

int sign_variations(const std::vector<CharPoly>& chain, const BigInt& num, const BigInt& den) {
    int variations = 0, last = 0;
    for (const CharPoly& q : chain) {
        BigInt value = evaluate_scaled(q, num, den);
        int s = value == 0 ? 0 : (value > 0 ? 1 : -1);
        if (s != 0) {
            if (last != 0 && s != last) ++variations;
            last = s;
        }
    }
    return variations;
}

}  // namespace

int count_roots_above(const CharPoly& p, const BigInt& num, const BigInt& den) {
    return sign_variations(derivative_chain(p), num, den);
}

RootOrder compare_largest_roots(const CharPoly& p, double lp, const CharPoly& q, double lq) {
    const auto chain_p = derivative_chain(p);
    const auto chain_q = derivative_chain(q);

    auto root_above = [](const std::vector<CharPoly>& chain, const BigRational& c) {
        return sign_variations(chain, numerator(c), denominator(c)) > 0;
    };

    // Dyadic bracket with both largest roots above lo and at most hi.
    const double pad = 1e-4;
    const long long scale = 1ll << 20;
    BigRational lo(static_cast<long long>(std::floor((std::min(lp, lq) - pad) * scale)), scale);
    BigRational hi(static_cast<long long>(std::ceil((std::max(lp, lq) + pad) * scale)), scale);

    for (int depth = 0; depth < 96; ++depth) {
        BigRational mid = (lo + hi) / 2;
        const bool p_above = root_above(chain_p, mid);
        const bool q_above = root_above(chain_q, mid);
        if (p_above != q_above) return p_above ? RootOrder::Greater : RootOrder::Less;
        if (p_above) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return RootOrder::Equal;
}

}  // namespace specex
