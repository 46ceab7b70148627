#include "locus/resultant.hpp"

#include "locus/errors.hpp"
#include "locus/matrix.hpp"

namespace locus {

Polynomial coeff_of_power(const Polynomial& f, std::size_t var, std::uint32_t k) {
    Polynomial out(f.ring());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] != k) continue;
        Monomial mm = m;
        mm[var] = 0;
        out.add_term(mm, c);
    }
    return out;
}

Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
    if (f.is_zero() && g.is_zero()) throw UsageError("resultant of two zero polynomials");
    const RingPtr& R = f.ring();
    if (!R->compatible(*g.ring())) throw UsageError("resultant: ring mismatch");
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(R);

    std::uint32_t df = f.degree_in(var);
    std::uint32_t dg = g.degree_in(var);
    std::size_t n = static_cast<std::size_t>(df) + dg;
    if (n == 0) return Polynomial::one(R); // two nonzero constants

    std::vector<Polynomial> fc(df + 1), gc(dg + 1); // descending: fc[0] = lead
    for (std::uint32_t k = 0; k <= df; ++k) fc[k] = coeff_of_power(f, var, df - k);
    for (std::uint32_t k = 0; k <= dg; ++k) gc[k] = coeff_of_power(g, var, dg - k);

    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial::zero(R)));
    for (std::uint32_t r = 0; r < dg; ++r)
        for (std::uint32_t k = 0; k <= df; ++k) m[r][r + k] = fc[k];
    for (std::uint32_t r = 0; r < df; ++r)
        for (std::uint32_t k = 0; k <= dg; ++k) m[dg + r][r + k] = gc[k];

    return poly_determinant(m, [](const Polynomial& p) { return p; });
}

} // namespace locus
