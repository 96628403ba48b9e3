#pragma once

#include <prophom/complexes/elementary.hpp>
#include <prophom/complexes/poisson.hpp>
#include <prophom/freealg/pbw.hpp>

namespace prophom::complexes {

struct PbwStep
{
    int p = 0;
    long source_degree = -1;   // filtration degree of e_p
    long image_degree = -1;    // filtration degree of d(e_p)
    bool within_shift = false; // image_degree <= source_degree + shift
    bool symbol_matches = false;
    bool symbol_spans = false; // symbol(e_p) is a nonzero multiple of p_p
};

struct PbwFiltrationReport
{
    int shift = 0;
    std::vector<PbwStep> steps;
    bool ok = false;
};

/**
 * For p = 0..pmax: d_{ε,ε'} raises the PBW degree of e_p by at most the shift (0 if ε = ε',
 * 1 otherwise), and the component of d(e_p) in degree deg(e_p) + shift equals the graded
 * differential applied to the symbol of e_p.
 */
inline PbwFiltrationReport pbw_filtration_check(int eps, int epsp, int pmax)
{
    PbwFiltrationReport out;
    out.shift = eps == epsp ? 0 : 1;
    out.ok = true;
    for (int p = 0; p <= pmax; ++p) {
        PbwStep step;
        step.p = p;
        AssocPoly e = elementary_element(p);
        auto source = freealg::pbw_decompose(e);
        auto image = freealg::pbw_decompose(elementary_differential(eps, epsp, e, p));
        step.source_degree = source.degree();
        step.image_degree = image.degree();
        step.within_shift = image.degree() <= source.degree() + out.shift;
        const auto top = static_cast<std::size_t>(source.degree() + out.shift);
        step.symbol_matches = image.component(top) == graded_differential(eps, epsp, source.symbol(), p);
        SymLiePoly sym = source.symbol(), pn = poisson_element(p);
        if (!sym.is_zero()) {
            const auto& [t, c] = *sym.terms().begin();
            Rational ratio = pn.coeff(t);
            if (sgn(ratio) != 0) {
                pn *= c / ratio;
                step.symbol_spans = sym == pn;
            }
        }
        out.ok = out.ok && step.within_shift && step.symbol_matches && step.symbol_spans;
        out.steps.push_back(step);
    }
    return out;
}

}  // namespace prophom::complexes
