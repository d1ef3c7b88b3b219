// The strip theorem by hand: F(v) = (zeta(3/2 - iv) + zeta(1/2 + iv)) / cosh(pi v)
// changes sign under v -> -i - v, so its integral over the line is -pi i times
// the residue at v = -i/2.

#include <glasser/master.hpp>

#include <cstdio>

using namespace glasser;

int main()
{
    const analytic_fn F = [](cplx v) {
        return (riemann_zeta(1.5 - I * v) + riemann_zeta(0.5 + I * v)) / std::cosh(pi * v);
    };
    const double b = 1.0;

    std::printf("criterion deviation: %.3e\n", check_criterion(F, b, criterion_kind::antisymmetric, {}, 64));

    const integration_result q = integrate_real_line([&](double v) { return F(cplx(v)); }, pi);
    std::printf("quadrature:          %.15f  (error estimate %.1e, %d evaluations)\n", q.value.re(),
                q.error_estimate, static_cast<int>(q.evaluations));

    const cplx residue = numeric_residue(F, -0.5 * I, 0.25);
    const std::vector<pole_spec> poles = {make_pole(-0.5 * I, strip_spec(b), 1, residue)};
    std::printf("residue at -i/2:     %+.15f %+.15fi\n", residue.real(), residue.imag());
    std::printf("residue sum:         %.15f\n", rhs_from_residues(poles, criterion_kind::antisymmetric, 1).real());
    std::printf("2 gamma:             %.15f\n", 2.0 * euler_gamma);
}
