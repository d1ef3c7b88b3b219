// A few values from the special-function kernel.

#include <glasser/specfun.hpp>

#include <cstdio>

using namespace glasser;

int main()
{
    const cplx points[] = {cplx(2.0), cplx(0.5), cplx(-1.0), cplx(0.5, 14.134725142), cplx(3.0, -7.0)};
    std::printf("%-24s %-44s\n", "s", "zeta(s)");
    for (cplx s : points) {
        const cplx z = riemann_zeta(s);
        std::printf("%10.6f %+10.6fi   %+.15f %+.15fi\n", s.real(), s.imag(), z.real(), z.imag());
    }

    std::printf("\nStieltjes constants\n");
    for (int j = 0; j <= 5; ++j)
        std::printf("  gamma_%d = %+.15f\n", j, stieltjes_constant(j));

    std::printf("\nEuler numbers\n ");
    for (int k = 0; k <= 12; k += 2)
        std::printf(" E_%d = %s", k, euler_number(k).str().c_str());
    std::printf("\n\nzeta'(-2) = %.15f, xi(1/2) = %.15f\n", zeta_derivative(-2.0, 1).value.real(),
                xi(0.5).real());
}
