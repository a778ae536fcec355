// Run the lattice certificate and print each step.
#include <iostream>

#include <veech/hyperbolic.hpp>

int main() {
    using namespace veech;
    const CertificateReport rep = lattice_certificate(unfold_triangle(1, 4, 7, 12));
    for (const auto& step : rep.steps) {
        std::cout << (step.passed ? "[ok]   " : "[fail] ") << step.name << "\n";
        for (const auto& [k, v] : step.values) std::cout << "         " << k << " = " << v << "\n";
    }
    std::cout << rep.verdict() << "\n";
    return rep.confirmed ? 0 : 1;
}
