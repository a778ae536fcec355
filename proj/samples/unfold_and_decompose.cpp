// Unfold the (pi/12, pi/3, 7pi/12) triangle and list the horizontal cylinders.
#include <iostream>

#include <veech/cylinders.hpp>
#include <veech/triangulation.hpp>

int main() {
    using namespace veech;
    const TranslationSurface s = unfold_triangle(1, 4, 7, 12);
    const ConePointReport cp = cone_points(s);
    std::cout << s.num_polygons() << " polygons, genus " << cp.genus << "\n";
    for (const auto& [angle, count] : cp.cones) std::cout << "  cone angle " << angle.to_string() << " x" << count << "\n";

    const CylinderDecomposition dec = decompose(s, Direction::horizontal());
    for (const auto& cyl : dec.cylinders)
        std::cout << "  cylinder: circumference " << cyl.circumference.to_string() << ", height "
                  << cyl.height.to_string() << ", modulus " << cyl.modulus.to_string() << "\n";
    if (const auto cls = commensurability_class(dec)) std::cout << "gcd of moduli " << cls->gcd.to_string() << "\n";
    return dec.cylinders.size() == 4 ? 0 : 1;
}
