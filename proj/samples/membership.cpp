// Decide whether a few matrices preserve the unfolded surface.
#include <iostream>

#include <veech/parse.hpp>
#include <veech/veech_group.hpp>

int main() {
    using namespace veech;
    const TranslationSurface s = unfold_triangle(1, 4, 7, 12);
    const MembershipOracle oracle(s);
    const std::pair<const char*, bool> cases[] = {
        {"1,10+6*sqrt(3),0,1", true},
        {"1,0,0,-1", true},
        {"1,1,0,1", false},
    };
    bool ok = true;
    for (const auto& [text, expected] : cases) {
        const Mat2 m = parse_mat2(text);
        const bool member = oracle.contains(m);
        std::cout << m.to_string() << (member ? " is" : " is not") << " in the Veech group\n";
        ok = ok && member == expected;
    }
    return ok ? 0 : 1;
}
