// Finds the V-component around a rational base and checks the finite-type
// description of its univoque sequences against the lexicographic test.

#include <univoque/univoque.hpp>

#include <iostream>
#include <random>

using namespace univoque;

int main() {
    BaseValue q = base_from_rational(Int(17), Int(10), 1);
    ComponentData comp = find_next_V_base(q, 6);
    std::cout << "component right endpoint: " << comp.q2.describe() << "\n";
    std::cout << "pattern: " << to_string(comp.alpha_pattern) << "\n";
    std::cout << "avoid:";
    for (const auto& f : comp.forbidden)
        std::cout << " " << to_string(f) << " " << to_string(reflect(f));
    std::cout << "\n";

    std::mt19937 rng(42);
    std::uniform_int_distribution<int> digit(0, 1);
    std::uniform_int_distribution<size_t> len(1, 5);
    int checked = 0, in_count = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<int> pre(len(rng)), per(len(rng));
        for (auto& d : pre) d = digit(rng);
        for (auto& d : per) d = digit(rng);
        EPSequence s(Word(pre, 1), Word(per, 1));

        bool avoids = true;
        for (size_t i = 0; i < s.span() && avoids; ++i) {
            for (const auto& f : comp.forbidden) {
                bool hit = true, hit_r = true;
                for (size_t j = 0; j < f.size(); ++j) {
                    if (s.digit(i + j) != f[j]) hit = false;
                    if (1 - s.digit(i + j) != f[j]) hit_r = false;
                }
                if (hit || hit_r) {
                    avoids = false;
                    break;
                }
            }
        }
        Verdict v = is_univoque_seq(s, q, 128);
        if (v.is_in() != avoids) {
            std::cout << "MISMATCH at " << to_string(s) << "\n";
            return 1;
        }
        ++checked;
        if (avoids) ++in_count;
    }
    std::cout << checked << " sequences checked, " << in_count
              << " univoque; finite-type test agrees everywhere\n";
    return 0;
}
