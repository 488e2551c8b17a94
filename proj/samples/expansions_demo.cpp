// Walks through the basic library objects: bases, expansions, classifications.

#include <univoque/univoque.hpp>

#include <iostream>

using namespace univoque;

int main() {
    BaseValue phi = generalized_golden(1);
    FieldElement one = FieldElement::one(phi);

    std::cout << "golden ratio base: " << phi.describe() << "\n";
    std::cout << "beta(q)  = " << greedy_expand(one, phi).to_text() << "\n";
    std::cout << "alpha(q) = " << quasi_greedy_expand(one, phi).to_text() << "\n";
    std::cout << "lazy(1)  = " << lazy_expand(one, phi).to_text() << "\n\n";

    std::cout << "all expansions of 1:\n";
    for (const auto& schema : expansions_of_one(phi).schemas)
        std::cout << "  " << schema.to_text() << "\n";

    ExpansionTree tree = expansion_tree(one, phi, 6);
    std::cout << "\nprefix counts N_1..N_6:";
    for (size_t c : tree.counts) std::cout << " " << c;
    std::cout << "\n";

    BaseClassification c = classify_base(phi);
    std::cout << "\nclassification: " << to_text(c.tag) << " (k = " << *c.k << ")\n";
    return 0;
}
