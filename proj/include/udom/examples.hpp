#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udom/algebra.hpp"

namespace udom {

/* Built-in example algebras, available to the CLI and the test drivers by
 * name.  The first two live on the quiver with vertices 1, 2, 3 and arrows
 * alpha: 1->2, beta: 2->1, gamma: 2->3; their flat-dimension behaviour makes
 * the two sides of the regular bimodule genuinely asymmetric. */

/* Bound by the word alpha beta alpha (walk 1->2->1->2); dimension 11. */
AlgebraPtr example_algebra_1(std::uint32_t p);

/* Bound by the words alpha gamma and alpha beta; dimension 7. */
AlgebraPtr example_algebra_2(std::uint32_t p);

/* F_p x F_p x F_p: three isolated vertices. */
AlgebraPtr semisimple_example(std::uint32_t p);

/* Hereditary linear quiver 1 -> 2 -> 3; dimension 6. */
AlgebraPtr linear_a3_example(std::uint32_t p);

/* Cyclic three-vertex quiver with radical square zero: a self-injective
 * Nakayama algebra of dimension 6. */
AlgebraPtr nakayama_example(std::uint32_t p);

/* Registry keys: example-1, example-2, semisimple, linear-a3, nakayama. */
std::vector<std::string> example_names();

/* Lookup by registry key; throws InputError for unknown names. */
AlgebraPtr example_algebra(const std::string& name, std::uint32_t p);

} // namespace udom
