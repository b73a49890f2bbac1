#include "udom/examples.hpp"

#include "udom/errors.hpp"

namespace udom {

namespace {

Quiver three_vertex_quiver() {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"alpha", 0, 1}, {"beta", 1, 0}, {"gamma", 1, 2}};
    return q;
}

} // namespace

AlgebraPtr example_algebra_1(std::uint32_t p) {
    return path_algebra(three_vertex_quiver(), {{0, 1, 0}}, p);
}

AlgebraPtr example_algebra_2(std::uint32_t p) {
    return path_algebra(three_vertex_quiver(), {{0, 2}, {0, 1}}, p);
}

AlgebraPtr semisimple_example(std::uint32_t p) {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    return path_algebra(q, {}, p);
}

AlgebraPtr linear_a3_example(std::uint32_t p) {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    return path_algebra(q, {}, p);
}

AlgebraPtr nakayama_example(std::uint32_t p) {
    Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
    return path_algebra(q, {{0, 1}, {1, 2}, {2, 0}}, p);
}

std::vector<std::string> example_names() {
    return {"example-1", "example-2", "semisimple", "linear-a3", "nakayama"};
}

AlgebraPtr example_algebra(const std::string& name, std::uint32_t p) {
    if (name == "example-1") return example_algebra_1(p);
    if (name == "example-2") return example_algebra_2(p);
    if (name == "semisimple") return semisimple_example(p);
    if (name == "linear-a3") return linear_a3_example(p);
    if (name == "nakayama") return nakayama_example(p);
    throw InputError("unknown example algebra: " + name);
}

} // namespace udom
