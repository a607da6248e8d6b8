#pragma once

#include "qalg/algebra.hpp"

// Shared small algebras used across the test suites.
namespace fixtures {

// Two vertices 1, 2 with arrows a: 1 -> 2, b: 2 -> 1 and the alternating
// length-3 relation "b a b" (starting at vertex 2). Basis: e1, e2, a, b,
// a*b, b*a, a*b*a; the projectives have Loewy series 1/2/1/2 and 2/1/2.
inline qalg::MonomialPresentation r32() {
    qalg::Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    qalg::MonomialPresentation p;
    p.quiver = q;
    p.relations = {qalg::PathWord{1, {1, 0, 1}}};
    return p;
}

// Linear A2 quiver: a: 1 -> 2, no relations (hereditary).
inline qalg::MonomialPresentation a2() {
    qalg::Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return {q, {}};
}

// One vertex with a loop x and relation x*x: the dual numbers k[x]/(x^2).
inline qalg::MonomialPresentation dual_numbers() {
    qalg::Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    qalg::MonomialPresentation p;
    p.quiver = q;
    p.relations = {qalg::PathWord{0, {0, 0}}};
    return p;
}

// One vertex, no arrows: the base field.
inline qalg::MonomialPresentation point() {
    qalg::Quiver q;
    q.vertices = {"1"};
    return {q, {}};
}

}  // namespace fixtures
