#pragma once

#include <span>

#include "pathhom/chain.hpp"

namespace pathhom {

// Forms are Chains read through the dual basis e^x.

// sum_x omega_x v^x. Throws InputError on grade mismatch.
Rational pairing(const Chain& omega, const Chain& v);

// (d omega)_{i0..i(p+1)} = sum_q (-1)^q omega_{i0..^iq..i(p+1)} over paths on
// vertex_set. Regular mode keeps only regular output paths.
Chain exterior_differential(const Chain& omega, std::span<const Vertex> vertex_set,
                            Regularity r = Regularity::regular);

// (phi psi)_{i0..i(p+q)} = phi_{i0..ip} psi_{ip..i(p+q)}.
Chain concatenate_forms(const Chain& phi, const Chain& psi);

// The grade 0 form equal to 1 at every vertex.
Chain unit_form(std::span<const Vertex> vertex_set);

}  // namespace pathhom
