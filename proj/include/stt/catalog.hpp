#pragma once

#include "stt/algebra.hpp"

namespace stt {

// Named algebras: A_<m>, Lambda_<m>, D3, D4, R4, H4, K4, L5, U4, N5, M4, P4,
// Example26, F, the tame Schur composites ("S(2,11)_p2", ...), and the
// central quotients D3_tilde, D4_tilde, R4_tilde, H4_tilde, K4_tilde,
// U4_tilde.  char_override = 0 keeps the entry's default characteristic.
BoundAlgebra catalog(const std::string& name, uint32_t char_override = 0, int cap_override = 0);
bool catalog_has(const std::string& name);
std::vector<std::string> catalog_names();

// Named quivers shipped for the shape screens (block quivers of wild Schur
// algebras): s3_6_p2, s3_7_p2, s3_8_p2, s4_4_p2, s3_6_p3, s3_10_p3, s4_7_p3,
// s4_8_p3, s3_2p_p5, plus s2_<r>_p<p> generated from the arrow recursion.
Quiver catalog_quiver(const std::string& name);
bool catalog_quiver_has(const std::string& name);
std::vector<std::string> catalog_quiver_names();

}  // namespace stt
