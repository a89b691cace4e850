#pragma once

#include "qecstab/stabilizer.hpp"

#include <string>

namespace qecstab {

// Builds a stabilizer code from a constructor expression:
//
//   steane | shor | bitflip | phaseflip
//   surface(L) | toric(L)
//   css(C1, C2) | hgp(C1, C2)          with C = rep(L) | hamming74
//   lp(l, [A1], [A2])                  poly matrices: rows ';', entries ','
//                                      each entry l coefficient bits
//   concat(OUTER, INNER)               nested quantum expressions
//   qchk(path)                         load a QCHK v1 file
//
// A spec that names no known constructor but looks like a path (contains '/'
// or '.') is treated as a QCHK file.
StabilizerCode build_code(const std::string& spec);

} // namespace qecstab
