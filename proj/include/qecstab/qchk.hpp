#pragma once

#include "qecstab/stabilizer.hpp"

#include <iosfwd>
#include <string>

namespace qecstab {

// QCHK v1 check-matrix text format:
//   QCHK v1 n=<n> r=<r>
// followed by r lines of exactly 2n characters from {0,1}; the first n are
// the hx row, the last n the hz row. Writers emit exactly this layout and
// readers reject anything else.
void write_qchk(std::ostream& out, const CheckMatrix& check);
void write_qchk_file(const std::string& path, const CheckMatrix& check);

CheckMatrix read_qchk(std::istream& in);
CheckMatrix read_qchk_file(const std::string& path);

} // namespace qecstab
