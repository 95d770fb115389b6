#pragma once

#include <string>

#include "lsb/superalgebra.hpp"

namespace lsb {

/// Syntax-level problem in an .lsa file (malformed line, unknown basis name,
/// bad field modulus). Axiom-level problems (grading, sign rule, Jacobi)
/// surface as AxiomError instead.
class LsaSyntaxError : public Error {
 public:
  LsaSyntaxError(int line, int col, const std::string& message)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

/// Parse the .lsa text format:
///
///   # comment
///   field 5            (or: field rational)
///   even x1 x2 z
///   odd y1
///   [x1,x2] = 1*z
///   [y1,y1] = z
///
/// Omitted brackets are zero; the reverse of a declared pair is derived from
/// the sign rule, and declaring both orders is accepted only when consistent.
/// The result is verified against all three axioms.
LieSuperAlgebra parse_lsa(const std::string& text);

/// Inverse of parse_lsa up to algebra equality.
std::string serialize_lsa(const LieSuperAlgebra& L);

LieSuperAlgebra load_lsa_file(const std::string& path);
void save_lsa_file(const LieSuperAlgebra& L, const std::string& path);

}  // namespace lsb
