#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricgb/lattice.hpp"

namespace toricgb {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix file: header "d n", then d rows of n integers.
IntMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMatrix& a);

/// Vector set file: header "N n", then N rows of n integers. Writing
/// canonicalizes signs, removes duplicates and sorts by 1-norm, then
/// lexicographically.
std::vector<SignedVector> read_vector_set(std::istream& in);
void write_vector_set(std::ostream& out, std::vector<SignedVector> vs, std::size_t n);

IntMatrix read_matrix_file(const std::string& path);
std::vector<SignedVector> read_vector_set_file(const std::string& path);

}  // namespace toricgb
