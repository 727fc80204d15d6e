#pragma once

#include "cgstat/matrix.hpp"
#include "cgstat/rational.hpp"

#include <string>

namespace cgstat::mg {

enum class Family { GL, Sp, GU, OPlus, OMinus, OOdd };

enum class FormKind { None, Symplectic, Unitary, Quadratic };

// Gram matrix of the bilinear/sesquilinear form; for quadratic forms the
// upper-triangular matrix U with Q(v) = v^T U v and gram = U + U^T.
struct FormSpec {
  FormKind kind = FormKind::None;
  Matrix gram;
  Matrix quad;
  int epsilon = 0;  // +1, -1, or 0 for odd dimension / non-orthogonal
};

std::string family_name(Family f);

// Field over which matrices live: q^2 for unitary groups, q otherwise.
int matrix_field_order(Family f, int q);

// Throws ArgumentError on unsupported (family, n, q).
void validate_family(Family f, int n, int q);

FormSpec standard_form(const MatrixSpace& S, Family f);

// B(u, v) = u^T G v (unitary: u^T G v^sigma).
std::uint8_t form_value(const MatrixSpace& S, const FormSpec& form, const Vec& u, const Vec& v);
// Q(v) for quadratic forms.
std::uint8_t quadratic_value(const MatrixSpace& S, const FormSpec& form, const Vec& v);

bool preserves_form(const MatrixSpace& S, const FormSpec& form, const Matrix& g);

// |I_n(q)| and the index of L_n(q) in it.
Integer group_order(Family f, int n, int q);
int kernel_index(Family f, int q);

// Least c with z^2 + z + c irreducible over GF(q).
int anisotropic_constant(const ff::Field& F);

}  // namespace cgstat::mg
