#include "cgstat/forms.hpp"

namespace cgstat::mg {

std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::Sp: return "sp";
    case Family::GU: return "gu";
    case Family::OPlus: return "o+";
    case Family::OMinus: return "o-";
    case Family::OOdd: return "o";
  }
  return "?";
}

int matrix_field_order(Family f, int q) { return f == Family::GU ? q * q : q; }

void validate_family(Family f, int n, int q) {
  if (!ff::is_prime_power(q)) throw ArgumentError("q must be a prime power");
  if (n < 1 || n > kMaxDim) throw ArgumentError("n must lie in [1, 8]");
  if (matrix_field_order(f, q) > 256) throw ArgumentError("field too large for matrix tables");
  switch (f) {
    case Family::GL: return;
    case Family::GU: return;
    case Family::Sp:
      if (n % 2 != 0) throw ArgumentError("symplectic groups need even n");
      return;
    case Family::OPlus:
    case Family::OMinus:
      if (n % 2 != 0) throw ArgumentError("o+ and o- need even n");
      return;
    case Family::OOdd:
      if (n % 2 != 1) throw ArgumentError("odd orthogonal groups need odd n");
      if (q % 2 == 0) throw ArgumentError("odd orthogonal groups need odd q");
      return;
  }
}

int anisotropic_constant(const ff::Field& F) {
  for (int c = 0; c < F.order(); ++c) {
    ff::Poly f({F.element(c), F.one(), F.one()});
    if (ff::is_irreducible(F, f)) return c;
  }
  throw ConstructionError("no anisotropic quadratic");
}

FormSpec standard_form(const MatrixSpace& S, Family f) {
  const int n = S.dim();
  FormSpec form;
  form.gram = S.zero();
  form.quad = S.zero();
  switch (f) {
    case Family::GL: form.kind = FormKind::None; break;
    case Family::Sp: {
      form.kind = FormKind::Symplectic;
      const int m = n / 2;
      for (int i = 0; i < m; ++i) {
        form.gram(i, m + i) = 1;
        form.gram(m + i, i) = S.neg(1);
      }
      break;
    }
    case Family::GU:
      form.kind = FormKind::Unitary;
      for (int i = 0; i < n; ++i) form.gram(i, n - 1 - i) = 1;
      break;
    case Family::OPlus:
    case Family::OMinus:
    case Family::OOdd: {
      form.kind = FormKind::Quadratic;
      const int pairs = n / 2 - (f == Family::OMinus ? 1 : 0);
      for (int i = 0; i < pairs; ++i) form.quad(2 * i, 2 * i + 1) = 1;
      if (f == Family::OMinus) {
        const int a = n - 2;
        form.quad(a, a) = 1;
        form.quad(a, a + 1) = 1;
        form.quad(a + 1, a + 1) = static_cast<std::uint8_t>(anisotropic_constant(S.field()));
      }
      if (f == Family::OOdd) form.quad(n - 1, n - 1) = 1;
      form.gram = S.add(form.quad, S.transpose(form.quad));
      form.epsilon = (f == Family::OPlus) ? 1 : (f == Family::OMinus ? -1 : 0);
      break;
    }
  }
  return form;
}

std::uint8_t form_value(const MatrixSpace& S, const FormSpec& form, const Vec& u, const Vec& v) {
  Vec w = v;
  if (form.kind == FormKind::Unitary) {
    const int half = S.field().degree() / 2;
    for (int i = 0; i < S.dim(); ++i) w[i] = S.field().frobenius({w[i]}, half).v;
  }
  Vec gw = S.apply(form.gram, w);
  std::uint8_t s = 0;
  for (int i = 0; i < S.dim(); ++i) s = S.add(s, S.mul(u[i], gw[i]));
  return s;
}

std::uint8_t quadratic_value(const MatrixSpace& S, const FormSpec& form, const Vec& v) {
  Vec uv = S.apply(form.quad, v);
  std::uint8_t s = 0;
  for (int i = 0; i < S.dim(); ++i) s = S.add(s, S.mul(v[i], uv[i]));
  return s;
}

bool preserves_form(const MatrixSpace& S, const FormSpec& form, const Matrix& g) {
  switch (form.kind) {
    case FormKind::None: return true;
    case FormKind::Symplectic: return S.mul(S.transpose(g), S.mul(form.gram, g)) == form.gram;
    case FormKind::Unitary: {
      const Matrix gs = S.frobenius(g, S.field().degree() / 2);
      return S.mul(S.transpose(g), S.mul(form.gram, gs)) == form.gram;
    }
    case FormKind::Quadratic: {
      const Matrix m = S.mul(S.transpose(g), S.mul(form.quad, g));
      const int n = S.dim();
      for (int i = 0; i < n; ++i) {
        if (m(i, i) != form.quad(i, i)) return false;
        for (int j = i + 1; j < n; ++j)
          if (S.add(m(i, j), m(j, i)) != form.quad(i, j)) return false;
      }
      return true;
    }
  }
  return false;
}

Integer group_order(Family f, int n, int q) {
  validate_family(f, n, q);
  auto qp = [q](long e) { return ipow(q, static_cast<unsigned long>(e)); };
  Integer r = 1;
  switch (f) {
    case Family::GL:
      for (int i = 0; i < n; ++i) r *= qp(n) - qp(i);
      return r;
    case Family::Sp: {
      const int m = n / 2;
      r = qp(static_cast<long>(m) * m);
      for (int i = 1; i <= m; ++i) r *= qp(2 * i) - 1;
      return r;
    }
    case Family::GU:
      r = qp(static_cast<long>(n) * (n - 1) / 2);
      for (int i = 1; i <= n; ++i) r *= qp(i) + ((i % 2 == 0) ? -1 : 1);
      return r;
    case Family::OPlus:
    case Family::OMinus: {
      const int m = n / 2;
      r = 2 * qp(static_cast<long>(m) * (m - 1));
      r *= qp(m) + ((f == Family::OPlus) ? -1 : 1);
      for (int i = 1; i < m; ++i) r *= qp(2 * i) - 1;
      return r;
    }
    case Family::OOdd: {
      const int m = n / 2;
      r = 2 * qp(static_cast<long>(m) * m);
      for (int i = 1; i <= m; ++i) r *= qp(2 * i) - 1;
      return r;
    }
  }
  return r;
}

int kernel_index(Family f, int q) {
  switch (f) {
    case Family::GL: return q - 1;
    case Family::GU: return q + 1;
    case Family::Sp: return 1;
    default: return 2;
  }
}

}  // namespace cgstat::mg
