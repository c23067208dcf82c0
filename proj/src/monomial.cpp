#include "spintor/monomial.hpp"

#include "spintor/error.hpp"
#include "spintor/perm.hpp"

namespace spintor {

const char* unit_str(Unit u) {
  switch (u.e & 3) {
    case 0: return "1";
    case 1: return "i";
    case 2: return "-1";
    default: return "-i";
  }
}

std::pair<int, int> unit_value(Unit u) {
  switch (u.e & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

MonomialMatrix MonomialMatrix::identity(int dim) {
  MonomialMatrix m;
  m.dim = dim;
  m.row = identity_perm(dim);
  m.coeff.assign(dim, unit_one);
  return m;
}

bool MonomialMatrix::well_formed() const {
  return dim > 0 && static_cast<int>(row.size()) == dim &&
         static_cast<int>(coeff.size()) == dim && is_permutation(row);
}

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
  return a.dim == b.dim && a.row == b.row && a.coeff == b.coeff;
}

MonomialMatrix mono_matmul(const MonomialMatrix& m, const MonomialMatrix& n) {
  if (m.dim != n.dim)
    fail("mono_matmul: dimension mismatch " + std::to_string(m.dim) + " vs " +
         std::to_string(n.dim));
  // Column j of N carries coeff n[j] into row n.row[j]; M then carries that
  // row onward, multiplying by its own coefficient there.
  MonomialMatrix r;
  r.dim = m.dim;
  r.row.resize(r.dim);
  r.coeff.resize(r.dim);
  for (int j = 0; j < r.dim; ++j) {
    const int mid = n.row[j];
    r.row[j] = m.row[mid];
    r.coeff[j] = unit_mul(m.coeff[mid], n.coeff[j]);
  }
  return r;
}

MonomialMatrix mono_kron(const MonomialMatrix& m, const MonomialMatrix& n) {
  MonomialMatrix r;
  r.dim = m.dim * n.dim;
  r.row.resize(r.dim);
  r.coeff.resize(r.dim);
  for (int j1 = 0; j1 < m.dim; ++j1)
    for (int j2 = 0; j2 < n.dim; ++j2) {
      const int j = j1 * n.dim + j2;
      r.row[j] = m.row[j1] * n.dim + n.row[j2];
      r.coeff[j] = unit_mul(m.coeff[j1], n.coeff[j2]);
    }
  return r;
}

MonomialMatrix scalar_mul(Unit u, const MonomialMatrix& m) {
  MonomialMatrix r = m;
  for (auto& c : r.coeff)
    c = unit_mul(u, c);
  return r;
}

std::vector<int> shape_of(const MonomialMatrix& m) { return m.row; }

EntryType type_of(const MonomialMatrix& m) {
  const bool real = unit_is_real(m.coeff[0]);
  for (const Unit c : m.coeff)
    if (unit_is_real(c) != real)
      throw MixedTypeError("type_of: entries mix {1,-1} with {i,-i}");
  return real ? EntryType::real : EntryType::imaginary;
}

MonomialMatrix mat_i2() { return MonomialMatrix::identity(2); }

MonomialMatrix mat_e1() {
  return MonomialMatrix{2, {0, 1}, {unit_i, unit_minus_i}};
}

MonomialMatrix mat_e2() {
  return MonomialMatrix{2, {1, 0}, {unit_i, unit_i}};
}

MonomialMatrix mat_e12() {
  return MonomialMatrix{2, {1, 0}, {unit_one, unit_minus_one}};
}

MonomialMatrix mat_b() {
  return MonomialMatrix{2, {1, 0}, {unit_i, unit_minus_i}};
}

std::vector<std::pair<int, int>> to_dense(const MonomialMatrix& m) {
  if (m.dim > 64)
    fail("to_dense: dim " + std::to_string(m.dim) + " beyond oracle scale 64");
  std::vector<std::pair<int, int>> dense(
      static_cast<std::size_t>(m.dim) * m.dim, {0, 0});
  for (int j = 0; j < m.dim; ++j)
    dense[static_cast<std::size_t>(m.row[j]) * m.dim + j] = unit_value(m.coeff[j]);
  return dense;
}

std::string mono_str(const MonomialMatrix& m) {
  // Fixed-width cells so the sign/zero pattern lines up by eye.
  std::string out;
  for (int r = 0; r < m.dim; ++r) {
    out += "[ ";
    for (int j = 0; j < m.dim; ++j) {
      const char* cell = (m.row[j] == r) ? unit_str(m.coeff[j]) : ".";
      out += cell;
      for (std::size_t pad = std::string(cell).size(); pad < 3; ++pad)
        out += ' ';
    }
    out += "]\n";
  }
  return out;
}

} // namespace spintor
