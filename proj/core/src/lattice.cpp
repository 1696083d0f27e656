#include "ddc/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "ddc/error.hpp"
#include "ddc/exact.hpp"
#include "ddc/families.hpp"

namespace ddc {
namespace {

BigInt det4(const Mat4& m) {
  // cofactor expansion along the first row, 2x2 minors cached
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return BigInt(m[r0][c0]) * m[r1][c1] - BigInt(m[r0][c1]) * m[r1][c0];
  };
  BigInt det = 0;
  for (int c = 0; c < 4; ++c) {
    int cols[3];
    int w = 0;
    for (int j = 0; j < 4; ++j)
      if (j != c) cols[w++] = j;
    BigInt m3 = BigInt(m[1][cols[0]]) * minor2(2, 3, cols[1], cols[2]) -
                BigInt(m[1][cols[1]]) * minor2(2, 3, cols[0], cols[2]) +
                BigInt(m[1][cols[2]]) * minor2(2, 3, cols[0], cols[1]);
    BigInt term = BigInt(m[0][c]) * m3;
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

Int floor_div(Int x, Int y) {
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

Int l1_norm(const Vec4& v) {
  Int s = 0;
  for (Int x : v) s += std::llabs(x);
  return s;
}

Vec4 combine(const Mat4& b, Int c1, Int c2, Int c3, Int c4) {
  Vec4 r{};
  for (int j = 0; j < 4; ++j)
    r[j] = c1 * b[0][j] + c2 * b[1][j] + c3 * b[2][j] + c4 * b[3][j];
  return r;
}

}  // namespace

Lattice lattice_basis(Int k) {
  if (k < 2) fail(errc::bad_parameter, "lattice basis needs k >= 2");
  Lattice lat;
  lat.k = k;
  lat.even = (k % 2 == 0);
  Int a = lat.even ? k / 2 : (k + 1) / 2;
  lat.a = a;
  if (lat.even) {
    lat.basis = {Vec4{-a - 1, a + 1, a, -a + 1}, Vec4{a - 1, a + 1, a + 1, -a},
                 Vec4{-a - 1, -a + 1, a + 1, -a}, Vec4{-a, -a, a, a + 1}};
  } else {
    lat.basis = {Vec4{-a + 1, a + 1, -a + 1, a}, Vec4{a + 1, a + 1, -a + 2, a - 1},
                 Vec4{-a - 1, a - 1, a - 1, -a}, Vec4{-a, a, a, a - 1}};
  }
  BigInt det = det4(lat.basis);
  BigInt order = family_order(8, k);
  if (det != -order)
    fail(errc::invariant_violated, "lattice determinant does not match the order formula at k=" +
                                       std::to_string(k));
  lat.index = to_int64(order);
  return lat;
}

std::optional<Vec4> lattice_member(const Lattice& lat, const Vec4& w) {
  // Cramer: replacing row i of the basis by w gives numerator of c_i
  BigInt den = det4(lat.basis);
  Vec4 c{};
  for (int i = 0; i < 4; ++i) {
    Mat4 m = lat.basis;
    m[i] = w;
    BigInt num = det4(m);
    if (num % den != 0) return std::nullopt;
    c[i] = to_int64(num / den);
  }
  return c;
}

std::array<Int, 3> quotient_multipliers(const Lattice& lat) {
  Int a = lat.a;
  std::array<Int, 3> m{};
  if (lat.even) {
    m[0] = 4 * a * a * a + 4 * a * a + 6 * a + 1;
    m[1] = 4 * a * a * a * a + 4 * a * a - 4 * a;
    m[2] = 4 * a * a * a * a + 4 * a * a - 2 * a;
  } else {
    m[0] = 4 * a * a * a - 4 * a * a + 6 * a - 1;
    m[1] = 4 * a * a * a * a - 8 * a * a * a + 8 * a * a - 8 * a;
    m[2] = 4 * a * a * a * a - 8 * a * a * a + 8 * a * a - 6 * a;
  }
  // each multiplier is certified: m*e1 - e_i must lie in the lattice,
  // which pins down the image of e_i in the cyclic quotient
  for (int i = 0; i < 3; ++i) {
    Vec4 w{m[i], 0, 0, 0};
    w[i + 1] = -1;
    if (!lattice_member(lat, w))
      fail(errc::verification_failed,
           "quotient multiplier m" + std::to_string(i + 2) + " failed the membership check");
    if (m[i] <= 0 || m[i] >= lat.index)
      fail(errc::invariant_violated, "quotient multiplier out of range");
  }
  return m;
}

std::array<Vec4, 16> OrthantVectors::signed_all(const Lattice& lat) const {
  std::array<Vec4, 16> out{};
  for (int i = 0; i < 4; ++i) out[i] = lat.basis[i];
  for (int i = 0; i < 4; ++i) out[4 + i] = extra[i];
  for (int i = 0; i < 8; ++i) {
    Vec4 neg;
    for (int j = 0; j < 4; ++j) neg[j] = -out[i][j];
    out[8 + i] = neg;
  }
  return out;
}

OrthantVectors orthant_representatives(const Lattice& lat) {
  Int k = lat.k;
  if (lat.even ? (k < 4) : (k < 5))
    fail(errc::bad_parameter, "orthant representatives need k >= 4 (even) or k >= 5 (odd)");
  OrthantVectors ov;
  const Mat4& b = lat.basis;
  if (lat.even) {
    ov.extra = {combine(b, 1, 0, -1, 1), combine(b, 1, -1, 0, -1), combine(b, 1, -1, -1, 0),
                combine(b, 0, 1, -1, 1)};
  } else {
    ov.extra = {combine(b, 1, -1, 0, -1), combine(b, 0, 1, 1, -1), combine(b, 1, 0, 1, -1),
                combine(b, 1, -1, -1, 0)};
  }
  // internal audit: all l1 norms are 2k+1 and the 16 signed copies occupy
  // each open orthant exactly once
  auto all16 = ov.signed_all(lat);
  bool seen[16] = {};
  for (const Vec4& v : all16) {
    if (l1_norm(v) != 2 * k + 1)
      fail(errc::invariant_violated, "orthant vector norm is not 2k+1");
    int mask = 0;
    for (int j = 0; j < 4; ++j) {
      if (v[j] == 0) fail(errc::invariant_violated, "orthant vector has a zero coordinate");
      if (v[j] > 0) mask |= 1 << j;
    }
    if (seen[mask]) fail(errc::invariant_violated, "two orthant vectors share a sign pattern");
    seen[mask] = true;
  }
  return ov;
}

namespace {

// row-style Hermite normal form: lower triangular, positive diagonal,
// off-diagonal entries reduced below the diagonal of their column
Mat4 hermite_form(Mat4 rows, Int expected_index) {
  for (int col = 3; col >= 0; --col) {
    for (;;) {
      int nz = -1, nz2 = -1;
      for (int r = col; r >= 0; --r) {
        if (rows[r][col] != 0) {
          if (nz < 0)
            nz = r;
          else {
            nz2 = r;
            break;
          }
        }
      }
      if (nz < 0) fail(errc::invariant_violated, "singular lattice basis");
      if (nz2 < 0) {
        std::swap(rows[nz], rows[col]);
        break;
      }
      // reduce the larger entry by the smaller one
      int big = nz, small = nz2;
      if (std::llabs(rows[big][col]) < std::llabs(rows[small][col])) std::swap(big, small);
      Int q = rows[big][col] / rows[small][col];
      for (int j = 0; j < 4; ++j) rows[big][j] -= q * rows[small][j];
    }
    if (rows[col][col] < 0)
      for (int j = 0; j < 4; ++j) rows[col][j] = -rows[col][j];
  }
  for (int i = 1; i < 4; ++i)
    for (int j = i - 1; j >= 0; --j) {
      Int q = floor_div(rows[i][j], rows[j][j]);
      for (int t = 0; t <= j; ++t) rows[i][t] -= q * rows[j][t];
    }
  Int prod = rows[0][0] * rows[1][1] * rows[2][2] * rows[3][3];
  if (prod != expected_index) fail(errc::invariant_violated, "Hermite form index mismatch");
  return rows;
}

Int reduce_encode(const Mat4& h, Vec4 x) {
  for (int i = 3; i >= 0; --i) {
    Int q = floor_div(x[i], h[i][i]);
    for (int t = 0; t <= i; ++t) x[t] -= q * h[i][t];
  }
  Int code = 0;
  for (int i = 3; i >= 0; --i) code = code * h[i][i] + x[i];
  return code;
}

}  // namespace

CoveringCertificate covering_check(Int k, CoveringMethod method) {
  Lattice lat = lattice_basis(k);
  auto m = quotient_multipliers(lat);
  CoveringCertificate cert;
  cert.k = k;
  cert.index = lat.index;
  cert.method = method;
  if (method == CoveringMethod::quotient_bfs) {
    std::vector<Int> raw{1, m[0], m[1], m[2]};
    auto g = make_graph(make_generator_set(lat.index, raw));
    cert.detail = diameter(g);
    cert.covered = cert.detail <= k;
    return cert;
  }
  if (k > 8)
    fail(errc::too_large,
         "direct covering enumeration is limited to k <= 8; use the quotient method");
  Mat4 h = hermite_form(lat.basis, lat.index);
  std::vector<char> hit(static_cast<size_t>(lat.index), 0);
  Int count = 0;
  Vec4 x{};
  for (x[0] = -k; x[0] <= k; ++x[0]) {
    Int r0 = k - std::llabs(x[0]);
    for (x[1] = -r0; x[1] <= r0; ++x[1]) {
      Int r1 = r0 - std::llabs(x[1]);
      for (x[2] = -r1; x[2] <= r1; ++x[2]) {
        Int r2 = r1 - std::llabs(x[2]);
        for (x[3] = -r2; x[3] <= r2; ++x[3]) {
          Int code = reduce_encode(h, x);
          if (!hit[static_cast<size_t>(code)]) {
            hit[static_cast<size_t>(code)] = 1;
            ++count;
          }
        }
      }
    }
  }
  cert.detail = count;
  cert.covered = (count == lat.index);
  return cert;
}

CoveringCertificate verify_covering(Int k) {
  CoveringCertificate q = covering_check(k, CoveringMethod::quotient_bfs);
  if (k <= 8) {
    CoveringCertificate d = covering_check(k, CoveringMethod::direct_lattice);
    if (q.covered != d.covered)
      fail(errc::methods_disagree, "quotient and direct covering checks disagree at k=" +
                                       std::to_string(k));
  }
  return q;
}

}  // namespace ddc
