#pragma once

#include <array>
#include <optional>

#include "ddc/graph.hpp"

namespace ddc {

using Vec4 = std::array<Int, 4>;
using Mat4 = std::array<Vec4, 4>;

// Integer sublattice of Z^4 whose quotient realizes the degree-8 family
// graph: index equals the order formula and the quotient group is cyclic.
// The basis shape depends on the parity of k through a = k/2 or (k+1)/2.
struct Lattice {
  Int k = 0;
  Int a = 0;
  bool even = false;
  Mat4 basis;  // rows v1..v4
  Int index = 0;
};

Lattice lattice_basis(Int k);  // k >= 2

// Integer coefficients c with c * basis = w, if w lies in the lattice.
std::optional<Vec4> lattice_member(const Lattice& lat, const Vec4& w);

// Images of the unit vectors e2, e3, e4 in the cyclic quotient, i.e. the
// generators {1, m2, m3, m4} of the quotient graph. Each m is certified by
// exhibiting m*e1 - e_i as a lattice member before being returned.
std::array<Int, 3> quotient_multipliers(const Lattice& lat);

// Eight lattice vectors v1..v8 (the basis plus four combinations) whose
// signed copies +-v meet all 16 orthants, all with l1 norm 2k+1. These drive
// the geometric covering argument. Needs k >= 4 (even) or k >= 5 (odd).
struct OrthantVectors {
  Mat4 extra;  // v5..v8
  std::array<Vec4, 16> signed_all(const Lattice& lat) const;
};

OrthantVectors orthant_representatives(const Lattice& lat);

enum class CoveringMethod {
  quotient_bfs,    // BFS on the cyclic quotient graph, any k
  direct_lattice,  // residue enumeration against the l1 ball, k <= 8
};

struct CoveringCertificate {
  Int k = 0;
  Int index = 0;
  CoveringMethod method = CoveringMethod::quotient_bfs;
  bool covered = false;
  Int detail = 0;  // quotient_bfs: quotient diameter; direct_lattice: classes hit
};

// Does the l1 ball of radius k plus the lattice tile all of Z^4? True exactly
// when the degree-8 family graph at this k has diameter at most k.
CoveringCertificate covering_check(Int k, CoveringMethod method);

// Runs quotient_bfs and, for k <= 8, direct_lattice; the two must agree.
CoveringCertificate verify_covering(Int k);

}  // namespace ddc
