#pragma once

// Quaternions over Z[sqrt5, 1/2], the 4-simplex vertices q_0..q_4 and the
// representation rho: g_i -> q_i.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freesimplex/freewords.hpp"
#include "freesimplex/goldfield.hpp"

namespace freesimplex {

class NotUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Components along 1, i_1, i_2, i_3.  Multiplication is Hamilton's
/// (i_1 i_2 = i_3).
struct Quaternion5 {
  std::array<Dyadic5, 4> c;

  Quaternion5() = default;
  Quaternion5(Dyadic5 c0, Dyadic5 c1, Dyadic5 c2, Dyadic5 c3) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Quaternion5 one() { return {1, 0, 0, 0}; }
  /// i_0 = 1, i_1, i_2, i_3.
  static Quaternion5 unit(int k);

  const Dyadic5& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }

  Quaternion5& operator+=(const Quaternion5& y);
  Quaternion5& operator-=(const Quaternion5& y);
  friend Quaternion5 operator+(Quaternion5 x, const Quaternion5& y) { return x += y; }
  friend Quaternion5 operator-(Quaternion5 x, const Quaternion5& y) { return x -= y; }
  friend Quaternion5 operator*(const Quaternion5& x, const Quaternion5& y);
  friend Quaternion5 operator*(const Dyadic5& s, const Quaternion5& x);
  Quaternion5 operator-() const;
  friend bool operator==(const Quaternion5&, const Quaternion5&) = default;

  std::string to_string() const;
};

inline Quaternion5 qmul(const Quaternion5& x, const Quaternion5& y) { return x * y; }
Quaternion5 qconj(const Quaternion5& x);
Dyadic5 qnorm2(const Quaternion5& x);
/// Inverse of a unit quaternion; throws NotUnit otherwise.
Quaternion5 qinv(const Quaternion5& x);

/// Real part.  x_k = -trace(i_k x) for k >= 1 with this normalization.
inline const Dyadic5& trace(const Quaternion5& x) { return x.c[0]; }
/// x_k: the real part for k = 0, the i_k coefficient otherwise.
const Dyadic5& component(const Quaternion5& x, int k);

/// Euclidean inner product of the coefficient vectors.
Dyadic5 inner(const Quaternion5& x, const Quaternion5& y);

/// i_k x i_k^-1: negates the coefficients other than 1 and i_k.
Quaternion5 adjoint(int k, const Quaternion5& x);

Quaternion5 galois(const Quaternion5& x);

struct VertexTable {
  std::array<Quaternion5, 5> q;     // q_0 = 1, q_1..q_4
  std::array<Quaternion5, 4> units;  // 1, i_1, i_2, i_3

  /// The regular 4-simplex with q_0 = 1 and q_i = (-1/4, ±√5/4, ±√5/4, ±√5/4).
  static const VertexTable& standard();

  /// q_index^sign.
  Quaternion5 letter(const Letter& l) const;
};

Quaternion5 rho(const Word& w, const VertexTable& table = VertexTable::standard());

struct AxiomCheck {
  std::string name;
  bool holds = false;
};

/// Unit norms, zero vertex sum, pairwise inner products -1/4, the Ad table
/// Ad_{i_k}(q_j) = q_{pi_k(j)} with its sign columns, and a positive volume.
std::vector<AxiomCheck> check_vertex_axioms(const VertexTable& table = VertexTable::standard());

/// Signs of the i_k coefficient of q_1..q_4 (rows k = 1..3).
inline constexpr int kAdSignTable[3][4] = {{+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};

/// 4x4 determinant with rows q_i - q_0, i = 1..4, columns (c0, c1, c2, c3).
Dyadic5 simplex_volume_det(const VertexTable& table = VertexTable::standard());

}  // namespace freesimplex
