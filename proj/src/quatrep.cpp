#include "freesimplex/quatrep.hpp"

namespace freesimplex {

Quaternion5 Quaternion5::unit(int k) {
  switch (k) {
    case 0: return {1, 0, 0, 0};
    case 1: return {0, 1, 0, 0};
    case 2: return {0, 0, 1, 0};
    case 3: return {0, 0, 0, 1};
    default: throw std::out_of_range("quaternion unit index must be in 0..3");
  }
}

Quaternion5& Quaternion5::operator+=(const Quaternion5& y) {
  for (std::size_t i = 0; i < 4; ++i) c[i] += y.c[i];
  return *this;
}

Quaternion5& Quaternion5::operator-=(const Quaternion5& y) {
  for (std::size_t i = 0; i < 4; ++i) c[i] -= y.c[i];
  return *this;
}

Quaternion5 operator*(const Quaternion5& x, const Quaternion5& y) {
  const auto& [a0, a1, a2, a3] = x.c;
  const auto& [b0, b1, b2, b3] = y.c;
  return {
      a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
      a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
      a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
      a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
  };
}

Quaternion5 operator*(const Dyadic5& s, const Quaternion5& x) {
  return {s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]};
}

Quaternion5 Quaternion5::operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

std::string Quaternion5::to_string() const {
  return "(" + c[0].to_string() + ", " + c[1].to_string() + ", " + c[2].to_string() + ", " + c[3].to_string() + ")";
}

Quaternion5 qconj(const Quaternion5& x) { return {x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }

Dyadic5 qnorm2(const Quaternion5& x) { return inner(x, x); }

Dyadic5 inner(const Quaternion5& x, const Quaternion5& y) {
  return x.c[0] * y.c[0] + x.c[1] * y.c[1] + x.c[2] * y.c[2] + x.c[3] * y.c[3];
}

Quaternion5 qinv(const Quaternion5& x) {
  if (!(qnorm2(x) == Dyadic5(1))) throw NotUnit("qinv: " + x.to_string() + " is not a unit quaternion");
  return qconj(x);
}

const Dyadic5& component(const Quaternion5& x, int k) {
  if (k < 0 || k > 3) throw std::out_of_range("component index must be in 0..3");
  return x.c[static_cast<std::size_t>(k)];
}

Quaternion5 adjoint(int k, const Quaternion5& x) {
  if (k < 1 || k > 3) throw std::out_of_range("adjoint index must be in 1..3");
  Quaternion5 out = x;
  for (int j = 1; j <= 3; ++j) {
    if (j != k) out.c[static_cast<std::size_t>(j)] = -out.c[static_cast<std::size_t>(j)];
  }
  return out;
}

Quaternion5 galois(const Quaternion5& x) {
  return {galois(x.c[0]), galois(x.c[1]), galois(x.c[2]), galois(x.c[3])};
}

const VertexTable& VertexTable::standard() {
  static const VertexTable table = [] {
    const Dyadic5 r = Dyadic5::of(-1, 0, 2);  // -1/4
    const Dyadic5 s = Dyadic5::of(0, 1, 2);   // √5/4
    VertexTable t;
    t.q = {
        Quaternion5::one(),
        Quaternion5(r, s, s, s),
        Quaternion5(r, -s, -s, s),
        Quaternion5(r, s, -s, -s),
        Quaternion5(r, -s, s, -s),
    };
    for (int k = 0; k < 4; ++k) t.units[static_cast<std::size_t>(k)] = Quaternion5::unit(k);
    return t;
  }();
  return table;
}

Quaternion5 VertexTable::letter(const Letter& l) const {
  const Quaternion5& v = q[static_cast<std::size_t>(l.index)];
  return l.sign > 0 ? v : qconj(v);
}

Quaternion5 rho(const Word& w, const VertexTable& table) {
  Quaternion5 x = Quaternion5::one();
  for (const Letter& l : w.letters()) x = x * table.letter(l);
  return x;
}

namespace {

using Matrix4 = std::array<std::array<Dyadic5, 4>, 4>;

// Laplace expansion along the first row of the minor built from `rows`.
Dyadic5 det_minor(const Matrix4& m, std::array<int, 4> rows, int n, int col) {
  if (n == 1) return m[static_cast<std::size_t>(rows[0])][static_cast<std::size_t>(col)];
  Dyadic5 sum;
  for (int r = 0; r < n; ++r) {
    std::array<int, 4> rest{};
    int idx = 0;
    for (int s = 0; s < n; ++s) {
      if (s != r) rest[static_cast<std::size_t>(idx++)] = rows[static_cast<std::size_t>(s)];
    }
    Dyadic5 term = m[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])][static_cast<std::size_t>(col)] *
                   det_minor(m, rest, n - 1, col + 1);
    if (r % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

Dyadic5 simplex_volume_det(const VertexTable& table) {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    const Quaternion5 row = table.q[i + 1] - table.q[0];
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = row.c[j];
  }
  return det_minor(m, {0, 1, 2, 3}, 4, 0);
}

std::vector<AxiomCheck> check_vertex_axioms(const VertexTable& table) {
  std::vector<AxiomCheck> checks;
  const auto add = [&](std::string name, bool holds) { checks.push_back({std::move(name), holds}); };

  add("q0 = 1", table.q[0] == Quaternion5::one());
  Quaternion5 sum;
  for (int i = 0; i <= 4; ++i) {
    add("|q" + std::to_string(i) + "|^2 = 1", qnorm2(table.q[static_cast<std::size_t>(i)]) == Dyadic5(1));
    sum += table.q[static_cast<std::size_t>(i)];
  }
  add("q0 + ... + q4 = 0", sum == Quaternion5());
  const Dyadic5 quarter = Dyadic5::of(-1, 0, 2);
  for (int i = 0; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      add("<q" + std::to_string(i) + ",q" + std::to_string(j) + "> = -1/4",
          inner(table.q[static_cast<std::size_t>(i)], table.q[static_cast<std::size_t>(j)]) == quarter);
    }
  }
  for (int k = 1; k <= 3; ++k) {
    for (int j = 1; j <= 4; ++j) {
      const auto& qj = table.q[static_cast<std::size_t>(j)];
      const int image = klein(k)(j);
      add("Ad_i" + std::to_string(k) + "(q" + std::to_string(j) + ") = q" + std::to_string(image),
          adjoint(k, qj) == table.q[static_cast<std::size_t>(image)]);
      add("sign of (q" + std::to_string(j) + ")_" + std::to_string(k),
          sign(component(qj, k)) == kAdSignTable[k - 1][j - 1]);
    }
  }
  add("simplex volume > 0", sign(simplex_volume_det(table)) > 0);
  return checks;
}

}  // namespace freesimplex
