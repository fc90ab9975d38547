#pragma once

// Bounded machine verification of the algebraic denominator theorem:
//
//   ||w||_k = 0  iff  red_k(w) = 1  iff  (k = 0 and rho(w) = 1) or (k > 0 and x_k = 0)
//   otherwise lad(x_k) = ||w||_k >= 1,            x = rho(w)
//
// plus the quadratic identity family q_a q_i^-1 q_j = c q_a i_k + s q_l and
// lad-certificates that replay the inductive argument on single words.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "freesimplex/freewords.hpp"
#include "freesimplex/goldfield.hpp"
#include "freesimplex/quatrep.hpp"

namespace freesimplex {

struct KReport {
  int k = 0;
  Word red;
  int norm = 0;
  Dyadic5 x;
  LadValue lad;
  bool pass = false;

  friend bool operator==(const KReport&, const KReport&) = default;
};

struct TheoremReport {
  Word word;
  std::array<KReport, 4> per_k;
  /// rho(word) != 1, or word is the identity.
  bool faithful = true;

  bool passed() const;
  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Norms come from freewords, lads from rho; the two sides never share code.
TheoremReport check_word(const Word& w, const VertexTable& table = VertexTable::standard());

struct CampaignSummary {
  int max_len = 0;
  std::uint64_t words_checked = 0;
  std::vector<TheoremReport> failures;  // sorted in enumeration order
  LadValue max_lad;                     // over all non-degenerate components
  std::chrono::milliseconds elapsed{0};

  bool ok() const { return failures.empty(); }
  /// Equality of everything except the wall time.
  bool same_result(const CampaignSummary& other) const;
};

/// Progress hook: (words finished so far, total words).
using ProgressFn = std::function<void(std::uint64_t, std::uint64_t)>;

/// check_word on every reduced word of length 1..max_len, split by first
/// letter across `workers` threads.  The summary does not depend on `workers`.
CampaignSummary verify_theorem(int max_len, int workers, const VertexTable& table = VertexTable::standard(),
                               const ProgressFn& progress = {});

class NoDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One instance of q_a q_i^-1 q_j = c q_a i_k + s q_l = c i_k q_{j'} + s q_l,
/// with every q replaced by its inverse (q_i^-1 by q_i) when galois_branch = -1.
/// Indices i, l may be 0, standing for q_0 = 1.
struct IdentityDecomposition {
  int a = 1;
  int i = 0;
  int j = 1;
  int galois_branch = 1;
  Dyadic5 c;
  int k = 0;
  int l = 0;
  int residual_sign = 1;
  int j_prime = 1;  // pi_k(a): q_a i_k = i_k q_{j'}

  friend bool operator==(const IdentityDecomposition&, const IdentityDecomposition&) = default;
};

/// Left-hand side q_a q_i^-1 q_j (or its Galois image).
Quaternion5 identity_lhs(int a, int i, int j, int galois_branch, const VertexTable& table = VertexTable::standard());

/// Exact re-check of both forms and of lad(c) <= 0, (i > 0) == (l > 0), j' = pi_k(a).
bool identity_holds(const IdentityDecomposition& d, const VertexTable& table = VertexTable::standard());

/// Searches k in 0..3, l in 0..4, sign in {+1, -1} and solves for c.
/// Requires 1 <= a <= 4, 0 <= i, j <= 4, a != i, i != j; throws
/// NoDecomposition when no admissible constant exists.
IdentityDecomposition decompose_triple(int a, int i, int j, int galois_branch,
                                       const VertexTable& table = VertexTable::standard());

/// (a, i, j) is admissible when it can open a reduced word: a, j >= 1, a != i, i != j.
bool is_admissible_triple(int a, int i, int j);

struct IdentityFamilySummary {
  std::vector<IdentityDecomposition> decompositions;
  std::vector<std::string> failures;
  std::array<int, 4> k_histogram{};

  bool ok() const { return failures.empty(); }
};

IdentityFamilySummary verify_identity_family(const VertexTable& table = VertexTable::standard());

/// A derivation of lad(x_k(word)).  Leaves evaluate lad directly on short
/// words; a rewrite rotates the word over the clutch, splits it with one
/// identity instance into c i_m rho(u) + s rho(r) and combines the branch
/// lads through the product law and strict dominance.
struct LadCertificate {
  enum class Kind { Leaf, Rewrite };

  Kind kind = Kind::Leaf;
  Word word;  // pi_k-reduced
  int k = 0;
  LadValue conclusion;  // claimed lad(x_k(word))

  // Rewrite only.
  int rotation = 0;  // clutch rotations applied to word before splitting
  IdentityDecomposition identity;
  int u_index = 0;      // component index of the u branch: k xor identity.k
  int factor_sign = 1;  // component_k(i_m y) = factor_sign * component_{u_index}(y)
  LadValue u_term_lad;
  LadValue r_term_lad;
  std::vector<LadCertificate> branches;  // {u, r}

  std::size_t node_count() const;
};

struct UnhandledPattern {
  Word word;
  int k = 0;
  std::string reason;
};

using CertificateResult = std::variant<LadCertificate, UnhandledPattern>;

/// Requires w pi_k-reduced and non-trivial (std::invalid_argument otherwise).
CertificateResult derive_lad_certificate(const Word& w, int k, const VertexTable& table = VertexTable::standard());

struct CertificateCheck {
  bool ok = true;
  std::string path;  // e.g. "root/u/r"
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Re-derives every step exactly.  The root must conclude lad = ||word||_k.
CertificateCheck check_certificate(const LadCertificate& cert, const VertexTable& table = VertexTable::standard());

}  // namespace freesimplex
