#include "freesimplex/theoremlab.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

namespace freesimplex {

bool TheoremReport::passed() const {
  return faithful && std::all_of(per_k.begin(), per_k.end(), [](const KReport& r) { return r.pass; });
}

TheoremReport check_word(const Word& w, const VertexTable& table) {
  TheoremReport report;
  report.word = w;
  const Quaternion5 x = rho(w, table);
  const bool is_one = x == Quaternion5::one();
  report.faithful = w.empty() || !is_one;
  for (int k = 0; k < 4; ++k) {
    KReport& r = report.per_k[static_cast<std::size_t>(k)];
    r.k = k;
    r.red = pi_reduce(k, w);
    r.norm = alt_norm(r.red);
    r.x = component(x, k);
    r.lad = lad(r.x);
    const bool degenerate = r.norm == 0 && ((k == 0 && is_one) || (k > 0 && r.x.is_zero()));
    r.pass = degenerate || (r.norm >= 1 && r.lad == LadValue(r.norm));
  }
  return report;
}

bool CampaignSummary::same_result(const CampaignSummary& other) const {
  return max_len == other.max_len && words_checked == other.words_checked && failures == other.failures &&
         max_lad == other.max_lad;
}

CampaignSummary verify_theorem(int max_len, int workers, const VertexTable& table, const ProgressFn& progress) {
  if (max_len < 1) throw std::invalid_argument("max_len must be at least 1");
  workers = std::max(workers, 1);
  const auto start = std::chrono::steady_clock::now();

  struct Chunk {
    std::uint64_t count = 0;
    std::vector<TheoremReport> failures;
    LadValue max_lad;
  };
  constexpr int kChunks = 2 * kRank;
  std::array<Chunk, kChunks> chunks;
  std::atomic<int> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  const std::uint64_t total = reduced_word_count_upto(max_len);

  auto work = [&] {
    for (int c = next++; c < kChunks; c = next++) {
      Chunk& chunk = chunks[static_cast<std::size_t>(c)];
      for_each_reduced_from(Letter::from_rank(c), max_len, [&](const Word& w) {
        TheoremReport report = check_word(w, table);
        ++chunk.count;
        for (const KReport& r : report.per_k) {
          if (r.norm >= 1) chunk.max_lad = std::max(chunk.max_lad, r.lad);
        }
        if (!report.passed()) chunk.failures.push_back(std::move(report));
      });
      const std::uint64_t finished = done += chunk.count;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, total);
      }
    }
  };

  std::vector<std::thread> threads;
  for (int t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();

  CampaignSummary summary;
  summary.max_len = max_len;
  for (Chunk& chunk : chunks) {
    summary.words_checked += chunk.count;
    summary.max_lad = std::max(summary.max_lad, chunk.max_lad);
    for (auto& f : chunk.failures) summary.failures.push_back(std::move(f));
  }
  std::sort(summary.failures.begin(), summary.failures.end(),
            [](const TheoremReport& a, const TheoremReport& b) { return a.word < b.word; });
  summary.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return summary;
}

namespace {

Quaternion5 vertex(const VertexTable& table, int index, int branch) {
  const Quaternion5& q = table.q[static_cast<std::size_t>(index)];
  return branch > 0 ? q : qconj(q);
}

bool is_real(const Quaternion5& x) { return x.c[1].is_zero() && x.c[2].is_zero() && x.c[3].is_zero(); }

}  // namespace

Quaternion5 identity_lhs(int a, int i, int j, int galois_branch, const VertexTable& table) {
  return vertex(table, a, galois_branch) * vertex(table, i, -galois_branch) * vertex(table, j, galois_branch);
}

bool identity_holds(const IdentityDecomposition& d, const VertexTable& table) {
  if (d.a < 1 || d.a > kRank || d.i < 0 || d.i > kRank || d.j < 0 || d.j > kRank) return false;
  if (d.k < 0 || d.k > 3 || d.l < 0 || d.l > kRank) return false;
  if ((d.galois_branch != 1 && d.galois_branch != -1) || (d.residual_sign != 1 && d.residual_sign != -1)) {
    return false;
  }
  if (d.j_prime != klein(d.k)(d.a)) return false;
  if (!(lad(d.c) <= LadValue(0))) return false;
  if ((d.i > 0) != (d.l > 0)) return false;

  const Quaternion5 lhs = identity_lhs(d.a, d.i, d.j, d.galois_branch, table);
  const Quaternion5 residual = Dyadic5(d.residual_sign) * vertex(table, d.l, d.galois_branch);
  const Quaternion5& ik = table.units[static_cast<std::size_t>(d.k)];
  const Quaternion5 right_form = d.c * (vertex(table, d.a, d.galois_branch) * ik) + residual;
  const Quaternion5 left_form = d.c * (ik * vertex(table, d.j_prime, d.galois_branch)) + residual;
  return lhs == right_form && lhs == left_form;
}

bool is_admissible_triple(int a, int i, int j) {
  return a >= 1 && a <= kRank && i >= 0 && i <= kRank && j >= 1 && j <= kRank && a != i && i != j;
}

IdentityDecomposition decompose_triple(int a, int i, int j, int galois_branch, const VertexTable& table) {
  if (a < 1 || a > kRank || i < 0 || i > kRank || j < 0 || j > kRank || a == i || i == j ||
      (galois_branch != 1 && galois_branch != -1)) {
    throw std::invalid_argument("decompose_triple: inadmissible pattern");
  }
  const Quaternion5 lhs = identity_lhs(a, i, j, galois_branch, table);
  const Quaternion5 qa = vertex(table, a, galois_branch);
  for (int k = 0; k < 4; ++k) {
    // q_a i_k is a unit, so D = c q_a i_k forces c = real part of D (q_a i_k)^-1.
    const Quaternion5 basis = qa * table.units[static_cast<std::size_t>(k)];
    const Quaternion5 basis_inv = qconj(basis);
    for (int l = 0; l <= kRank; ++l) {
      for (int sign : {1, -1}) {
        const Quaternion5 rest = lhs - Dyadic5(sign) * vertex(table, l, galois_branch);
        const Quaternion5 ratio = rest * basis_inv;
        if (!is_real(ratio) || ratio.c[0].is_zero()) continue;
        IdentityDecomposition d{a, i, j, galois_branch, ratio.c[0], k, l, sign, klein(k)(a)};
        if (identity_holds(d, table)) return d;
      }
    }
  }
  throw NoDecomposition("no decomposition for q_" + std::to_string(a) + " q_" + std::to_string(i) + "^-1 q_" +
                        std::to_string(j) + (galois_branch < 0 ? " (inverted)" : ""));
}

IdentityFamilySummary verify_identity_family(const VertexTable& table) {
  IdentityFamilySummary summary;
  for (int branch : {1, -1}) {
    for (int a = 1; a <= kRank; ++a) {
      for (int i = 0; i <= kRank; ++i) {
        for (int j = 1; j <= kRank; ++j) {
          if (!is_admissible_triple(a, i, j)) continue;
          try {
            IdentityDecomposition d = decompose_triple(a, i, j, branch, table);
            ++summary.k_histogram[static_cast<std::size_t>(d.k)];
            summary.decompositions.push_back(std::move(d));
          } catch (const NoDecomposition& e) {
            summary.failures.emplace_back(e.what());
          }
        }
      }
    }
  }
  return summary;
}

std::size_t LadCertificate::node_count() const {
  std::size_t n = 1;
  for (const auto& b : branches) n += b.node_count();
  return n;
}

namespace {

struct Split {
  int a = 0;
  int i = 0;
  int j = 0;
  int branch = 1;
  std::size_t consumed = 0;
};

// Leading g_a^e g_j^e or g_a^e g_i^-e g_j^e.
std::optional<Split> leading_pattern(const Word& w) {
  if (w.size() < 2) return std::nullopt;
  const int e = w[0].sign;
  if (w[1].sign == e) return Split{w[0].index, 0, w[1].index, e, 2};
  if (w.size() >= 3 && w[2].sign == e) return Split{w[0].index, w[1].index, w[2].index, e, 3};
  return std::nullopt;
}

Word tail_after(const Word& w, std::size_t consumed, std::optional<Letter> head) {
  std::vector<Letter> out;
  if (head) out.push_back(*head);
  out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(consumed), w.letters().end());
  return Word::reduce(out);
}

int factor_sign_for(int k, int m, const VertexTable& table) {
  const int n = k ^ m;
  const Dyadic5 f =
      component(table.units[static_cast<std::size_t>(m)] * table.units[static_cast<std::size_t>(n)], k);
  return sign(f);
}

class CertificateBuilder {
 public:
  explicit CertificateBuilder(const VertexTable& table) : table_(table) {}

  std::optional<LadCertificate> build(const Word& w, int k) {
    const int norm = alt_norm(w);
    if (w.size() >= 2) {
      Word cur = w;
      for (std::size_t rot = 0; rot < w.size(); ++rot) {
        if (rot > 0) cur = rotate_clutch(k, cur);
        if (auto node = try_split(cur, k, norm)) {
          node->word = w;
          node->rotation = static_cast<int>(rot);
          return node;
        }
      }
    }
    if (w.size() <= 2) {
      LadCertificate leaf;
      leaf.kind = LadCertificate::Kind::Leaf;
      leaf.word = w;
      leaf.k = k;
      leaf.conclusion = lad(component(rho(w, table_), k));
      if (norm >= 1 && leaf.conclusion != LadValue(norm)) return std::nullopt;
      return leaf;
    }
    return std::nullopt;
  }

 private:
  const IdentityDecomposition* identity(int a, int i, int j, int branch) {
    const auto key = std::make_tuple(a, i, j, branch);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      std::optional<IdentityDecomposition> d;
      try {
        d = decompose_triple(a, i, j, branch, table_);
      } catch (const NoDecomposition&) {
      }
      it = cache_.emplace(key, d).first;
    }
    return it->second ? &*it->second : nullptr;
  }

  std::optional<LadCertificate> try_split(const Word& rotated, int k, int norm) {
    const auto split = leading_pattern(rotated);
    if (!split) return std::nullopt;
    const IdentityDecomposition* d = identity(split->a, split->i, split->j, split->branch);
    if (d == nullptr || d->j_prime != d->j) return std::nullopt;

    const int n = k ^ d->k;
    const Word u = pi_reduce(n, tail_after(rotated, split->consumed, Letter{d->j, split->branch}));
    const std::optional<Letter> l_letter =
        d->l > 0 ? std::optional<Letter>(Letter{d->l, split->branch}) : std::nullopt;
    const Word r = pi_reduce(k, tail_after(rotated, split->consumed, l_letter));

    auto u_cert = build(u, n);
    if (!u_cert) return std::nullopt;
    auto r_cert = build(r, k);
    if (!r_cert) return std::nullopt;

    LadCertificate node;
    node.kind = LadCertificate::Kind::Rewrite;
    node.k = k;
    node.identity = *d;
    node.u_index = n;
    node.factor_sign = factor_sign_for(k, d->k, table_);
    node.u_term_lad = lad(d->c) + 1 + u_cert->conclusion;
    node.r_term_lad = r_cert->conclusion;
    if (!(node.u_term_lad > node.r_term_lad)) return std::nullopt;
    node.conclusion = node.u_term_lad;
    if (norm >= 1 && node.conclusion != LadValue(norm)) return std::nullopt;
    node.branches.push_back(std::move(*u_cert));
    node.branches.push_back(std::move(*r_cert));
    return node;
  }

  const VertexTable& table_;
  std::map<std::tuple<int, int, int, int>, std::optional<IdentityDecomposition>> cache_;
};

CertificateCheck fail(const std::string& path, std::string reason) { return {false, path, std::move(reason)}; }

CertificateCheck check_node(const LadCertificate& node, const std::string& path, const VertexTable& table) {
  if (node.k < 0 || node.k > 3) return fail(path, "k out of range");
  if (!is_pi_reduced(node.k, node.word)) return fail(path, "word is not pi_k-reduced");
  const int norm = alt_norm(node.word);
  if (norm >= 1 && node.conclusion != LadValue(norm)) return fail(path, "conclusion differs from ||w||_k");

  if (node.kind == LadCertificate::Kind::Leaf) {
    if (node.word.size() > 2) return fail(path, "leaf word longer than 2");
    if (!node.branches.empty()) return fail(path, "leaf with branches");
    if (node.conclusion != lad(component(rho(node.word, table), node.k))) return fail(path, "leaf lad mismatch");
    return {};
  }

  if (node.branches.size() != 2) return fail(path, "rewrite needs two branches");
  if (node.word.empty() || node.rotation < 0 || static_cast<std::size_t>(node.rotation) >= node.word.size()) {
    return fail(path, "rotation out of range");
  }
  Word rotated = node.word;
  for (int r = 0; r < node.rotation; ++r) rotated = rotate_clutch(node.k, rotated);

  const IdentityDecomposition& d = node.identity;
  if (!identity_holds(d, table)) return fail(path, "identity instance does not hold");
  if (d.j_prime != d.j) return fail(path, "identity does not factor through q_j");
  const auto split = leading_pattern(rotated);
  if (!split || split->a != d.a || split->i != d.i || split->j != d.j || split->branch != d.galois_branch) {
    return fail(path, "identity does not match the leading letters");
  }

  const int n = node.k ^ d.k;
  if (node.u_index != n) return fail(path, "u branch index");
  if (node.factor_sign != factor_sign_for(node.k, d.k, table)) return fail(path, "factor sign");

  const LadCertificate& u = node.branches[0];
  const LadCertificate& r = node.branches[1];
  const Word u_word = pi_reduce(n, tail_after(rotated, split->consumed, Letter{d.j, d.galois_branch}));
  const std::optional<Letter> l_letter =
      d.l > 0 ? std::optional<Letter>(Letter{d.l, d.galois_branch}) : std::nullopt;
  const Word r_word = pi_reduce(node.k, tail_after(rotated, split->consumed, l_letter));
  if (u.k != n || !(u.word == u_word)) return fail(path, "u branch word");
  if (r.k != node.k || !(r.word == r_word)) return fail(path, "r branch word");

  const LadValue u_term = lad(d.c) + 1 + u.conclusion;
  if (u_term != node.u_term_lad) return fail(path, "u term lad");
  if (r.conclusion != node.r_term_lad) return fail(path, "r term lad");
  if (!(u_term > r.conclusion)) return fail(path, "no strict dominance");
  if (node.conclusion != u_term) return fail(path, "conclusion is not the dominant term");

  if (auto c = check_node(u, path + "/u", table); !c) return c;
  return check_node(r, path + "/r", table);
}

}  // namespace

CertificateResult derive_lad_certificate(const Word& w, int k, const VertexTable& table) {
  if (k < 0 || k > 3) throw std::invalid_argument("k must be in 0..3");
  if (w.empty() || !is_pi_reduced(k, w)) {
    throw std::invalid_argument("derive_lad_certificate needs a non-trivial pi_k-reduced word");
  }
  CertificateBuilder builder(table);
  if (auto cert = builder.build(w, k)) return std::move(*cert);
  return UnhandledPattern{w, k, "no clutch rotation exposes a split with strict lad dominance"};
}

CertificateCheck check_certificate(const LadCertificate& cert, const VertexTable& table) {
  if (cert.word.empty() || !is_pi_reduced(cert.k, cert.word)) {
    return fail("root", "root must be a non-trivial pi_k-reduced word");
  }
  return check_node(cert, "root", table);
}

}  // namespace freesimplex
