#include "freesimplex/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "freesimplex/json_io.hpp"
#include "freesimplex/theoremlab.hpp"
#include "freesimplex/word_syntax.hpp"

namespace freesimplex::cli {

using nlohmann::json;

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s) {
    if ((ch & 0xC0) != 0x80) ++n;
  }
  return n;
}

// Left-aligned columns separated by two spaces.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(widths[i] - display_width(row[i]) + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string element(int index, int sign) {
  if (index == 0) return sign > 0 ? "1" : "1^-1";
  return Word{Letter{index, sign}}.to_string();
}

struct Options {
  std::string word_text;
  std::optional<int> k;
  int max_len = 6;
  int workers = 1;
  std::string format = "text";
  bool corrupt = false;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err), table_(opt.corrupt ? corrupted_vertex_table() : VertexTable::standard()) {}

  bool json_mode() const { return opt_.format == "json"; }
  Word word() const { return parse_word(opt_.word_text); }

  int eval() {
    const Word w = word();
    const Quaternion5 x = rho(w, table_);
    if (json_mode()) {
      out_ << json{{"word", w}, {"rho", x}}.dump(2) << '\n';
    } else {
      out_ << "rho(" << w.to_string() << ") = " << x.to_string() << '\n';
    }
    return kOk;
  }

  int norm() {
    const Word w = word();
    std::vector<int> ks;
    if (opt_.k) {
      ks.push_back(*opt_.k);
    } else {
      ks = {0, 1, 2, 3};
    }
    if (json_mode()) {
      json j{{"word", w}, {"altNorm", alt_norm(w)}, {"signChanges", sign_changes(w)}};
      json per_k = json::object();
      for (int k : ks) per_k[std::to_string(k)] = reduced_alt_norm(k, w);
      j["reducedAltNorm"] = per_k;
      out_ << j.dump(2) << '\n';
      return kOk;
    }
    out_ << "|" << w.to_string() << "|_alt = " << alt_norm(w) << "  (length " << w.size() << ", sign changes "
         << sign_changes(w) << ")\n";
    Table t({"k", "red_k", "||w||_k"});
    for (int k : ks) t.add({std::to_string(k), pi_reduce(k, w).to_string(), std::to_string(reduced_alt_norm(k, w))});
    t.print(out_);
    return kOk;
  }

  int reduce() {
    const Word red = pi_reduce(*opt_.k, word());
    if (json_mode()) {
      out_ << json{{"k", *opt_.k}, {"red", red}}.dump(2) << '\n';
    } else {
      out_ << red.to_string() << '\n';
    }
    return kOk;
  }

  int expr() {
    const Word w = word();
    if (w.empty()) {
      if (json_mode()) {
        out_ << json{{"word", w}, {"alphabetSign", nullptr}, {"pairs", json::array()}}.dump(2) << '\n';
      } else {
        out_ << "e  (empty product, |w|_alt = 0)\n";
      }
      return kOk;
    }
    const AltExpression e = alt_expression(w);
    if (json_mode()) {
      json pairs = json::array();
      for (const auto& [a, b] : e.pairs) pairs.push_back({a, b});
      out_ << json{{"word", w}, {"alphabetSign", e.alphabet_sign}, {"pairs", pairs}, {"altNorm", e.pairs.size()}}
                  .dump(2)
           << '\n';
    } else {
      out_ << format_alt_expression(w) << "  n = " << e.pairs.size() << '\n';
    }
    return kOk;
  }

  int lads() {
    const Word w = word();
    const Quaternion5 x = rho(w, table_);
    if (json_mode()) {
      json j{{"word", w}, {"rho", x}};
      json l = json::array();
      for (int k = 0; k < 4; ++k) l.push_back(lad(component(x, k)));
      j["lad"] = l;
      out_ << j.dump(2) << '\n';
      return kOk;
    }
    Table t({"k", "x_k", "lad(x_k)"});
    for (int k = 0; k < 4; ++k) {
      t.add({std::to_string(k), component(x, k).to_string(), lad(component(x, k)).to_string()});
    }
    t.print(out_);
    return kOk;
  }

  int check() {
    const TheoremReport r = check_word(word(), table_);
    if (json_mode()) {
      out_ << json(r).dump(2) << '\n';
    } else {
      print_report(r);
    }
    return r.passed() ? kOk : kVerificationFailed;
  }

  int verify() {
    if (opt_.max_len < 1) throw CLI::ValidationError("--max-len", "must be at least 1");
    std::uint64_t last_percent = 101;
    const CampaignSummary summary =
        verify_theorem(opt_.max_len, opt_.workers, table_, [&](std::uint64_t done, std::uint64_t total) {
          const std::uint64_t percent = total == 0 ? 100 : done * 100 / total;
          if (percent != last_percent) err_ << "verify: " << done << "/" << total << " words\n";
          last_percent = percent;
        });
    const IdentityFamilySummary family = verify_identity_family(table_);
    const bool ok = summary.ok() && family.ok();
    if (json_mode()) {
      out_ << campaign_report(summary, family).dump(2) << '\n';
    } else {
      for (const auto& f : summary.failures) {
        out_ << "FAILED ";
        print_report(f);
      }
      for (const auto& f : family.failures) out_ << "FAILED identity: " << f << '\n';
      out_ << summary.words_checked << " words, " << summary.failures.size() << " failures (max length "
           << summary.max_len << ", max lad " << summary.max_lad.to_string() << ", " << summary.elapsed.count()
           << " ms)\n";
      out_ << family.decompositions.size() << " identity patterns, " << family.failures.size() << " failures\n";
    }
    return ok ? kOk : kVerificationFailed;
  }

  int identities() {
    const IdentityFamilySummary family = verify_identity_family(table_);
    if (json_mode()) {
      json hist = json::array();
      for (int n : family.k_histogram) hist.push_back(n);
      out_ << json{{"identityFamily", family.decompositions}, {"failures", family.failures}, {"kHistogram", hist}}
                  .dump(2)
           << '\n';
    } else {
      Table t({"branch", "a", "i", "j", "c", "k", "l", "sign"});
      for (const auto& d : family.decompositions) {
        t.add({d.galois_branch > 0 ? "+" : "-", std::to_string(d.a), std::to_string(d.i), std::to_string(d.j),
               d.c.to_string(), std::to_string(d.k), std::to_string(d.l), d.residual_sign > 0 ? "+" : "-"});
      }
      t.print(out_);
      for (const auto& f : family.failures) out_ << "FAILED " << f << '\n';
      out_ << family.decompositions.size() << " patterns, " << family.failures.size() << " failures; k histogram";
      for (int n : family.k_histogram) out_ << ' ' << n;
      out_ << '\n';
    }
    return family.ok() ? kOk : kVerificationFailed;
  }

  int axioms() {
    const auto checks = check_vertex_axioms(table_);
    const Dyadic5 det = simplex_volume_det(table_);
    bool ok = true;
    for (const auto& c : checks) ok = ok && c.holds;
    if (json_mode()) {
      json list = json::array();
      for (const auto& c : checks) list.push_back({{"name", c.name}, {"holds", c.holds}});
      out_ << json{{"checks", list}, {"volumeDet", det}, {"ok", ok}}.dump(2) << '\n';
    } else {
      Table t({"axiom", "holds"});
      for (const auto& c : checks) t.add({c.name, c.holds ? "yes" : "NO"});
      t.print(out_);
      out_ << "det(q_i - q_0) = " << det.to_string() << '\n';
    }
    return ok ? kOk : kVerificationFailed;
  }

  int certificate() {
    const int k = opt_.k.value_or(0);
    const Word w = word();
    const Word red = pi_reduce(k, w);
    if (red.empty()) {
      if (json_mode()) {
        out_ << json{{"word", w}, {"k", k}, {"degenerate", true}}.dump(2) << '\n';
      } else {
        out_ << "red_" << k << "(" << w.to_string() << ") = e; ||w||_" << k << " = 0, nothing to certify\n";
      }
      return kOk;
    }
    const CertificateResult result = derive_lad_certificate(red, k, table_);
    if (const auto* u = std::get_if<UnhandledPattern>(&result)) {
      if (json_mode()) {
        out_ << json(*u).dump(2) << '\n';
      } else {
        out_ << "unhandled pattern for " << u->word.to_string() << " (k = " << k << "): " << u->reason << '\n';
      }
      return kVerificationFailed;
    }
    const auto& cert = std::get<LadCertificate>(result);
    const CertificateCheck verdict = check_certificate(cert, table_);
    if (json_mode()) {
      json j{{"certificate", cert}, {"accepted", verdict.ok}};
      if (!verdict.ok) j["failure"] = {{"path", verdict.path}, {"reason", verdict.reason}};
      out_ << j.dump(2) << '\n';
    } else {
      print_certificate(cert, 0);
      out_ << (verdict.ok ? "accepted" : "REJECTED at " + verdict.path + ": " + verdict.reason) << '\n';
    }
    return verdict.ok ? kOk : kVerificationFailed;
  }

 private:
  void print_report(const TheoremReport& r) {
    out_ << "w = " << r.word.to_string() << ", rho(w) = " << rho(r.word, table_).to_string() << '\n';
    Table t({"k", "red_k(w)", "||w||_k", "x_k", "lad(x_k)", "pass"});
    for (const KReport& k : r.per_k) {
      t.add({std::to_string(k.k), k.red.to_string(), std::to_string(k.norm), k.x.to_string(), k.lad.to_string(),
             k.pass ? "yes" : "NO"});
    }
    t.print(out_);
    if (!r.faithful) out_ << "rho(w) = 1 for a non-trivial word\n";
  }

  void print_certificate(const LadCertificate& c, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    out_ << pad << "lad(x_" << c.k << "(" << c.word.to_string() << ")) = " << c.conclusion.to_string();
    if (c.kind == LadCertificate::Kind::Leaf) {
      out_ << "  [direct]\n";
      return;
    }
    const auto& d = c.identity;
    out_ << "  [rotate " << c.rotation << ", q" << d.a << (d.galois_branch > 0 ? "" : "^-1") << " q" << d.i
         << (d.galois_branch > 0 ? "^-1" : "") << " q" << d.j << (d.galois_branch > 0 ? "" : "^-1")
         << " = " << d.c.to_string() << " i" << d.k << " q" << d.j << (d.galois_branch > 0 ? "" : "^-1")
         << (d.residual_sign > 0 ? " + " : " - ") << "q" << d.l << (d.galois_branch > 0 ? "" : "^-1")
         << "; terms " << c.u_term_lad.to_string() << " > " << c.r_term_lad.to_string() << "]\n";
    for (const auto& b : c.branches) print_certificate(b, depth + 1);
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  const VertexTable& table_;
};

}  // namespace

std::string format_alt_expression(const Word& w) {
  const AltExpression e = alt_expression(w);
  std::string out;
  for (const auto& [a, b] : e.pairs) {
    const std::string right = b == 0 ? (e.alphabet_sign > 0 ? "1^-1" : "1") : element(b, -e.alphabet_sign);
    out += "(" + element(a, e.alphabet_sign) + " " + right + ")";
  }
  return out;
}

const VertexTable& corrupted_vertex_table() {
  static const VertexTable table = [] {
    VertexTable t = VertexTable::standard();
    t.q[1] = qconj(t.q[1]);
    return t;
  }();
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact free-group norms and algebraic denominators for the 4-simplex vertex group",
               args.empty() ? "freesimplex" : args[0]};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--corrupt-vertices", opt.corrupt)->group("");

  const auto word_arg = [&](CLI::App* sub) { sub->add_option("word", opt.word_text, "Word, e.g. g1*g2^-1")->required(); };
  const auto k_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--k,-k", opt.k, "Klein index 0..3")->check(CLI::Range(0, 3));
    if (required) o->required();
  };

  auto* eval = app.add_subcommand("eval", "Quaternion rho(w)");
  word_arg(eval);
  auto* norm = app.add_subcommand("norm", "Alternating norm and reduced k-norms");
  word_arg(norm);
  k_opt(norm, false);
  auto* reduce = app.add_subcommand("reduce", "k-reduced form red_k(w)");
  word_arg(reduce);
  k_opt(reduce, true);
  auto* expr = app.add_subcommand("expr", "Alternating pairs expression");
  word_arg(expr);
  auto* lad_cmd = app.add_subcommand("lad", "lad of each component of rho(w)");
  word_arg(lad_cmd);
  auto* check = app.add_subcommand("check", "Check the theorem on one word");
  word_arg(check);
  auto* verify = app.add_subcommand("verify", "Exhaustive theorem campaign");
  verify->add_option("--max-len", opt.max_len, "Maximum word length")->check(CLI::PositiveNumber);
  verify->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  auto* identities = app.add_subcommand("identities", "Quadratic identity family");
  auto* axioms = app.add_subcommand("axioms", "Simplex vertex axioms and the Ad table");
  auto* certificate = app.add_subcommand("certificate", "Derive and check a lad-certificate");
  word_arg(certificate);
  k_opt(certificate, false);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  const std::string fallback = "freesimplex";
  if (args.empty()) argv.push_back(fallback.c_str());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner runner(opt, out, err);
  try {
    if (eval->parsed()) return runner.eval();
    if (norm->parsed()) return runner.norm();
    if (reduce->parsed()) return runner.reduce();
    if (expr->parsed()) return runner.expr();
    if (lad_cmd->parsed()) return runner.lads();
    if (check->parsed()) return runner.check();
    if (verify->parsed()) return runner.verify();
    if (identities->parsed()) return runner.identities();
    if (axioms->parsed()) return runner.axioms();
    if (certificate->parsed()) return runner.certificate();
  } catch (const WordSyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace freesimplex::cli
