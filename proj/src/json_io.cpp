#include "freesimplex/json_io.hpp"

#include "freesimplex/word_syntax.hpp"

namespace freesimplex {

using nlohmann::json;

void to_json(json& j, const Dyadic5& x) { j = json{{"p", x.p().get_str()}, {"q", x.q().get_str()}, {"e", x.e()}}; }

void from_json(const json& j, Dyadic5& x) {
  x = Dyadic5(mpz_class(j.at("p").get<std::string>()), mpz_class(j.at("q").get<std::string>()),
              j.at("e").get<std::int64_t>());
}

void to_json(json& j, const LadValue& v) {
  if (v.is_neg_infinity()) {
    j = "-inf";
  } else {
    j = v.value();
  }
}

void from_json(const json& j, LadValue& v) {
  if (j.is_string()) {
    if (j.get<std::string>() != "-inf") throw std::invalid_argument("lad must be an integer or \"-inf\"");
    v = LadValue::neg_infinity();
  } else {
    v = LadValue(j.get<std::int64_t>());
  }
}

void to_json(json& j, const Quaternion5& x) { j = json{{"c", json::array({x.c[0], x.c[1], x.c[2], x.c[3]})}}; }

void from_json(const json& j, Quaternion5& x) {
  const json& c = j.at("c");
  if (!c.is_array() || c.size() != 4) throw std::invalid_argument("quaternion needs four components");
  for (std::size_t i = 0; i < 4; ++i) x.c[i] = c[i].get<Dyadic5>();
}

void to_json(json& j, const Word& w) { j = w.to_string(); }

void from_json(const json& j, Word& w) { w = parse_word(j.get<std::string>()); }

void to_json(json& j, const TheoremReport& r) {
  json per_k = json::array();
  for (const KReport& k : r.per_k) {
    per_k.push_back({{"k", k.k}, {"red", k.red}, {"norm", k.norm}, {"x", k.x}, {"lad", k.lad}, {"pass", k.pass}});
  }
  j = json{{"word", r.word}, {"faithful", r.faithful}, {"pass", r.passed()}, {"perK", per_k}};
}

void to_json(json& j, const IdentityDecomposition& d) {
  j = json{{"a", d.a},
           {"i", d.i},
           {"j", d.j},
           {"galoisBranch", d.galois_branch},
           {"c", d.c},
           {"cText", d.c.to_string()},
           {"k", d.k},
           {"l", d.l},
           {"residualSign", d.residual_sign},
           {"jPrime", d.j_prime}};
}

void to_json(json& j, const LadCertificate& cert) {
  j = json{{"kind", cert.kind == LadCertificate::Kind::Leaf ? "leaf" : "rewrite"},
           {"word", cert.word},
           {"k", cert.k},
           {"conclusion", cert.conclusion}};
  if (cert.kind == LadCertificate::Kind::Rewrite) {
    j["rotation"] = cert.rotation;
    j["identity"] = cert.identity;
    j["uIndex"] = cert.u_index;
    j["factorSign"] = cert.factor_sign;
    j["uTermLad"] = cert.u_term_lad;
    j["rTermLad"] = cert.r_term_lad;
    j["u"] = cert.branches.at(0);
    j["r"] = cert.branches.at(1);
  }
}

void to_json(json& j, const UnhandledPattern& u) {
  j = json{{"unhandledPattern", true}, {"word", u.word}, {"k", u.k}, {"reason", u.reason}};
}

json campaign_report(const CampaignSummary& summary, const IdentityFamilySummary& family) {
  return json{{"maxLen", summary.max_len},
              {"wordsChecked", summary.words_checked},
              {"failures", summary.failures},
              {"maxLad", summary.max_lad},
              {"identityFamily", family.decompositions},
              {"identityFailures", family.failures},
              {"elapsedMs", summary.elapsed.count()}};
}

}  // namespace freesimplex
