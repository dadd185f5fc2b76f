#include "hesselink/serialize.hpp"

#include <sstream>

namespace hesselink {

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

Vec vec_from_json(const Json& j) {
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_string(x.get<std::string>()));
  return v;
}

Json to_json(const KempfDatum& kd) {
  Json j;
  j["mu"] = to_json(kd.mu);
  j["lambda"] = to_json(kd.lambda);
  j["m"] = kd.level;
  j["q2"] = rat_to_string(kd.q2);
  Json active = Json::array();
  for (size_t i = 0; i < kd.cert.active.size(); ++i) {
    Json e;
    e["constraint"] = kd.cert.active[i];
    e["multiplier"] = rat_to_string(kd.cert.multipliers[i]);
    active.push_back(e);
  }
  j["certificate"] = active;
  return j;
}

Json to_json(const StratumLabel& row) {
  Json j;
  j["mu"] = to_json(row.kempf.mu);
  j["lambda"] = to_json(row.kempf.lambda);
  j["m"] = row.kempf.level;
  j["q2"] = rat_to_string(row.kempf.q2);
  j["trivial"] = row.trivial;
  j["levi_simples"] = row.levi_simples;
  j["dim_parabolic"] = row.dim_parabolic;
  j["dim_saturation"] = row.dim_saturation;
  j["dim_stratum"] = row.dim_stratum;
  j["certificate"] = row.certificate;
  return j;
}

Json to_json(const StrataTable& table) {
  Json j;
  j["datum"] = table.datum_label;
  Json rows = Json::array();
  for (const auto& r : table.rows) rows.push_back(to_json(r));
  j["strata"] = rows;
  Json diags = Json::array();
  for (const auto& d : table.diagnostics) {
    Json e;
    e["label"] = to_json(d.label);
    e["q2"] = rat_to_string(d.q2);
    e["status"] = "rejected-candidate";
    e["reason"] = d.reason;
    diags.push_back(e);
  }
  j["diagnostics"] = diags;
  return j;
}

Json to_json(const InductionResult& r) {
  Json j;
  j["eta"] = to_json(r.eta);
  j["eta_q2"] = rat_to_string(r.eta_q2);
  j["blade_nonempty"] = r.blade_nonempty;
  j["method"] =
      r.method == InductionResult::Method::Primary ? "primary" : "sampling-fallback";
  if (r.induced)
    j["induced"] = to_json(*r.induced);
  else
    j["induced"] = "FLAGGED";
  if (r.fallback_label) {
    j["fallback_label"] = to_json(*r.fallback_label);
    j["fallback_q2"] = rat_to_string(*r.fallback_q2);
  }
  j["diagnostics"] = r.diagnostics;
  return j;
}

Json make_record(const std::string& command, Json inputs, Json results) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  return j;
}

namespace {

std::string join_vec(const Json& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get<std::string>();
  }
  return s + ")";
}

}  // namespace

std::string render_strata_table(const Json& record) {
  std::ostringstream out;
  const Json& res = record["results"];
  out << "strata of " << res["datum"].get<std::string>() << "\n";
  out << "  mu                 lambda             m   q2      dimP  dimV1  dimY\n";
  for (const auto& r : res["strata"]) {
    std::ostringstream mu, la;
    mu << join_vec(r["mu"]);
    la << join_vec(r["lambda"]);
    out << "  " << mu.str();
    for (size_t i = mu.str().size(); i < 19; ++i) out << ' ';
    out << la.str();
    for (size_t i = la.str().size(); i < 19; ++i) out << ' ';
    out << r["m"].get<long>() << "   " << r["q2"].get<std::string>();
    for (size_t i = r["q2"].get<std::string>().size(); i < 8; ++i) out << ' ';
    out << r["dim_parabolic"].get<long>() << "     " << r["dim_saturation"].get<long>()
        << "      " << r["dim_stratum"].get<long>();
    if (r["trivial"].get<bool>()) out << "   [trivial]";
    out << "\n";
  }
  for (const auto& d : res["diagnostics"]) {
    out << "  diagnostic: candidate " << join_vec(d["label"]) << " (q2 "
        << d["q2"].get<std::string>() << ") rejected by the Kirwan-Ness test\n";
  }
  return out.str();
}

std::string render_induction(const Json& record) {
  std::ostringstream out;
  const Json& r = record["results"];
  out << "eta = " << join_vec(r["eta"]) << "  (q2 " << r["eta_q2"].get<std::string>() << ")\n";
  if (r["blade_nonempty"].get<bool>()) {
    out << "induced stratum: " << join_vec(r["induced"]["mu"]) << "  m "
        << r["induced"]["m"].get<long>() << "  q2 " << r["induced"]["q2"].get<std::string>()
        << "\n";
  } else {
    out << "FLAGGED: blade empty";
    if (r.contains("fallback_label"))
      out << "; fallback suggests " << join_vec(r["fallback_label"]) << " (q2 "
          << r["fallback_q2"].get<std::string>() << ")";
    out << "\n";
  }
  out << r["diagnostics"].get<std::string>() << "\n";
  return out.str();
}

std::string render_kempf(const Json& record) {
  std::ostringstream out;
  const Json& r = record["results"];
  out << "mu = " << join_vec(r["mu"]) << "  lambda = " << join_vec(r["lambda"]) << "  m = "
      << r["m"].get<long>() << "  q2 = " << r["q2"].get<std::string>() << "\n";
  return out.str();
}

std::string render_vector(const Json& record) {
  std::ostringstream out;
  const Json& r = record["results"];
  out << "value = " << join_vec(r["value"]) << "\n";
  return out.str();
}

Vec parse_root_combo(const std::string& text, const RootDatum& datum) {
  // Raw coordinates: "(p/q,...)".
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw EngineError(Err::MalformedSpec, "unterminated coordinate vector");
    Vec v;
    std::string body = text.substr(1, text.size() - 2);
    std::string cur;
    for (char c : body + ",") {
      if (c == ',') {
        if (!cur.empty()) v.push_back(rat_from_string(cur));
        cur.clear();
      } else if (!isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (v.size() != datum.rank)
      throw EngineError(Err::MalformedSpec, "coordinate vector has wrong rank");
    return v;
  }
  // Sugar over simple roots a, b, c, d: terms like "2a+b".
  Vec v = zero_vec(datum.rank);
  std::string term;
  auto flush = [&](const std::string& t) {
    if (t.empty()) throw EngineError(Err::MalformedSpec, "empty term in root name");
    size_t i = 0;
    std::string num;
    while (i < t.size() && (isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/')) num += t[i++];
    if (i + 1 != t.size()) throw EngineError(Err::MalformedSpec, "bad root term: " + t);
    char letter = t[i];
    size_t idx = static_cast<size_t>(letter - 'a');
    if (letter < 'a' || idx >= datum.simples.size())
      throw EngineError(Err::MalformedSpec, std::string("unknown simple root letter: ") + letter);
    Rat c = num.empty() ? Rat(1) : rat_from_string(num);
    v = add(v, scale(c, datum.roots[datum.simples[idx]]));
  };
  for (char c : text + "+") {
    if (c == '+') {
      flush(term);
      term.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      term += c;
    }
  }
  return v;
}

}  // namespace hesselink
