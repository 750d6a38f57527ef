#include "bsato/database.hpp"

#include "bsato/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bsato {

namespace {

using json = nlohmann::ordered_json;

constexpr int kVersion = 1;

json names_of(const RingPtr& R) {
  json out = json::array();
  if (!R) return out;
  for (int i = 0; i < R->size(); ++i) out.push_back(R->name(i));
  return out;
}

json gens_of(const CommIdeal& I) {
  json out = json::array();
  for (auto& g : I.gens) out.push_back(g.str());
  return out;
}

std::string gens_joined(const CommIdeal& I) {
  std::string out;
  for (size_t i = 0; i < I.gens.size(); ++i) {
    if (i) out += ", ";
    out += I.gens[i].str();
  }
  return out;
}

// same piece ordering the stratifier uses in memory
std::string piece_sort_key(const LocallyClosed& p) {
  return gens_joined(p.outer) + " \\ " + gens_joined(p.inner);
}

json region_of(const Constructible& r) {
  json out;
  std::vector<const LocallyClosed*> pieces;
  for (auto& p : r.pieces) pieces.push_back(&p);
  std::sort(pieces.begin(), pieces.end(), [](const LocallyClosed* a, const LocallyClosed* b) {
    return piece_sort_key(*a) < piece_sort_key(*b);
  });
  out["pieces"] = json::array();
  for (auto* p : pieces)
    out["pieces"].push_back(json{{"outer", gens_of(p->outer)}, {"inner", gens_of(p->inner)}});
  if (r.has_chain) {
    out["chain"] = json::array();
    for (auto& I : r.chain) out["chain"].push_back(gens_of(I));
  }
  return out;
}

CommIdeal ideal_in(const RingPtr& C, const json& gens) {
  std::vector<CPoly> gs;
  for (auto& g : gens) gs.push_back(CPoly::parse(C, g.get<std::string>()));
  return make_ideal(C, std::move(gs));
}

Constructible region_in(const RingPtr& C, const json& j) {
  Constructible r;
  for (auto& p : j.at("pieces"))
    r.pieces.push_back(LocallyClosed{ideal_in(C, p.at("outer")), ideal_in(C, p.at("inner"))});
  if (j.contains("chain")) {
    r.has_chain = true;
    for (auto& I : j.at("chain")) r.chain.push_back(ideal_in(C, I));
  }
  return r;
}

// same comparator the stratifier sorts by: degree, then coefficient list
bool b_less(const CPoly& a, const CPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int k = 0; k <= a.deg(); ++k) {
    Mono m = mono_one(a.ring()->size());
    m[0] = (unsigned)k;
    Rat ca = a.coeff(m), cb = b.coeff(m);
    if (!(ca == cb)) return ca < cb;
  }
  return false;
}

}  // namespace

std::string serialize(const Database& db) {
  json j;
  j["format"] = "bsato-db";
  j["version"] = kVersion;
  j["kind"] = db.kind;
  j["n"] = db.n;
  j["d"] = db.d;
  j["projective"] = db.projective;
  j["coeffs"] = names_of(db.C);
  j["ring"] = names_of(db.f.ring());
  j["f"] = db.f.is_zero() && !db.f.ring() ? "" : db.f.str();
  j["meta"] = json::object();
  for (auto& [k, v] : db.meta) j["meta"][k] = v;

  std::vector<const Stratum*> strata;
  for (auto& st : db.strata) strata.push_back(&st);
  std::sort(strata.begin(), strata.end(),
            [](const Stratum* a, const Stratum* b) { return a->b.str() < b->b.str(); });
  j["strata"] = json::array();
  for (auto* st : strata)
    j["strata"].push_back(json{{"b", st->b.str()}, {"region", region_of(st->region)}});

  if (db.kind == "ann") {
    j["s"] = db.s_name;
    j["algebra"] = names_of(db.sig.ring);
    json pairs = json::array();
    for (auto& [p, d] : db.sig.pairs)
      pairs.push_back(json::array({db.sig.ring->name(p), db.sig.ring->name(d)}));
    j["pairs"] = pairs;
    // ann strata keep their in-memory order: sorted by first piece
    std::vector<const AnnStratum*> ann;
    for (auto& st : db.ann_strata) ann.push_back(&st);
    std::sort(ann.begin(), ann.end(), [](const AnnStratum* a, const AnnStratum* b) {
      return piece_sort_key(a->region.pieces.front()) < piece_sort_key(b->region.pieces.front());
    });
    j["ann_strata"] = json::array();
    for (auto* st : ann) {
      json gens = json::array();
      for (auto& g : st->gens) gens.push_back(g.str());
      j["ann_strata"].push_back(json{{"gens", gens}, {"region", region_of(st->region)}});
    }
  }
  return j.dump(2) + "\n";
}

Database deserialize(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("database: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "bsato-db")
      throw parse_error("database: not a bsato-db file");
    if (j.at("version").get<int>() != kVersion)
      throw parse_error("database: unknown format version " + j.at("version").dump());

    Database db;
    db.kind = j.at("kind").get<std::string>();
    db.n = j.at("n").get<int>();
    db.d = j.at("d").get<int>();
    db.projective = j.at("projective").get<bool>();
    std::vector<std::string> cnames, rnames;
    for (auto& v : j.at("coeffs")) cnames.push_back(v.get<std::string>());
    for (auto& v : j.at("ring")) rnames.push_back(v.get<std::string>());
    if (!cnames.empty()) db.C = Ring::make(cnames);
    RingPtr R = rnames.empty() ? nullptr : Ring::make(rnames);
    std::string ftext = j.at("f").get<std::string>();
    if (!ftext.empty()) db.f = CPoly::parse(R, ftext);
    for (auto& [k, v] : j.at("meta").items()) db.meta[k] = v.get<std::string>();

    for (auto& st : j.at("strata")) {
      Stratum s;
      s.b = CPoly::parse(Ring::make({"s"}), st.at("b").get<std::string>());
      s.region = region_in(db.C, st.at("region"));
      db.strata.push_back(std::move(s));
    }
    std::sort(db.strata.begin(), db.strata.end(),
              [](const Stratum& a, const Stratum& b) { return b_less(a.b, b.b); });

    if (db.kind == "ann") {
      db.s_name = j.at("s").get<std::string>();
      std::vector<std::string> anames;
      for (auto& v : j.at("algebra")) anames.push_back(v.get<std::string>());
      std::vector<std::pair<std::string, std::string>> pairs;
      for (auto& p : j.at("pairs"))
        pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
      db.sig = AlgebraSignature::make(Ring::make(anames), pairs);
      for (auto& st : j.at("ann_strata")) {
        AnnStratum s;
        for (auto& g : st.at("gens")) s.gens.push_back(WeylElem::parse(db.sig, g.get<std::string>()));
        s.region = region_in(db.C, st.at("region"));
        db.ann_strata.push_back(std::move(s));
      }
    }
    return db;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("database: ") + e.what());
  }
}

void save_database(const Database& db, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write " + path);
  out << serialize(db);
}

Database load_database(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

}  // namespace bsato
