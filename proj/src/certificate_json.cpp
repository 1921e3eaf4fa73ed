#include "chowla/certificate_json.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>

namespace chowla {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json num_field(const Int& v) {
  if (!v.fits_slong_p()) return ordered_json(v.get_str());
  return ordered_json(static_cast<std::int64_t>(v.get_si()));
}

ordered_json str_field(const Int& v) { return ordered_json(v.get_str()); }

Int read_int(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("certificate JSON: missing ") + key);
  const ordered_json& v = j.at(key);
  if (v.is_string()) return Int(v.get<std::string>());
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
  throw std::invalid_argument(std::string("certificate JSON: field ") + key + " is not an integer");
}

ordered_json family_json(const SolutionFamily& fam) {
  ordered_json members = ordered_json::array();
  for (const FamilyMember& mem : fam.members) {
    members.push_back({{"n", str_field(mem.n)}, {"m", str_field(mem.m)}});
  }
  return {{"l", str_field(fam.seed.l)},
          {"seed",
           {{"n0", num_field(fam.seed.n0)},
            {"m0", str_field(fam.seed.m0)},
            {"t0", str_field(fam.seed.t0)}}},
          {"pellN", str_field(fam.pell_n)},
          {"fundamental",
           {{"r", str_field(fam.fundamental.x)}, {"s", str_field(fam.fundamental.y)}}},
          {"members", members}};
}

}  // namespace

std::string certificate_to_json(const SignChangeCertificate& cert) {
  ordered_json j;
  j["poly"] = {{"a", num_field(cert.poly.a)},
               {"b", num_field(cert.poly.b)},
               {"c", num_field(cert.poly.c)},
               {"D", num_field(cert.poly.disc)}};
  j["A0"] = num_field(cert.a0);
  j["witnesses"] = ordered_json::array();
  for (const Witness& w : cert.witnesses) {
    j["witnesses"].push_back({{"n", num_field(w.n)},
                              {"value", str_field(w.value)},
                              {"l", str_field(w.l)},
                              {"m", str_field(w.m)},
                              {"lambda", w.lambda}});
  }
  j["families"] = ordered_json::array();
  for (const SolutionFamily& fam : cert.families) {
    j["families"].push_back(family_json(fam));
  }
  return j.dump() + "\n";
}

std::string family_to_json(const SolutionFamily& fam) { return family_json(fam).dump() + "\n"; }

SignChangeCertificate certificate_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);  // throws nlohmann parse_error on bad syntax

  const ordered_json& jp = j.at("poly");
  QuadraticPoly poly = QuadraticPoly::make(read_int(jp, "a"), read_int(jp, "b"), read_int(jp, "c"));
  if (poly.disc != read_int(jp, "D")) {
    throw std::invalid_argument("certificate JSON: stored discriminant is inconsistent");
  }

  SignChangeCertificate cert;
  cert.poly = poly;
  cert.a0 = read_int(j, "A0");

  const ordered_json& jw = j.at("witnesses");
  if (!jw.is_array() || jw.size() != 2) {
    throw std::invalid_argument("certificate JSON: expected exactly two witnesses");
  }
  for (int i = 0; i < 2; ++i) {
    const ordered_json& w = jw.at(i);
    int lambda = w.at("lambda").get<int>();
    if (lambda != 1 && lambda != -1) throw std::invalid_argument("certificate JSON: lambda must be ±1");
    cert.witnesses[i] = {read_int(w, "n"), read_int(w, "value"), read_int(w, "l"),
                         read_int(w, "m"), lambda};
  }

  const ordered_json& jf = j.at("families");
  if (!jf.is_array() || jf.size() != 2) {
    throw std::invalid_argument("certificate JSON: expected exactly two families");
  }
  for (int i = 0; i < 2; ++i) {
    const ordered_json& f = jf.at(i);
    const ordered_json& js = f.at("seed");
    SolutionFamily fam;
    fam.seed.poly = poly;
    fam.seed.l = read_int(f, "l");
    fam.seed.n0 = read_int(js, "n0");
    fam.seed.m0 = read_int(js, "m0");
    fam.seed.t0 = read_int(js, "t0");
    fam.pell_n = read_int(f, "pellN");
    const ordered_json& jfund = f.at("fundamental");
    fam.fundamental = {fam.pell_n, read_int(jfund, "r"), read_int(jfund, "s")};
    for (const ordered_json& mem : f.at("members")) {
      fam.members.push_back({read_int(mem, "n"), read_int(mem, "m")});
    }
    cert.families[i] = std::move(fam);
  }
  return cert;
}

}  // namespace chowla
