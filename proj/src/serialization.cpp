#include "valfour/serialization.hpp"

namespace valfour {

using nlohmann::json;

json to_json(const SpectralField& f) {
  json j;
  j["n"] = f.n;
  j["L"] = f.L;
  j["layout"] = f.n == 2 ? "circle-modes" : (f.n == 3 ? "sh-lm" : "ray-values");
  std::vector<double> re, im;
  for (int i = 0; i < f.coeffs.size(); ++i) {
    re.push_back(f.coeffs[i].real());
    im.push_back(f.coeffs[i].imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

SpectralField spectral_field_from_json(const json& j) {
  SpectralField f(j.at("n").get<int>(), j.at("L").get<int>());
  auto re = j.at("re").get<std::vector<double>>();
  auto im = j.at("im").get<std::vector<double>>();
  if (static_cast<int>(re.size()) != f.coeffs.size() || im.size() != re.size())
    throw std::invalid_argument("spectral_field_from_json: coefficient count mismatch");
  for (std::size_t i = 0; i < re.size(); ++i) f.coeffs[static_cast<int>(i)] = cplx(re[i], im[i]);
  return f;
}

namespace {
std::vector<int> mask_to_indices(std::uint8_t m, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (m >> (i - 1) & 1u) out.push_back(i);
  return out;
}
std::uint8_t indices_to_mask(const std::vector<int>& idx) {
  std::uint8_t m = 0;
  for (int i : idx) m |= static_cast<std::uint8_t>(1u << (i - 1));
  return m;
}
}  // namespace

json to_json(const HomForm& w) {
  json j;
  j["space"] = {{"dim", w.n}, {"label", w.space}};
  j["form_degree"] = w.q;
  j["value_degree"] = w.p;
  j["homogeneity"] = w.r;
  json unit;
  unit["orient"] = w.unit.orient;
  unit["density"] = w.unit.density;
  j["unit"] = unit;
  if (w.atom.size() == 1 && w.atom.count(0)) {
    j["atom"] = {{"re", w.atom.at(0).real()}, {"im", w.atom.at(0).imag()}};
  } else if (w.atom.empty()) {
    j["atom"] = nullptr;
  } else {
    json atoms = json::array();
    for (auto& [J, c] : w.atom)
      atoms.push_back({{"J", mask_to_indices(J, w.n)}, {"re", c.real()}, {"im", c.imag()}});
    j["atom"] = atoms;
  }
  json coeffs = json::array();
  for (auto& [key, f] : w.coeffs) {
    coeffs.push_back({{"I", mask_to_indices(key.first, w.n)},
                      {"J", mask_to_indices(key.second, w.n)},
                      {"field", to_json(f)}});
  }
  j["coeffs"] = coeffs;
  return j;
}

HomForm homform_from_json(const json& j) {
  HomForm w(j.at("space").at("dim").get<int>(), j.at("form_degree").get<int>(),
            j.at("value_degree").get<int>(), j.at("homogeneity").get<int>());
  w.space = j.at("space").at("label").get<std::string>();
  if (j.contains("unit")) {
    if (j["unit"].contains("orient")) w.unit.orient = j["unit"]["orient"].get<std::map<std::string, int>>();
    if (j["unit"].contains("density")) w.unit.density = j["unit"]["density"].get<std::map<std::string, int>>();
  }
  if (j.contains("atom") && !j["atom"].is_null()) {
    if (j["atom"].is_object()) {
      w.atom[0] = cplx(j["atom"].at("re").get<double>(), j["atom"].at("im").get<double>());
    } else {
      for (auto& a : j["atom"])
        w.atom[indices_to_mask(a.at("J").get<std::vector<int>>())] =
            cplx(a.at("re").get<double>(), a.at("im").get<double>());
    }
  }
  for (auto& c : j.at("coeffs")) {
    std::uint8_t I = indices_to_mask(c.at("I").get<std::vector<int>>());
    std::uint8_t J = indices_to_mask(c.at("J").get<std::vector<int>>());
    w.coeffs[{I, J}] = spectral_field_from_json(c.at("field"));
  }
  w.check_consistent();
  return w;
}

json to_json(const ValCurrent& v) {
  json j = to_json(v.cur);
  j["degree"] = v.k;
  j["parity"] = v.parity;
  j["provenance"] = v.provenance;
  return j;
}

ValCurrent valcurrent_from_json(const json& j) {
  ValCurrent v;
  v.cur = homform_from_json(j);
  v.n = v.cur.n;
  v.k = j.at("degree").get<int>();
  v.parity = j.value("parity", 0);
  v.provenance = j.value("provenance", std::string("file"));
  if (v.cur.q != v.n - v.k) throw std::invalid_argument("valcurrent_from_json: degree/shape mismatch");
  return v;
}

json to_json(const Polytope& K) {
  json j;
  j["n"] = K.n;
  json verts = json::array();
  for (int i = 0; i < K.vertices.rows(); ++i) {
    std::vector<double> row(K.n);
    for (int c = 0; c < K.n; ++c) row[c] = K.vertices(i, c);
    verts.push_back(row);
  }
  j["vertices"] = verts;
  return j;
}

Polytope polytope_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::vector<double>> rows;
  for (auto& r : j.at("vertices")) rows.push_back(r.get<std::vector<double>>());
  return Polytope::from_rows(n, rows);
}

json to_json(const CroftonData& d) {
  json j;
  j["n"] = d.n;
  j["k"] = d.k_gr;
  j["atomic"] = d.atomic;
  if (d.atomic) {
    json atoms = json::array();
    for (auto& a : d.atoms) {
      json fa;
      std::vector<std::vector<double>> cols;
      for (int c = 0; c < a.frame.cols(); ++c) {
        std::vector<double> col(d.n);
        for (int r = 0; r < d.n; ++r) col[r] = a.frame(r, c);
        cols.push_back(col);
      }
      fa["frame"] = cols;
      fa["weight"] = a.weight;
      atoms.push_back(fa);
    }
    j["atoms"] = atoms;
  } else {
    j["density"] = to_json(d.density);
  }
  return j;
}

CroftonData crofton_from_json(const json& j) {
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  if (j.at("atomic").get<bool>()) {
    std::vector<CroftonAtom> atoms;
    for (auto& fa : j.at("atoms")) {
      CroftonAtom a;
      auto cols = fa.at("frame").get<std::vector<std::vector<double>>>();
      a.frame.resize(n, static_cast<int>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < n; ++r) a.frame(r, static_cast<int>(c)) = cols[c][r];
      a.weight = fa.at("weight").get<double>();
      atoms.push_back(a);
    }
    return CroftonData::atomic_data(n, k, atoms);
  }
  return CroftonData::smooth(n, k, spectral_field_from_json(j.at("density")));
}

}  // namespace valfour
