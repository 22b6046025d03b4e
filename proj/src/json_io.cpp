#include "mipf/json_io.hpp"

#include <sstream>

#include "json.hpp"
#include "mipf/error.hpp"

namespace mipf {

namespace {

using nlohmann::json;

json complex_pair(const cplx& z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const CMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.rows(); ++j) row.push_back(complex_pair(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json rat_list(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.str());
  return a;
}

}  // namespace

std::string modular_data_json(const ModularData& md) {
  json j;
  j["theory"] = theory_name(md.theory);
  j["labels"] = md.labels;
  j["c"] = md.c.str();
  j["h"] = rat_list(md.h);
  j["S"] = matrix_json(md.S);
  json t = json::array();
  for (const cplx& z : md.T) t.push_back(complex_pair(z));
  j["T"] = t;
  return j.dump(2) + "\n";
}

std::string mipf_json(const Mipf& m) {
  json j;
  j["theory"] = theory_name(m.theory);
  j["M"] = m.M;
  j["builder"] = m.builder;
  json params = json::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  j["params"] = params;
  return j.dump(2) + "\n";
}

Mipf mipf_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw MipfError(ErrKind::InvalidInput,
                    std::string("invariant file is not valid JSON: ") +
                        e.what());
  }
  Mipf m;
  try {
    m.theory = parse_theory(j.at("theory").get<std::string>());
    m.M = j.at("M").get<std::vector<std::vector<long long>>>();
    m.builder = j.value("builder", std::string("import"));
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items())
        m.params.emplace_back(k, v.get<long long>());
  } catch (const json::exception& e) {
    throw MipfError(ErrKind::InvalidInput,
                    std::string("invariant file has the wrong shape: ") +
                        e.what());
  }
  const size_t n = m.M.size();
  if (n == 0)
    throw MipfError(ErrKind::InvalidInput, "invariant matrix is empty");
  for (const auto& row : m.M)
    if (row.size() != n)
      throw MipfError(ErrKind::InvalidInput,
                      "invariant matrix is not square");
  return m;
}

std::string clone_report_json(const CloneReport& rep) {
  json j;
  j["params"] = {{"rtilde", rep.rtilde}, {"m", rep.M}, {"r", rep.r}};
  j["block_count"] = rep.block_count;
  json mult = json::array();
  for (int i = 0; i < rep.block_count; ++i) mult.push_back(1);
  j["multiplicities"] = mult;
  j["s_residual"] = rep.solve_residual;
  j["iso_bijection"] = rep.bijection;
  j["s_match_residual"] = rep.s_match_residual;
  j["weights_parent"] = rat_list(rep.weights_ext);
  j["weights_target"] = rat_list(rep.weights_target);
  j["spinor_shift"] = rep.spinor_shift.str();
  j["spinor_shift_expected"] = rep.spinor_shift_expected.str();
  return j.dump(2) + "\n";
}

std::string meromorphic_report_json(const MeromorphicReport& rep) {
  json j;
  j["m"] = rep.M;
  j["intermediate_count"] = rep.intermediate_count;
  j["intermediate_weights"] = rat_list(rep.intermediate_weights);
  j["all_simple_currents"] = rep.all_simple_currents;
  j["chosen_current"] = rep.chosen_current;
  j["final_count"] = rep.final_count;
  j["c"] = rep.c.str();
  return j.dump(2) + "\n";
}

std::string zspectrum_csv(const ZSpectrum& z) {
  std::ostringstream os;
  os << "h_L,h_R,multiplicity\n";
  for (const ZState& s : z.states)
    os << s.hl.str() << "," << s.hr.str() << "," << s.mult << "\n";
  return os.str();
}

std::string fusion_csv(const ModularData& md, const FusionRing& ring) {
  std::ostringstream os;
  os << "a,b,c,N\n";
  for (int a = 0; a < ring.n; ++a)
    for (int b = 0; b < ring.n; ++b)
      for (int c = 0; c < ring.n; ++c)
        if (ring.at(a, b, c) != 0)
          os << md.labels[a] << "," << md.labels[b] << "," << md.labels[c]
             << "," << ring.at(a, b, c) << "\n";
  return os.str();
}

}  // namespace mipf
