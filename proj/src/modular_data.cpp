#include "mipf/modular_data.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "mipf/error.hpp"
#include "mipf/fusion.hpp"

namespace mipf {

std::string theory_name(const TheoryId& id) {
  switch (id.family) {
    case Family::CircleU1: return "u1:" + std::to_string(id.rank);
    case Family::OrbifoldC1: return "orb:" + std::to_string(id.rank);
    case Family::AffineD2: return "D2:" + std::to_string(id.rank);
    case Family::AffineB2: return "B2:" + std::to_string(id.rank);
  }
  return "?";
}

TheoryId parse_theory(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw MipfError(ErrKind::InvalidInput,
                    "theory spec must look like 'family:param', got '" + spec + "'");
  std::string fam = spec.substr(0, colon);
  int rank;
  try {
    size_t pos = 0;
    rank = std::stoi(spec.substr(colon + 1), &pos);
    if (pos != spec.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw MipfError(ErrKind::InvalidInput, "bad theory parameter in '" + spec + "'");
  }
  TheoryId id;
  id.rank = rank;
  if (fam == "u1") id.family = Family::CircleU1;
  else if (fam == "orb") id.family = Family::OrbifoldC1;
  else if (fam == "D2" || fam == "d2") id.family = Family::AffineD2;
  else if (fam == "B2" || fam == "b2") id.family = Family::AffineB2;
  else
    throw MipfError(ErrKind::InvalidInput,
                    "unknown theory family '" + fam + "' (use u1|orb|D2|B2)");
  int min_rank = id.family == Family::AffineD2 ? 2 : 1;
  if (rank < min_rank)
    throw MipfError(ErrKind::InvalidInput,
                    "theory parameter out of range in '" + spec + "'");
  return id;
}

int ModularData::index_of(const std::string& label) const {
  for (int i = 0; i < n; ++i)
    if (labels[i] == label) return i;
  throw MipfError(ErrKind::InvalidInput, "no primary labelled '" + label +
                                             "' in " + theory_name(theory));
}

bool DataCheck::pass(double eps) const {
  return sym_residual <= eps && unitary_residual <= eps && s2_is_permutation &&
         s2_perm_residual <= eps && st_residual <= eps &&
         t_phase_residual <= eps && verlinde_residual <= eps &&
         vacuum_row_positive;
}

std::string DataCheck::describe() const {
  std::ostringstream os;
  os << "S=S^T residual " << sym_residual << "; SS*=1 residual "
     << unitary_residual << "; S^2=C "
     << (s2_is_permutation ? "permutation" : "NOT a permutation") << " residual "
     << s2_perm_residual << "; (ST)^3=S^2 residual " << st_residual
     << "; T phase residual " << t_phase_residual << "; Verlinde residual "
     << verlinde_residual << "; vacuum row "
     << (vacuum_row_positive ? "positive" : "NOT positive");
  return os.str();
}

DataCheck check_modular_data(const ModularData& md, double eps) {
  DataCheck r;
  const CMat& S = md.S;
  int n = md.n;
  r.sym_residual = CMat::max_abs_diff(S, S.transpose());
  r.unitary_residual = unitarity_residual(S);

  CMat S2 = S * S;
  std::vector<int> perm = as_permutation(S2, 1e-6);
  r.s2_is_permutation = !perm.empty();
  if (r.s2_is_permutation) {
    CMat C(n, n);
    for (int i = 0; i < n; ++i) C.at(i, perm[i]) = 1.0;
    r.s2_perm_residual = CMat::max_abs_diff(S2, C);
  } else {
    r.s2_perm_residual = 1.0;
  }

  CMat ST(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ST.at(i, j) = S.at(i, j) * md.T[j];
  r.st_residual = CMat::max_abs_diff(ST * ST * ST, S2);

  double tres = 0.0;
  for (int i = 0; i < n; ++i) {
    cplx want = unit_phase(md.h[i] - md.c * Rat(1, 24));
    tres = std::max(tres, std::abs(md.T[i] - want));
  }
  r.t_phase_residual = tres;

  r.vacuum_row_positive = true;
  for (int j = 0; j < n; ++j)
    if (!(S.at(0, j).real() > 0.0) || std::abs(S.at(0, j).imag()) > eps)
      r.vacuum_row_positive = false;

  r.verlinde_residual = verlinde_integrality_residual(S);
  return r;
}

namespace {

struct IdLess {
  bool operator()(const TheoryId& a, const TheoryId& b) const {
    if (a.family != b.family) return (int)a.family < (int)b.family;
    return a.rank < b.rank;
  }
};

std::mutex g_registry_mutex;
std::map<TheoryId, std::shared_ptr<const ModularData>, IdLess> g_registry;

}  // namespace

std::shared_ptr<const ModularData> modular_data(const TheoryId& id) {
  {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto it = g_registry.find(id);
    if (it != g_registry.end()) return it->second;
  }
  ModularData md;
  switch (id.family) {
    case Family::CircleU1: md = build_circle(id.rank); break;
    case Family::OrbifoldC1: md = build_orbifold(id.rank); break;
    case Family::AffineD2: md = build_affine_d(id.rank); break;
    case Family::AffineB2: md = build_affine_b(id.rank); break;
  }

  DataCheck chk = check_modular_data(md, 1e-8);
  if (!chk.pass(1e-8))
    throw MipfError(ErrKind::Internal, "modular data for " + theory_name(id) +
                                           " failed validation: " + chk.describe());
  // record conjugation from the validated S²
  std::vector<int> perm = as_permutation(md.S * md.S, 1e-6);
  md.conj = perm;

  auto ptr = std::make_shared<const ModularData>(std::move(md));
  std::lock_guard<std::mutex> lock(g_registry_mutex);
  auto [it, inserted] = g_registry.emplace(id, ptr);
  return it->second;
}

}  // namespace mipf
