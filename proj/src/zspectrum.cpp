#include "mipf/zspectrum.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "mipf/characters.hpp"
#include "mipf/error.hpp"

namespace mipf {

namespace {

using Accum = std::map<std::pair<Rat, Rat>, long long>;

ZSpectrum finalize(Accum& acc, const Rat& cutoff, long long divisor) {
  ZSpectrum z;
  z.cutoff = cutoff;
  for (auto& [key, mult] : acc) {
    if (mult == 0) continue;
    if (mult % divisor != 0 || mult < 0)
      throw MipfError(ErrKind::Verification,
                      "spectrum accumulation produced a state count that is "
                      "not a non-negative multiple of " +
                          std::to_string(divisor));
    z.states.push_back({key.first, key.second, mult / divisor});
  }
  return z;
}

// Add w · X(q) X̄(q̄) to the accumulator (series exponents are h − 1/24).
void add_square(Accum& acc, const QSeries& x, const QSeries& y, long long w,
                const Rat& cutoff) {
  const Rat c24(1, 24);
  const auto tx = x.terms(), ty = y.terms();
  for (const auto& [el, cl] : tx) {
    const Rat hl = el + c24;
    if (cutoff < hl) break;
    for (const auto& [er, cr] : ty) {
      const Rat hr = er + c24;
      if (cutoff < hl + hr) break;
      acc[{hl, hr}] += w * cl * cr;
    }
  }
}

// Partition numbers p(0..nmax) from 1/η.
std::vector<long long> oscillator_tower(long long nmax) {
  const QSeries inv = eta(Rat(nmax + 1)).inverse();
  std::vector<long long> p(nmax + 1, 0);
  for (const auto& [e, c] : inv.terms()) {
    const Rat n = e + Rat(1, 24);
    if (n.is_integer() && n.num() >= 0 && n.num() <= nmax) p[n.num()] = c;
  }
  return p;
}

void accumulate_circle_lattice(Accum& acc, long long p, long long q,
                               long long weight, const Rat& cutoff) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw MipfError(ErrKind::InvalidInput,
                    "radius parameters need p, q >= 1 with gcd(p, q) = 1");
  long long nmax = 0;
  while (Rat(nmax) < cutoff) ++nmax;
  const auto tower = oscillator_tower(nmax);

  for (long long m = 0;; ++m) {
    if (cutoff < Rat(m * m * q, 2 * p)) break;
    for (long long w = 0;; ++w) {
      const Rat base = Rat(m * m * q, 2 * p) + Rat(w * w * p, 2 * q);
      if (cutoff < base) break;
      const Rat hl = Rat((m * q + w * p) * (m * q + w * p), 4 * p * q);
      const Rat hr = Rat((m * q - w * p) * (m * q - w * p), 4 * p * q);
      // (±m, ±w) give the same |h| pair twice over, once as (hl, hr) and
      // once mirrored; enumerate sign orbits explicitly.
      std::vector<std::pair<Rat, Rat>> pts;
      pts.push_back({hl, hr});
      if (m != 0 && w != 0) pts.push_back({hl, hr});  // (−m,−w)
      if (m != 0 || w != 0) pts.push_back({hr, hl});  // (−m,w) or (m,−w)
      if (m != 0 && w != 0) pts.push_back({hr, hl});
      for (const auto& [al, ar] : pts)
        for (long long nl = 0; !(cutoff < al + Rat(nl) + ar); ++nl)
          for (long long nr = 0; !(cutoff < al + Rat(nl) + ar + Rat(nr)); ++nr)
            acc[{al + Rat(nl), ar + Rat(nr)}] +=
                weight * tower[nl] * tower[nr];
    }
  }
}

}  // namespace

bool integer_spins(const ZSpectrum& z) {
  for (const ZState& s : z.states)
    if (!(s.hl - s.hr).is_integer()) return false;
  return true;
}

ZSpectrum z_from_mipf(const ModularData& md, const Mipf& m,
                      const Rat& cutoff) {
  if (md.theory.family != Family::CircleU1 &&
      md.theory.family != Family::OrbifoldC1)
    throw MipfError(ErrKind::InvalidInput,
                    "state spectra are only assembled for the c = 1 "
                    "families (no affine characters here)");
  if ((int)m.M.size() != md.n)
    throw MipfError(ErrKind::InvalidInput,
                    "invariant size does not match the theory");
  const int r = md.theory.rank;
  const Rat series_cut = cutoff + Rat(1, 24);
  std::vector<QSeries> chi;
  if (md.theory.family == Family::CircleU1) {
    for (int j = 0; j < md.n; ++j)
      chi.push_back(circle_character(r, j, series_cut));
  } else {
    chi = orbifold_characters(r, series_cut);
  }
  Accum acc;
  for (int i = 0; i < md.n; ++i)
    for (int j = 0; j < md.n; ++j)
      if (m.at(i, j) != 0) add_square(acc, chi[i], chi[j], m.at(i, j), cutoff);
  return finalize(acc, cutoff, 1);
}

ZSpectrum geometric_circle_spectrum(long long p, long long q,
                                    const Rat& cutoff) {
  Accum acc;
  accumulate_circle_lattice(acc, p, q, 1, cutoff);
  return finalize(acc, cutoff, 1);
}

ZSpectrum geometric_orbifold_spectrum(long long p, long long q,
                                      const Rat& cutoff) {
  Accum acc;
  // 2·Z_orb = Z_circle + |D|² + 2|A|² + 2|B|².  The B contribution has
  // signed series coefficients; the combination stays non-negative and
  // even, which finalize() verifies.
  accumulate_circle_lattice(acc, p, q, 1, cutoff);
  const Rat series_cut = cutoff + Rat(1, 24);
  const QSeries d = block_d(series_cut);
  const QSeries a = block_a(series_cut);
  const QSeries b = block_b(series_cut);
  add_square(acc, d, d, 1, cutoff);
  add_square(acc, a, a, 2, cutoff);
  add_square(acc, b, b, 2, cutoff);
  return finalize(acc, cutoff, 2);
}

}  // namespace mipf
