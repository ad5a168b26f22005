#include "lawless/engine.hpp"
#include "lawless/free_group.hpp"

namespace lawless {

MifFreeWitness mif_free_witness(const MixedWord& mw, int rank) {
  FreeBackend fb(rank);
  MifFreeWitness out;
  out.normal_form = mw.cyclic_normal_form();
  const auto& segs = out.normal_form.segments();
  if (segs.size() == 1 && segs.front().coefficient.empty()) {
    throw InvalidArgument("mixed word is conjugate to a power of x: " + mw.str());
  }
  std::size_t coeff_total = 0;
  for (const auto& s : segs) coeff_total += s.coefficient.length();
  const auto l = static_cast<long long>(segs.size());

  // Least u in shortlex order commuting with no coefficient. Minimality
  // makes it a non-power: a root of u would qualify and be shorter.
  bool found = false;
  for_each_reduced_word(rank, static_cast<int>(coeff_total) + 2, [&](const FreeWord& u) {
    for (const auto& s : segs) {
      if (commutator(u, s.coefficient).empty()) return true;
    }
    if (free_root(u).exponent != 1) return true;
    out.u = u;
    found = true;
    return false;
  });
  if (!found) throw CertificateFailure("no admissible u found for " + mw.str());

  const auto u2 = static_cast<long long>(out.u.pow(2).length());
  const long long need = u2 * l + static_cast<long long>(coeff_total);
  long long m = 1;
  while (static_cast<long long>(out.u.pow(m).length()) < need) ++m;
  out.m = m;
  out.element = out.u.pow(m);
  out.value = substitute_mixed(out.normal_form, out.element, fb);
  if (commutator(out.value, out.u).empty()) {
    throw CertificateFailure("w(u^m) commutes with u for " + mw.str());
  }
  return out;
}

}  // namespace lawless
