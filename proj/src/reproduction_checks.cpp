#include <functional>
#include <sstream>

#include "cp1calc/job.hpp"

namespace cp1 {

namespace {

std::string vec(const IntVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string vec(const ModTwoVector& v) { return vec(IntVector(v.begin(), v.end())); }

std::string mu2(const InvariantSystem& s) {
  // rank-2 cubic in the order (e0^3, e0^2 e1, e0 e1^2, e1^3)
  return vec(IntVector{s.mu(0, 0, 0), s.mu(0, 0, 1), s.mu(0, 1, 1), s.mu(1, 1, 1)});
}

CheckResult check(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    return {std::move(name), ok, std::move(detail)};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("error: ") + e.what()};
  }
}

RankTwoBundle e_prime(int k) {
  // c1 = -sigma_k^*, c2 = -1 over N_1 = CP2bar, N_2 = S4
  if (k == 1) return RankTwoBundle(standard(StandardPiece::CP2bar), {-1}, -1);
  return RankTwoBundle(standard(StandardPiece::S4), {}, -1);
}

InvariantSystem model_target(int k) {
  const RankTwoBundle e = e_prime(k);
  const InvariantSystem p = projectivize(e.base(), e);
  return k == 1 ? sum_with_s6(p) : blowup_point(p);
}

IntMatrix model_witness(int k) {
  if (k == 1) return IntMatrix{{1, 0}, {0, -1}};  // x -> a, z -> -y
  return IntMatrix{{1, 0}, {1, -1}};               // x -> a + z', z -> -z'
}

}  // namespace

std::vector<CheckResult> reproduction_checks(int threads) {
  std::vector<CheckResult> out;

  out.push_back(check("P(E) over CP2, c1=(1), c2=0", [] {
    const FourManifold n = standard(StandardPiece::CP2);
    const InvariantSystem s = projectivize(n, RankTwoBundle(n, {1}, 0));
    const bool ok = mu2(s) == "(1,-1,1,0)" && s.p1 == IntVector{4, 0} && s.w2 == ModTwoVector{0, 0} && s.b3 == 0;
    return std::make_pair(ok, "mu=" + mu2(s) + " p1=" + vec(s.p1) + " w2=" + vec(s.w2));
  }));

  for (int k : {1, 2}) {
    out.push_back(check("M_" + std::to_string(k) + " invariants", [k] {
      const InvariantSystem s = mk_system(k);
      // mu listed as (x^3, x^2 z, x z^2, z^3)
      const std::string want_mu = k == 1 ? "(0,1,-1,0)" : "(0,1,-1,1)";
      const IntVector want_p1 = k == 1 ? IntVector{0, 0} : IntVector{0, 4};
      const bool ok = mu2(s) == want_mu && s.p1 == want_p1 && s.w2 == ModTwoVector{0, 0} && s.b3 == 0;
      return std::make_pair(ok, "mu=" + mu2(s) + " p1=" + vec(s.p1));
    }));
  }

  for (int k : {1, 2}) {
    out.push_back(check("M_" + std::to_string(k) + " ~ P(E'_" + std::to_string(k) + ")" + (k == 2 ? " # CP3bar" : ""),
                        [k, threads] {
                          const InvariantSystem m = mk_system(k);
                          const InvariantSystem t = model_target(k);
                          const bool named = verify_witness(m, t, model_witness(k), true);
                          SearchOptions opts;
                          opts.bound = 3;
                          opts.check_c1 = true;
                          opts.threads = threads;
                          const auto found = find_isomorphism(m, t, opts);
                          const bool ok = named && found && verify_witness(m, t, found->matrix, true);
                          std::ostringstream d;
                          d << "named witness " << (named ? "verifies" : "FAILS") << " with c1; search "
                            << (found ? "found" : "found none");
                          if (found) d << " " << vec(found->matrix.row(0)) << vec(found->matrix.row(1));
                          return std::make_pair(ok, d.str());
                        }));
  }

  for (const char* base : {"S4", "CP2"}) {
    out.push_back(check(std::string("transitions of trivial bundle over ") + base + " are distinct", [base] {
      const FourManifold n = standard(std::string_view(base));
      const TransitionResult t = conifold_transition(n, RankTwoBundle(n, IntVector(n.rank(), 0), 0));
      const auto cert = certify_distinct(t.z1, t.z2, {2, 3, 5});
      const bool ok = cert && cert->kind == CertificateKind::Fingerprint && recheck(*cert, t.z1, t.z2);
      return std::make_pair(ok, cert && cert->prime ? "fingerprint differs at p=" + std::to_string(*cert->prime)
                                                    : std::string("no certificate"));
    }));
  }

  out.push_back(check("Chern data of E_1, E_2", [] {
    const std::vector<std::pair<std::string, IntVector>> cases{{"S4", {}}, {"CP2", {1}}, {"S2xS2", {1, 2}},
                                                               {"CP2 # CP2bar", {3, -1}}};
    for (const auto& [expr, c1] : cases) {
      const FourManifold n = parse_manifold_expression(expr);
      const RankTwoBundle e(n, c1, 5);
      const TransitionResult t = conifold_transition(n, e);
      IntVector want1 = c1;
      want1.push_back(-1);
      if (t.e1.c1() != want1 || t.e2.c1() != c1 || t.e1.c2() != 4 || t.e2.c2() != 4 || !t.e2.base().same_data(n))
        return std::make_pair(false, "mismatch over " + expr);
    }
    return std::make_pair(true, std::string("4 bases"));
  }));

  out.push_back(check("P(E) ~ P(E tensor L) via a -> a + l", [threads] {
    const std::vector<std::tuple<std::string, IntVector, std::int64_t, IntVector>> cases{
        {"CP2", {0}, 0, {1}}, {"CP2bar", {-1}, -1, {1}}, {"S2xS2", {1, 0}, 2, {1, -1}}, {"CP2 # CP2bar", {1, 1}, 0, {-1, 1}}};
    for (const auto& [expr, c1, c2, l] : cases) {
      const FourManifold n = parse_manifold_expression(expr);
      const RankTwoBundle e(n, c1, c2);
      const InvariantSystem s = projectivize(n, e);
      const InvariantSystem st = projectivize(n, twist(e, l));
      IntMatrix a = IntMatrix::identity(s.rank());
      for (std::size_t i = 0; i < l.size(); ++i) a(i + 1, 0) = l[i];
      SearchOptions opts;
      opts.bound = 2;
      opts.threads = threads;
      if (!verify_witness(s, st, a, true) || !find_isomorphism(s, st, opts))
        return std::make_pair(false, "failed over " + expr);
    }
    return std::make_pair(true, std::string("4 instances"));
  }));

  return out;
}

}  // namespace cp1
