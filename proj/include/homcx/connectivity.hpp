#ifndef HOMCX_CONNECTIVITY_HPP
#define HOMCX_CONNECTIVITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcx/graph.hpp"
#include "homcx/homology.hpp"
#include "homcx/loop_contraction.hpp"
#include "homcx/skeleton.hpp"

namespace homcx {

enum class Verdict { Pass, Fail, Incomplete };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Incomplete: return "INCOMPLETE";
  }
  return "?";
}

struct ConnectivityCheck {
  std::string name;
  Verdict status = Verdict::Pass;
  std::string detail;
};

struct ConnectivityOptions {
  std::size_t cell_cap = kDefaultCellCap;
  std::size_t loop_samples = 8;
  std::size_t loop_steps = 12;
  std::uint64_t seed = 1;
  int threads = 1;
  bool probe_first_open_degree = true;
};

struct ConnectivityReport {
  int vgap = 0;
  int enumerated_dim = -1;
  std::vector<std::size_t> f_vector;
  std::vector<ConnectivityCheck> checks;
  Verdict verdict = Verdict::Pass;
  std::optional<HomologySummary> homology;
  // H_vgap, where vanishing is no longer predicted; informational only.
  std::optional<std::size_t> betti_at_vgap;
  std::vector<BigInt> torsion_at_vgap;
  std::string note;
};

/**
 * Tests Hom(G, K_n) against the predicted (vgap - 1)-connectivity: nonempty,
 * H_0 = Z, H_t = 0 for 1 <= t <= vgap - 1, and sampled loops contract.
 * The outcome is evidence consistent with the prediction; homology plus
 * finitely many contracted loops does not prove connectivity.
 */
inline ConnectivityReport connectivity_report(const Graph& g, int n, const ConnectivityOptions& opt = {}) {
  ConnectivityReport rep;
  rep.vgap = vgap(g, n);
  rep.note =
      "vanishing homology and contracted sample loops are evidence consistent with the connectivity bound, "
      "not a proof of it";
  auto record = [&](std::string name, Verdict v, std::string detail) {
    rep.checks.push_back({std::move(name), v, std::move(detail)});
    if (v == Verdict::Fail)
      rep.verdict = Verdict::Fail;
    else if (v == Verdict::Incomplete && rep.verdict == Verdict::Pass)
      rep.verdict = Verdict::Incomplete;
  };
  if (rep.vgap < 0) {
    rep.note = "vgap < 0: no connectivity is predicted, nothing to check";
    return rep;
  }

  // deepest skeleton within the cap, down to the vertices
  std::optional<ComplexSkeleton> sk;
  for (int d = rep.vgap; d >= 0 && !sk; --d) {
    try {
      sk = enumerate_skeleton(g, n, d, opt.cell_cap, opt.threads);
    } catch (const ResourceLimitError&) {
    }
  }
  if (!sk) {
    record("nonempty", Verdict::Incomplete, "vertex set exceeds the cell cap");
    return rep;
  }
  rep.enumerated_dim = sk->max_dim();
  rep.f_vector = sk->f_vector();
  record("nonempty", sk->count(0) > 0 ? Verdict::Pass : Verdict::Fail,
         std::to_string(sk->count(0)) + " proper colorings");
  if (rep.verdict == Verdict::Fail || rep.vgap == 0) return rep;

  const int t_max = rep.vgap - 1;
  const int reachable = sk->max_dim() - 1;
  if (reachable >= 0) {
    HomologySummary h = homology_summary(*sk, reachable, opt.threads);
    record("H_0 = Z", h.betti[0] == 1 && h.torsion[0].empty() ? Verdict::Pass : Verdict::Fail,
           "betti_0 = " + std::to_string(h.betti[0]));
    for (int t = 1; t <= reachable; ++t)
      record("H_" + std::to_string(t) + " = 0", h.vanishes(t) ? Verdict::Pass : Verdict::Fail,
             "betti_" + std::to_string(t) + " = " + std::to_string(h.betti[t]) + ", " +
                 std::to_string(h.torsion[t].size()) + " torsion factors");
    rep.homology = std::move(h);
  }
  for (int t = std::max(reachable + 1, 0); t <= t_max; ++t)
    record(t == 0 ? "H_0 = Z" : "H_" + std::to_string(t) + " = 0", Verdict::Incomplete,
           "needs the " + std::to_string(t + 1) + "-skeleton, which exceeds the cell cap");

  if (rep.vgap >= 2) {
    std::size_t contracted = 0;
    std::string trouble;
    try {
      for (std::size_t s = 0; s < opt.loop_samples; ++s) {
        EdgePath loop = random_loop(g, n, opt.loop_steps, opt.seed + s);
        LoopContraction lc = contract_loop(g, n, loop);
        MoveCheck mc = verify_moves(g, n, loop, lc.moves, true);
        if (!mc.ok) {
          trouble = "sample " + std::to_string(s) + ": " + mc.diagnostic;
          break;
        }
        ++contracted;
      }
    } catch (const std::exception& e) {
      trouble = e.what();
    }
    record("sampled loops contract", trouble.empty() ? Verdict::Pass : Verdict::Fail,
           std::to_string(contracted) + " of " + std::to_string(opt.loop_samples) + " loops contracted" +
               (trouble.empty() ? "" : "; " + trouble));
  }

  if (opt.probe_first_open_degree && reachable == t_max) {
    try {
      ComplexSkeleton deeper = enumerate_skeleton(g, n, rep.vgap + 1, opt.cell_cap, opt.threads);
      HomologySummary h = homology_summary(deeper, rep.vgap, opt.threads);
      rep.betti_at_vgap = h.betti[rep.vgap];
      rep.torsion_at_vgap = h.torsion[rep.vgap];
    } catch (const ResourceLimitError&) {
    }
  }
  return rep;
}

}  // namespace homcx

#endif  // HOMCX_CONNECTIVITY_HPP
