#include "hopfoid/suite.hpp"

namespace hopfoid {

namespace {

VerifyOptions options(const RunConfig& c) { return {c.strategy, c.direct_dim_bound, c.plan}; }

Strategy resolve_or_throw(const Bialgebroid& b, const VerifyOptions& o) {
  try {
    return resolve_strategy(b, o);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

DoubleTower heisenberg_tower(const RunConfig& c) {
  auto [astar, pairing] = dual_hopf(group_algebra(static_cast<std::size_t>(c.d)));
  (void)astar;
  return build_tower(pairing, c.plan);
}

const CycloField* field_of(const RunConfig& c) { return c.example == "slq2" ? &cyclo_field(c.d) : nullptr; }

Json bialgebroid_json(const Bialgebroid& b, const CycloField* f) {
  return Json{{"total", to_json(b.H(), f)},        {"base", to_json(b.A(), f)},     {"alpha", to_json(b.anchor.alpha, f)},
              {"beta", to_json(b.anchor.beta, f)}, {"coproduct", to_json(b.delta, f)}, {"counit", to_json(b.counit, f)}};
}

Json tower_json(const DoubleTower& t, const CycloField* f) {
  const DualPairing& P = *t.pairing;
  LinearMap pairing = LinearMap::from_function(P.dim(), P.dim(), [&](Index a) {
    VecBuilder col;
    for (Index x = 0; x < P.dim(); ++x) col.add(x, P.pair_basis(x, a));
    return col.build();
  });
  Json out{{"A", to_json(P.A(), f)},
           {"Astar", to_json(P.Astar(), f)},
           {"pairing", to_json(pairing, f)},
           {"double", to_json(t.dbl->hopf(), f)},
           {"R", to_json(t.dbl->R(), f)},
           {"heisenberg", to_json(t.heisenberg->alg(), f)}};
  Json alg = bialgebroid_json(t.algebroid.hopf.bi, f);
  alg["antipode"] = to_json(t.algebroid.hopf.tau, f);
  alg["d0"] = to_json(t.algebroid.d0.d0, f);
  out["algebroid"] = std::move(alg);
  return out;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.example == "slq2") {
    if (c.d <= 1 || c.d % 2 == 0) throw ConfigError("d must be odd and greater than 1 (got " + std::to_string(c.d) + ")");
    if (std::gcd(c.q_exponent, c.d) != 1) throw ConfigError("q exponent must be coprime to d");
  } else if (c.example == "heisenberg") {
    if (c.d < 1) throw ConfigError("d must be positive");
  } else if (c.example == "coarse" || c.example == "end") {
    if (c.base_dim < 1 || c.base_dim > 4) throw ConfigError("base dimension must be 1, 2, 3 or 4");
  } else {
    throw ConfigError("unknown example: " + c.example);
  }
}

VerificationReport verify_tower(const DoubleTower& t, const VerifyOptions& opts) {
  const par::SweepPlan& plan = opts.plan;
  const DualPairing& P = *t.pairing;
  const DrinfeldDouble& D = *t.dbl;
  VerificationReport r;
  r.append(verify_hopf(P.A(), plan, "A."));
  r.append(verify_hopf(P.Astar(), plan, "Astar."));
  r.append(verify_pairing(P, plan, "pairing."));
  r.append(verify_double(D, plan, "double."));
  r.append(verify_module_algebra(t.action, plan, "action."));
  r.add(run_check("action.r_condition", "R acts on the module algebra through the opposite product",
                  "x_t(u) a_t(v) = v u", [&] { return r_condition_witness(t.action, D.R()); }));
  r.append(verify_d0(D, t.algebroid.d0, &t.action, plan, "d0."));
  r.append(verify_smash(*t.heisenberg, plan, "heisenberg."));
  r.append(verify_t1_isomorphism(*t.heisenberg, P, plan, "heisenberg."));
  r.append(verify_double_to_heisenberg(D, *t.heisenberg, t.action, plan, "double_to_heisenberg."));
  r.add(run_check("algebroid.total_is_heisenberg", "total algebra of the algebroid is the Heisenberg double",
                  "V # A with A acting through D(A) = A* # A under ->", [&]() -> std::optional<Witness> {
                    if (t.algebroid.smash->alg() == t.heisenberg->alg()) return std::nullopt;
                    return Witness{{}, {}, "structure constants differ"};
                  }));
  const Bialgebroid& b = t.algebroid.hopf.bi;
  r.append(verify_smash_algebroid(t.algebroid, opts, "algebroid."));
  r.append(verify_associated_action(b, plan, "algebroid."));
  r.append(canonical_morphism(b, true, plan, "algebroid.canonical."));
  return r;
}

SuiteRun run_suite(const RunConfig& c) {
  validate(c);
  const VerifyOptions opts = options(c);
  SuiteRun out;
  if (c.example == "slq2" || c.example == "heisenberg") {
    std::optional<Slq2Tower> slq2;
    DoubleTower tower;
    if (c.example == "slq2") {
      slq2.emplace(build_slq2(c.d, c.q_exponent, c.plan));
      tower = slq2->tower;
    } else {
      tower = heisenberg_tower(c);
    }
    const Bialgebroid& b = tower.algebroid.hopf.bi;
    out.strategy = resolve_or_throw(b, opts);
    out.total_dim = b.H().dim();
    if (slq2) out.report.append(verify_slq2_pairing(*slq2));
    out.report.append(verify_tower(tower, opts));
    if (slq2)
      for (auto& e : verify_printed_formulas(*slq2)) out.report.add_ledger(std::move(e));
    return out;
  }

  const auto base = base_algebra(c.base_dim);
  if (c.example == "coarse") {
    const HopfAlgebroid h = coarse_hopf_algebroid(base);
    out.strategy = resolve_or_throw(h.bi, opts);
    out.total_dim = h.bi.H().dim();
    out.report.append(verify_hopf_algebroid(h, opts, "coarse."));
    out.report.append(verify_associated_action(h.bi, c.plan, "coarse."));
    // A (x) A^op -> End(A) is bijective exactly for central simple A; here k and M_2
    out.report.append(canonical_morphism(h.bi, c.base_dim == 1 || c.base_dim == 4, c.plan, "coarse.canonical."));
  } else {
    const Bialgebroid b = end_bialgebroid(base);
    out.strategy = resolve_or_throw(b, opts);
    out.total_dim = b.H().dim();
    out.report.append(verify_bialgebroid(b, opts, "end."));
    out.report.append(verify_end_identification(b, "end."));
    out.report.append(verify_associated_action(b, c.plan, "end."));
    out.report.append(canonical_morphism(b, true, c.plan, "end.canonical."));
  }
  return out;
}

Json dump_example(const RunConfig& c) {
  validate(c);
  const CycloField* f = field_of(c);
  Json out{{"example", c.example}};
  if (c.example == "slq2") {
    const Slq2Tower t = build_slq2(c.d, c.q_exponent, c.plan);
    out["tower"] = tower_json(t.tower, f);
  } else if (c.example == "heisenberg") {
    out["tower"] = tower_json(heisenberg_tower(c), f);
  } else if (c.example == "coarse") {
    const HopfAlgebroid h = coarse_hopf_algebroid(base_algebra(c.base_dim));
    out["algebroid"] = bialgebroid_json(h.bi, f);
    out["algebroid"]["antipode"] = to_json(h.tau, f);
  } else {
    out["algebroid"] = bialgebroid_json(end_bialgebroid(base_algebra(c.base_dim)), f);
  }
  return out;
}

Json config_json(const RunConfig& c, const SuiteRun* run) {
  Json out{{"example", c.example}};
  if (c.example == "slq2" || c.example == "heisenberg") out["d"] = c.d;
  if (c.example == "slq2") out["q_exponent"] = c.q_exponent;
  if (c.example == "coarse" || c.example == "end") out["base_dim"] = c.base_dim;
  out["strategy"] = to_string(c.strategy);
  if (run) out["resolved_strategy"] = to_string(run->strategy);
  out["direct_dim_bound"] = c.direct_dim_bound;
  if (!c.plan.exhaustive_for(std::numeric_limits<std::size_t>::max())) {
    out["sample_items"] = c.plan.max_items;
    out["sample_seed"] = c.plan.seed;
  }
  if (run) out["total_dim"] = run->total_dim;
  return out;
}

}  // namespace hopfoid
