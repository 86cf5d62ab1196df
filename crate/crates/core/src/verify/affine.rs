use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Checker, Outcome, Suite, SuiteConfig};
use crate::cartan::{CorootVec, RootSystem, WeightVec};
use crate::coeffring::{orbit_sum, GroupAlgebraElt, LinComb};
use crate::peterson::{HomologyClass, Peterson};
use crate::quantum::QHClass;
use crate::routes::gw_routes;
use crate::weyl::AffineElt;

/// Two independent superregular `(λ, μ)` pairs.
fn borel_choices(rs: &RootSystem) -> [(CorootVec, CorootVec); 2] {
    let tv = rs.theta_vee();
    let d1 = rs.deep_antidominant(1);
    [(d1, d1), (d1 - tv, rs.deep_antidominant(2) - tv - rs.simple_coroot(1))]
}

/// Nonnegative `λ` with `⟨λ, 2ρ⟩ ≤ qdeg`.
pub(crate) fn small_q(rs: &RootSystem, qdeg: i64) -> Vec<CorootVec> {
    let mut out = vec![CorootVec::ZERO];
    for i in 1..=rs.rank() {
        let mut next = Vec::new();
        for lam in &out {
            let mut cur = *lam;
            while rs.pair(&cur, &rs.rho()) * 2 <= qdeg {
                next.push(cur);
                cur += rs.simple_coroot(i);
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn shift(c: &QHClass, by: CorootVec) -> QHClass {
    c.iter().map(|((w, q), v)| ((*w, *q + by), v.clone())).collect()
}

/// `ψ(ξ_{r_i t_λ} ξ_{w t_μ})` against `q_{λ+μ} σ^{r_i} * σ^w`, for every `i`, `w`.
fn borel_sweep(ck: &mut Checker, pet: &Peterson, mut on_constant: impl FnMut(&mut Checker, &str, &crate::coeffring::Scalar)) {
    let rs = pet.rs;
    for (lam, mu) in borel_choices(rs) {
        for i in 1..=rs.rank() {
            let x = AffineElt { w: rs.simple_reflection(i), t: lam };
            let Some(j) = ck.ok(|| format!("{} j({})", rs.label(), rs.format_aff_word(&x)), pet.j_class(&x)) else {
                continue;
            };
            if let Some(b) = ck.ok(|| format!("{} b-element", rs.label()), rs.b_element(&lam, &[rs.fundamental_weight(i)])) {
                ck.check(b == j, || format!("{}: j(ξ_(r{i} t_λ)) differs from b(λ; ω{i})", rs.label()));
            }
            for (_, c) in j.iter() {
                on_constant(ck, "j-coefficient", c);
            }
            for w in rs.weyl_elements() {
                let y = AffineElt { w: *w, t: mu };
                ck.check(rs.is_grassmannian(&y), || format!("{}: w t_μ not Grassmannian", rs.label()));
                let prod = rs.act_on_homology(&j, &LinComb::basis(y));
                for (_, c) in prod.iter() {
                    on_constant(ck, "structure constant", c);
                }
                let Some(h) = ck.ok(|| "homology class".into(), HomologyClass::new(rs, prod, CorootVec::ZERO)) else {
                    continue;
                };
                let lhs = pet.psi_map(&h);
                let rhs = shift(&pet.qr.chevalley(i, &pet.qr.schubert(w)), lam + mu);
                ck.check(lhs == rhs, || format!("{}: ψ(ξ_(r{i} t_λ) ξ_(w t_μ)) ≠ Chevalley for w = {}", rs.label(), rs.format_word(w)));
            }
        }
    }
}

pub struct PetersonBorel;

impl Suite for PetersonBorel {
    fn name(&self) -> &'static str {
        "peterson-borel"
    }
    fn criterion(&self) -> usize {
        2
    }
    fn summary(&self) -> &'static str {
        "ψ(ξ_{r_i t_λ} ξ_{w t_μ}) equals q_{λ+μ} times the quantum Chevalley product"
    }
    fn run(&self, cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        for t in cfg.types_or(&["A1", "A2", "B2", "A3"]) {
            let Some(rs) = ck.ok(|| t.clone(), RootSystem::build(&t)) else { continue };
            let Some(pet) = ck.ok(|| t.clone(), Peterson::new(&rs)) else { continue };
            borel_sweep(&mut ck, &pet, |_, _, _| {});
        }
        ck.finish(self)
    }
}

/// `j_x^y` read off both sides of the dictionary, in both directions.
fn compare_sweep(ck: &mut Checker, pet: &Peterson, qdeg: i64, mut on_constant: impl FnMut(&mut Checker, &crate::coeffring::Scalar)) {
    let rs = pet.rs;
    let routes = gw_routes();
    let lambdas = small_q(rs, qdeg);
    for u in rs.weyl_elements() {
        for v in rs.weyl_elements() {
            for w in rs.weyl_elements() {
                for lam in &lambdas {
                    let vals: Vec<_> = routes
                        .iter()
                        .filter_map(|r| ck.ok(|| format!("{} route {}", rs.label(), r.name()), r.gw(pet, u, v, w, lam)))
                        .collect();
                    if vals.len() != routes.len() {
                        continue;
                    }
                    on_constant(ck, &vals[0]);
                    ck.check(vals.iter().all(|c| *c == vals[0]), || {
                        format!(
                            "{}: c_(u,v)^(w,λ) differs between routes for u={} v={} w={} λ={:?}",
                            rs.label(),
                            rs.format_word(u),
                            rs.format_word(v),
                            rs.format_word(w),
                            lam.coords(rs.rank())
                        )
                    });
                }
            }
        }
    }
    for u in rs.weyl_elements() {
        let lam = pet.deep_enough(|l| pet.j_ready(&AffineElt { w: *u, t: *l }).is_ok());
        let x = AffineElt { w: *u, t: lam };
        let Some(j) = ck.ok(|| format!("j({})", rs.format_aff_word(&x)), pet.j_class(&x)) else { continue };
        for (y, c) in j.iter() {
            on_constant(ck, c);
            if rs.budget(&rs.decompose_chamber(&y.t).1).is_none() {
                continue;
            }
            if let Some(g) = ck.ok(|| "forward dictionary".into(), pet.j_from_gw(&x, y)) {
                ck.check(&g == c, || format!("{}: j_x^y ≠ GW value for x={} y={}", rs.label(), rs.format_aff_word(&x), rs.format_aff_word(y)));
            }
        }
    }
}

pub struct Compare;

impl Suite for Compare {
    fn name(&self) -> &'static str {
        "compare"
    }
    fn criterion(&self) -> usize {
        3
    }
    fn summary(&self) -> &'static str {
        "every c_{u,v}^{w,λ} with ⟨λ,2ρ⟩ ≤ qdeg equals the matching j-coefficient, both directions"
    }
    fn run(&self, cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        for t in cfg.types_or(&["A1", "A2", "B2"]) {
            let Some(rs) = ck.ok(|| t.clone(), RootSystem::build(&t)) else { continue };
            let Some(pet) = ck.ok(|| t.clone(), Peterson::new(&rs)) else { continue };
            compare_sweep(&mut ck, &pet, cfg.qdeg.unwrap_or(4), |_, _| {});
        }
        ck.finish(self)
    }
}

fn random_weight(rng: &mut ChaCha8Rng, r: usize) -> WeightVec {
    loop {
        let c: Vec<i32> = (0..r).map(|_| rng.gen_range(-1..=2)).collect();
        if c.iter().any(|&x| x != 0) {
            return WeightVec::from_slice(&c);
        }
    }
}

pub struct Centrality;

impl Suite for Centrality {
    fn name(&self) -> &'static str {
        "centrality"
    }
    fn criterion(&self) -> usize {
        4
    }
    fn summary(&self) -> &'static str {
        "random b(λ; μ_1..μ_k) are central; b(λ; ω_i) reduces to A_{r_i t_λ} mod J"
    }
    fn run(&self, cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for t in cfg.types_or(&["A2", "B2"]) {
            let Some(rs) = ck.ok(|| t.clone(), RootSystem::build(&t)) else { continue };
            let r = rs.rank();
            for _ in 0..100 {
                let k = rng.gen_range(0..=3usize);
                let seq: Vec<WeightVec> = (0..k).map(|_| random_weight(&mut rng, r)).collect();
                let lam = rs.deep_antidominant(k as i64 + 1 + rng.gen_range(0..=1));
                let ctx = || format!("{} b(λ; {:?})", rs.label(), seq);
                let Some(chain) = ck.ok(ctx, rs.b_chain(&lam, &seq)) else { continue };
                ck.check(rs.is_central(&rs.upsilon(&chain)), ctx);
                if let Some(tw) = ck.ok(ctx, rs.twisted_central(&chain)) {
                    ck.check(tw, || format!("{}: twisted operators disagree on b(λ; {:?})", rs.label(), seq));
                }
            }
            for i in 1..=r {
                let lam = rs.deep_antidominant(1);
                if let Some(b) = ck.ok(|| format!("{} b(λ; ω{i})", rs.label()), rs.b_element(&lam, &[rs.fundamental_weight(i)])) {
                    let x = AffineElt { w: rs.simple_reflection(i), t: lam };
                    ck.check(rs.mod_j(&b) == LinComb::basis(x), || format!("{}: b(λ; ω{i}) mod J", rs.label()));
                }
            }
        }
        ck.finish(self)
    }
}

pub struct Operators;

impl Operators {
    /// `Θ_w^λ(σ * [μ]) = B^μ(Θ_w^λ(σ))` for `σ = q_κ σ^v`.
    fn intertwining(ck: &mut Checker, pet: &Peterson, w: &crate::weyl::WeylElt, v: &crate::weyl::WeylElt, kappa: CorootVec, i: usize) {
        let rs = pet.rs;
        let lam = rs.deep_antidominant(3);
        let sigma = QHClass::basis((*v, kappa));
        let mu = rs.fundamental_weight(i);
        let ctx = || format!("{} Θ-intertwining w={} v={} i={i}", rs.label(), rs.format_word(w), rs.format_word(v));
        let Some(lhs) = ck.ok(ctx, rs.theta_map(w, &lam, &pet.qr.chevalley_weight(&mu, &sigma))) else { return };
        let Some(th) = ck.ok(ctx, rs.theta_map(w, &lam, &sigma)) else { return };
        let Some(rhs) = ck.ok(ctx, rs.b_op(&mu, &th)) else { return };
        ck.check(lhs == rhs, ctx);
    }

    /// `B^μ B^ν = B^ν B^μ` on a singleton.
    fn commutation(ck: &mut Checker, rs: &RootSystem, x: AffineElt, mu: &WeightVec, nu: &WeightVec) {
        let f = GroupAlgebraElt::basis(x);
        let ctx = || format!("{} B-commutation at {}", rs.label(), rs.format_aff_word(&x));
        let ab = rs.b_op(nu, &f).and_then(|g| rs.b_op(mu, &g));
        let ba = rs.b_op(mu, &f).and_then(|g| rs.b_op(nu, &g));
        if let (Some(ab), Some(ba)) = (ck.ok(ctx, ab), ck.ok(ctx, ba)) {
            ck.check(ab == ba, ctx);
        }
    }

    /// `C^μ B^{μ_k}⋯B^{μ_1} Σ t_{wλ} = B^{μ_k}⋯B^{μ_1} B^μ Σ t_{wλ}`.
    fn exchange(ck: &mut Checker, rs: &RootSystem, mu: &WeightVec, seq: &[WeightVec]) {
        let lam = rs.deep_antidominant(seq.len() as i64 + 1);
        let ctx = || format!("{} C/B exchange μ={:?} seq={:?}", rs.label(), mu, seq);
        let lhs = rs.b_chain(&lam, seq).and_then(|f| rs.c_op(mu, &f));
        let rhs = rs.b_op(mu, &orbit_sum(rs, &lam)).and_then(|mut f| {
            for m in seq {
                f = rs.b_op(m, &f)?;
            }
            Ok(f)
        });
        if let (Some(l), Some(r)) = (ck.ok(ctx, lhs), ck.ok(ctx, rhs)) {
            ck.check(l == r, ctx);
        }
    }
}

impl Suite for Operators {
    fn name(&self) -> &'static str {
        "operators"
    }
    fn criterion(&self) -> usize {
        5
    }
    fn summary(&self) -> &'static str {
        "Θ-intertwining, commuting B operators and the C/B exchange identity"
    }
    fn run(&self, cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for t in cfg.types_or(&["A1", "A2", "B2", "A3"]) {
            let Some(rs) = ck.ok(|| t.clone(), RootSystem::build(&t)) else { continue };
            let Some(pet) = ck.ok(|| t.clone(), Peterson::new(&rs)) else { continue };
            let r = rs.rank();
            let els = rs.weyl_elements();
            let fundamentals: Vec<WeightVec> = (1..=r).map(|i| rs.fundamental_weight(i)).collect();
            let kappas: Vec<CorootVec> = std::iter::once(CorootVec::ZERO).chain((1..=r).map(|i| rs.simple_coroot(i))).collect();
            let lam = rs.deep_antidominant(2);
            if r <= 2 && t.starts_with('A') {
                for w in els {
                    for v in els {
                        for kappa in &kappas {
                            for i in 1..=r {
                                Self::intertwining(&mut ck, &pet, w, v, *kappa, i);
                            }
                        }
                        let x = AffineElt { w: *w, t: rs.act_coroot(v, &lam) };
                        for mu in &fundamentals {
                            for nu in &fundamentals {
                                Self::commutation(&mut ck, &rs, x, mu, nu);
                            }
                        }
                    }
                }
                let mut seqs: Vec<Vec<WeightVec>> = vec![Vec::new()];
                for a in &fundamentals {
                    seqs.push(vec![*a]);
                    for b in &fundamentals {
                        seqs.push(vec![*a, *b]);
                    }
                }
                for mu in &fundamentals {
                    for s in &seqs {
                        Self::exchange(&mut ck, &rs, mu, s);
                    }
                }
            } else {
                let n = if r >= 3 { 30 } else { 100 };
                for _ in 0..n {
                    let w = els[rng.gen_range(0..els.len())];
                    let v = els[rng.gen_range(0..els.len())];
                    let kappa = kappas[rng.gen_range(0..kappas.len())];
                    Self::intertwining(&mut ck, &pet, &w, &v, kappa, rng.gen_range(1..=r));
                    let x = AffineElt { w, t: rs.act_coroot(&v, &lam) };
                    let mu = random_weight(&mut rng, r);
                    let nu = random_weight(&mut rng, r);
                    Self::commutation(&mut ck, &rs, x, &mu, &nu);
                }
                for _ in 0..n / 5 {
                    let k = rng.gen_range(0..=2);
                    let seq: Vec<WeightVec> = (0..k).map(|_| fundamentals[rng.gen_range(0..r)]).collect();
                    let mu = random_weight(&mut rng, r);
                    Self::exchange(&mut ck, &rs, &mu, &seq);
                }
            }
        }
        ck.finish(self)
    }
}

pub struct Positivity;

impl Suite for Positivity {
    fn name(&self) -> &'static str {
        "positivity"
    }
    fn criterion(&self) -> usize {
        6
    }
    fn summary(&self) -> &'static str {
        "j-coefficients and homology structure constants have nonnegative coefficients in the simple roots"
    }
    fn run(&self, cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        for t in cfg.types_or(&["A1", "A2", "B2", "A3"]) {
            let Some(rs) = ck.ok(|| t.clone(), RootSystem::build(&t)) else { continue };
            let Some(pet) = ck.ok(|| t.clone(), Peterson::new(&rs)) else { continue };
            let label = rs.label();
            borel_sweep(&mut Checker::new(), &pet, |_, what, c| {
                ck.check(c.is_nonneg(), || format!("{label}: negative {what} {}", c.to_text()));
            });
            if rs.rank() <= 2 {
                compare_sweep(&mut Checker::new(), &pet, cfg.qdeg.unwrap_or(4), |_, c| {
                    ck.check(c.is_nonneg(), || format!("{label}: negative j-coefficient {}", c.to_text()));
                });
            }
        }
        ck.finish(self)
    }
}
