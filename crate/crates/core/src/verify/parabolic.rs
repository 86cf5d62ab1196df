use super::{Checker, Outcome, Suite, SuiteConfig};
use crate::cartan::{CorootVec, RootSystem};
use crate::coeffring::LinComb;
use crate::parabolic::{c_generator, KBoundedPartition, ParabolicData};
use crate::peterson::{HomologyClass, Peterson};
use crate::quantum::{specialize, QHClass, Specialization};
use crate::weyl::{AffineElt, WeylElt};

pub struct Examples;

impl Suite for Examples {
    fn name(&self) -> &'static str {
        "examples"
    }
    fn criterion(&self) -> usize {
        1
    }
    fn summary(&self) -> &'static str {
        "worked examples: four projections π_P(t_λ), the SL(7) cominuscule example and a k-bounded filling"
    }
    fn run(&self, _cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        let cases: [(&str, &[usize], usize, &[usize]); 4] =
            [("A3", &[2, 3], 1, &[2, 3]), ("A3", &[1, 3], 2, &[1, 3]), ("C3", &[2, 3], 1, &[]), ("B3", &[2, 3], 1, &[2, 3, 2])];
        for (t, ip, k, word) in cases {
            let rs = RootSystem::build(t).expect("valid type");
            let Some(p) = ck.ok(|| t.into(), ParabolicData::new(&rs, ip)) else { continue };
            let want = AffineElt { w: rs.weyl_from_word(word).expect("word"), t: -rs.theta_vee() };
            let ctx = || format!("{t} I_P={ip:?}: π_P(t_(-α{k}^∨))");
            if let Some(got) = ck.ok(ctx, p.pi_p(&rs.aff_translation(-rs.simple_coroot(k)))) {
                ck.check(got == want, ctx);
            }
        }

        let a6 = RootSystem::build("A6").expect("valid type");
        if let Some(p) = ck.ok(|| "A6".into(), ParabolicData::maximal(&a6, 4)) {
            let y = a6.weyl_from_word(&[4, 5, 2, 3, 4]).expect("word");
            let want = a6.aff_from_word(&[0, 6, 2, 1, 0]).expect("word");
            if let Some(th) = ck.ok(|| "ϑ(y)".into(), p.theta_cominuscule(&y)) {
                ck.check(th == want, || format!("ϑ(y) = {}", a6.format_aff_word(&th)));
                let proj = AffineElt { w: a6.weyl_from_word(&[2, 3, 1, 2, 6, 5]).expect("word"), t: th.t };
                if let Some(got) = ck.ok(|| "π_P(t_λ)".into(), p.pi_p_translation(&th.t)) {
                    ck.check(got == proj, || format!("π_P(t_λ) = {}", a6.format_aff_word(&got)));
                }
                if let Some(got) = ck.ok(|| "π_P(t_λ) by inversions".into(), p.pi_p(&a6.aff_translation(th.t))) {
                    ck.check(got == proj, || "inversion stripping of t_λ".into());
                }
                let line = a6.one_line(&p.pi_finite(&th.w)).unwrap_or_default();
                ck.check(line == [2, 4, 6, 7, 1, 3, 5], || format!("π_P(w) = {line:?}"));
            }
            let mu = KBoundedPartition::new(&[2, 2, 1], 6).expect("partition");
            if let Some(w) = ck.ok(|| "W^P filling".into(), a6.partition_to_wp(4, &mu)) {
                ck.check(w == y, || "filling of (2,2,1)".into());
            }
            let lam = KBoundedPartition::new(&[3, 2], 6).expect("partition");
            if let Some(x) = ck.ok(|| "affine filling".into(), a6.partition_to_affine(&lam)) {
                ck.check(x == want, || format!("w_(3,2) = {}", a6.format_aff_word(&x)));
            }
        }
        ck.finish(self)
    }
}

fn gr24(rs: &RootSystem) -> ParabolicData<'_> {
    ParabolicData::new(rs, &[1, 3]).expect("valid parabolic")
}

pub struct Parabolic;

impl Parabolic {
    /// `c^{z,λ_P,P}_{x,y} = c^{z w_P w_{P'}, λ_B}_{x,y}` at `α = 0`.
    fn transport(ck: &mut Checker, pet: &Peterson, p: &ParabolicData) {
        let rs = p.rs;
        let reps = p.coset_reps();
        for x in &reps {
            for y in &reps {
                let Some(prod) = ck.ok(|| "quotient product".into(), p.quotient_product(pet, x, y)) else { continue };
                let prod = specialize(&prod, Specialization::AlphaToZero);
                for d in 0..=2 {
                    let lp = rs.simple_coroot(2).scale(d);
                    let Some(lift) = ck.ok(|| format!("lift of q2^{d}"), p.pw_lift(&lp)) else { continue };
                    for z in &reps {
                        let a = prod.get(&(*z, lp));
                        let b = pet.qr.gw_coefficient(x, y, &z.mul(&lift.v), &lift.lambda_b).eval_zero();
                        ck.check(a == b, || {
                            format!("transport x={} y={} z={} d={d}: {} vs {}", rs.format_word(x), rs.format_word(y), rs.format_word(z), a.to_text(), b.to_text())
                        });
                    }
                }
            }
        }
    }
}

impl Suite for Parabolic {
    fn name(&self) -> &'static str {
        "parabolic"
    }
    fn criterion(&self) -> usize {
        8
    }
    fn summary(&self) -> &'static str {
        "quotient products by σ_P^{r_i} match the parabolic Chevalley formula; Peterson–Woodward transport on Gr(2,4)"
    }
    fn run(&self, _cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        let rs = RootSystem::build("A3").expect("valid type");
        let Some(pet) = ck.ok(|| "A3".into(), Peterson::new(&rs)) else { return ck.finish(self) };
        for ip in [vec![2], vec![1, 3], vec![2, 3]] {
            let Some(p) = ck.ok(|| format!("{ip:?}"), ParabolicData::new(&rs, &ip)) else { continue };
            for i in p.complement() {
                let ri = rs.simple_reflection(i);
                for w in p.coset_reps() {
                    let ctx = || format!("I_P={ip:?} i={i} w={}", rs.format_word(&w));
                    let a = ck.ok(ctx, p.quotient_product(&pet, &ri, &w));
                    let b = ck.ok(ctx, p.parabolic_chevalley(i, &QHClass::basis((w, CorootVec::ZERO))));
                    if let (Some(a), Some(b)) = (a, b) {
                        ck.check(a == b, ctx);
                    }
                }
            }
        }
        Self::transport(&mut ck, &pet, &gr24(&rs));
        ck.finish(self)
    }
}

pub struct HighestRoot;

impl Suite for HighestRoot {
    fn name(&self) -> &'static str {
        "highest-root"
    }
    fn criterion(&self) -> usize {
        9
    }
    fn summary(&self) -> &'static str {
        "multiplication by σ_P^{π_P(r_θ)} on Gr(2,4) and Gr(2,5): closed formula, affine Pieri and quotient product agree"
    }
    fn run(&self, _cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        for t in ["A3", "A4"] {
            let rs = RootSystem::build(t).expect("valid type");
            let Some(pet) = ck.ok(|| t.into(), Peterson::new(&rs)) else { continue };
            let Some(p) = ck.ok(|| t.into(), ParabolicData::maximal(&rs, 2)) else { continue };
            let rt = p.pi_finite(&rs.reflection(&rs.theta()).expect("root"));
            for w in p.coset_reps() {
                let ctx = || format!("{t} w={}", rs.format_word(&w));
                let closed = ck.ok(ctx, p.highest_root_product(&w));
                let pieri = ck.ok(ctx, p.highest_root_product_affine(&w));
                let quot = ck.ok(ctx, p.quotient_product(&pet, &rt, &w)).map(|c| specialize(&c, Specialization::AlphaToZero));
                if let (Some(a), Some(b), Some(c)) = (closed, pieri, quot) {
                    ck.check(a == b, || format!("{}: closed formula vs affine Pieri", ctx()));
                    ck.check(a == c, || format!("{}: closed formula vs quotient product", ctx()));
                }
            }
        }
        ck.finish(self)
    }
}

pub struct LapointeMorse;

impl LapointeMorse {
    fn generators(ck: &mut Checker, n: usize) {
        let rs = RootSystem::build(&format!("A{}", n - 1)).expect("valid type");
        for j in 1..n {
            let Some(p) = ck.ok(|| format!("n={n} j={j}"), ParabolicData::maximal(&rs, j)) else { continue };
            for m in 1..n {
                let ctx = || format!("n={n} j={j} m={m}");
                let Some(h) = ck.ok(ctx, rs.h_generator(m)) else { continue };
                let Some(img) = ck.ok(ctx, p.lm_map(&h)) else { continue };
                if m <= j {
                    let Some(c) = ck.ok(ctx, c_generator(&rs, j, m)) else { continue };
                    if let Some(th) = ck.ok(ctx, p.theta_cominuscule(&c)) {
                        ck.check(th == h, || format!("{}: ϑ(c_[m]) ≠ h_[m]", ctx()));
                    }
                    ck.check(img == Some(c), || format!("{}: h_[m] not sent to c_[m]", ctx()));
                } else {
                    ck.check(img.is_none(), || format!("{}: h_[m] should vanish", ctx()));
                }
            }
            // shapes in the (n−j)×j rectangle go to the transposed Schubert class
            for lam in rectangle(n - j, j) {
                let ctx = || format!("n={n} j={j} λ={:?}", lam.0);
                let x = ck.ok(ctx, rs.partition_to_affine(&lam));
                let w = ck.ok(ctx, rs.partition_to_wp(j, &lam.transpose()));
                if let (Some(x), Some(w)) = (x, w) {
                    if let Some(img) = ck.ok(ctx, p.lm_map(&x)) {
                        ck.check(img == Some(w), || format!("{}: transpose rule", ctx()));
                    }
                    if let Some(img) = ck.ok(ctx, p.lm_map_via_duality(&x)) {
                        ck.check(img == Some(w), || format!("{}: quotient route", ctx()));
                    }
                }
            }
        }
    }

    fn homomorphism(ck: &mut Checker) {
        let rs = RootSystem::build("A3").expect("valid type");
        let Some(pet) = ck.ok(|| "A3".into(), Peterson::new(&rs)) else { return };
        let p = gr24(&rs);
        let at_q1 = |c: &QHClass| specialize(c, Specialization::Both);
        let image = |ck: &mut Checker, xi: &LinComb<AffineElt>| -> QHClass {
            let mut out = QHClass::zero();
            for (x, c) in xi.iter() {
                if let Some(Some(y)) = ck.ok(|| "lm map".into(), p.lm_map(x)) {
                    out.add_term((y, CorootVec::ZERO), c.eval_zero());
                }
            }
            out
        };
        let gr = rs.grassmannian_elements(4);
        for x in &gr {
            for y in &gr {
                if rs.aff_length(x) + rs.aff_length(y) > 4 {
                    continue;
                }
                let ctx = || format!("ξ_{} ξ_{}", rs.format_aff_word(x), rs.format_aff_word(y));
                let h = pet
                    .hom_product(&HomologyClass::basis(&rs, *x).expect("Grassmannian"), &HomologyClass::basis(&rs, *y).expect("Grassmannian"))
                    .and_then(|h| h.clear_denominator(&rs));
                let Some(h) = ck.ok(ctx, h) else { continue };
                let lhs = image(ck, &h);
                let (ix, iy) = (image(ck, &LinComb::basis(*x)), image(ck, &LinComb::basis(*y)));
                if let Some(rhs) = ck.ok(ctx, p.class_product(&pet, &ix, &iy)) {
                    ck.check(lhs == at_q1(&rhs), || format!("{}: not multiplicative", ctx()));
                }
            }
        }
        // strange duality is an involutive ring map
        let reps = p.coset_reps();
        let basis = |w: &WeylElt| QHClass::basis((*w, CorootVec::ZERO));
        for x in &reps {
            let ctx = || format!("duality at {}", rs.format_word(x));
            if let Some(twice) = ck.ok(ctx, p.strange_duality(&basis(x)).and_then(|c| p.strange_duality(&c))) {
                ck.check(twice == basis(x), || format!("{}: not an involution", ctx()));
            }
            for y in &reps {
                let lhs = p.quotient_product(&pet, x, y).and_then(|c| p.strange_duality(&c));
                let rhs = p
                    .strange_duality(&basis(x))
                    .and_then(|a| Ok((a, p.strange_duality(&basis(y))?)))
                    .and_then(|(a, b)| p.class_product(&pet, &a, &b));
                if let (Some(l), Some(r)) = (ck.ok(ctx, lhs), ck.ok(ctx, rhs)) {
                    ck.check(at_q1(&l) == at_q1(&r), || format!("{}: products not preserved", ctx()));
                }
            }
        }
    }
}

/// Partitions with at most `rows` parts, each at most `cols`.
fn rectangle(rows: usize, cols: usize) -> Vec<KBoundedPartition> {
    fn go(rows: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<KBoundedPartition>) {
        out.push(KBoundedPartition(cur.clone()));
        if cur.len() == rows {
            return;
        }
        for k in 1..=cap {
            cur.push(k);
            go(rows, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

impl Suite for LapointeMorse {
    fn name(&self) -> &'static str {
        "lapointe-morse"
    }
    fn criterion(&self) -> usize {
        11
    }
    fn summary(&self) -> &'static str {
        "Ψ agrees with the k-Schur generator dictionary and is multiplicative on Gr(2,4) at q = 1"
    }
    fn run(&self, _cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        for n in 4..=7 {
            Self::generators(&mut ck, n);
        }
        Self::homomorphism(&mut ck);
        ck.finish(self)
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn rectangle_counts() {
        assert_eq!(super::rectangle(2, 2).len(), 6);
        assert_eq!(super::rectangle(3, 4).len(), 35);
    }
}
