//! Affine Bruhat operators, the Peterson subalgebra, `H_T(Gr_G)` and the map
//! `ψ` to quantum cohomology.

use std::collections::HashMap;
use std::sync::Mutex;

use serde_json::{json, Value};

use crate::cartan::{CorootVec, RootSystem, WeightVec};
use crate::coeffring::{orbit_sum, GroupAlgebraElt, LinComb, Scalar};
use crate::error::{Error, Result};
use crate::nilhecke::NilHeckeElt;
use crate::quantum::{QHClass, QuantumRing};
use crate::weyl::{AffineElt, CoverKind, WeylElt};

/// `j(ξ_x) = Σ_y j_x^y A_y`.
pub type JElement = NilHeckeElt;

/// `Σ c_x ξ_x`, divided by `ξ_{t_ν}` when `denominator = ν ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyClass {
    pub terms: LinComb<AffineElt>,
    pub denominator: CorootVec,
}

impl HomologyClass {
    pub fn new(rs: &RootSystem, terms: LinComb<AffineElt>, denominator: CorootVec) -> Result<Self> {
        if let Some(x) = terms.support().into_iter().find(|x| !rs.is_grassmannian(x)) {
            return Err(Error::Precondition(format!("{} is not Grassmannian", rs.format_aff_word(&x))));
        }
        if !rs.is_antidominant(&denominator) {
            return Err(Error::Precondition("denominator must be antidominant".into()));
        }
        Ok(HomologyClass { terms, denominator })
    }

    pub fn basis(rs: &RootSystem, x: AffineElt) -> Result<Self> {
        Self::new(rs, LinComb::basis(x), CorootVec::ZERO)
    }

    /// The genuine class `h` with `h ξ_{t_ν}` equal to the stored terms, using
    /// `ξ_z ξ_{t_ν} = ξ_{z t_ν}`.
    pub fn clear_denominator(&self, rs: &RootSystem) -> Result<LinComb<AffineElt>> {
        let mut out = LinComb::zero();
        for (x, c) in self.terms.iter() {
            let z = AffineElt { w: x.w, t: x.t - self.denominator };
            if !rs.is_grassmannian(&z) {
                return Err(Error::Invariant(format!("{} is not divisible by the denominator", rs.format_aff_word(x))));
            }
            out.add_term(z, c.clone());
        }
        Ok(out)
    }

    pub fn eval_zero(&self) -> Self {
        HomologyClass { terms: self.terms.map_coeffs(|c| c.eval_zero()), denominator: self.denominator }
    }

    pub fn to_json(&self, rs: &RootSystem) -> Value {
        let mut items: Vec<(usize, Vec<usize>, Value)> = self
            .terms
            .iter()
            .map(|(x, c)| {
                let word = rs.aff_reduced_word(x);
                let v = json!({ "element": rs.aff_to_json(x), "word": rs.format_aff_word(x), "coefficient": c.to_text() });
                (word.len(), word, v)
            })
            .collect();
        items.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        json!({
            "product": items.into_iter().map(|t| t.2).collect::<Vec<_>>(),
            "denominator": self.denominator.to_csv(rs.rank()),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Op {
    B,
    C,
    TwistedB,
    TwistedC,
}

impl RootSystem {
    fn bruhat_operator(&self, op: Op, mu: &WeightVec, f: &GroupAlgebraElt) -> Result<GroupAlgebraElt> {
        let mut out = GroupAlgebraElt::zero();
        for (x, c) in f.iter() {
            let (v, lam) = self.decompose_chamber(&x.t);
            match self.budget(&lam) {
                Some(b) if b >= 1 => {}
                _ => return Err(Error::Budget(format!("{} has no budget left", self.format_aff_word(x)))),
            }
            let vinv = v.inverse();
            let diag = match op {
                Op::B => Scalar::weight_diff(self, mu, &x.w.mul(&v)),
                Op::C => Scalar::weight_diff(self, mu, &v),
                Op::TwistedB => &Scalar::weight_diff(self, mu, &x.w) - &Scalar::weight_diff(self, mu, &vinv),
                Op::TwistedC => -Scalar::weight_diff(self, mu, &vinv),
            };
            out.add_term(*x, c * &diag);
            let want = if matches!(op, Op::B | Op::TwistedB) { CoverKind::Near } else { CoverKind::Far };
            for cov in self.cocovers_superregular(x)? {
                if cov.kind != want {
                    continue;
                }
                let vee = self.positive_coroots()[cov.alpha.expect("classified")];
                let k = match op {
                    Op::B | Op::C => self.pair(&vee, mu),
                    Op::TwistedB => self.pair(&self.act_coroot(&v, &vee), mu),
                    Op::TwistedC => -self.pair(&self.act_coroot(&v, &vee), mu),
                };
                if k != 0 {
                    out.add_term(cov.target, c.scale_int(&k.into()));
                }
            }
        }
        Ok(out)
    }

    /// Near operator `B^μ`.
    pub fn b_op(&self, mu: &WeightVec, f: &GroupAlgebraElt) -> Result<GroupAlgebraElt> {
        self.bruhat_operator(Op::B, mu, f)
    }

    /// Far operator `C^μ`.
    pub fn c_op(&self, mu: &WeightVec, f: &GroupAlgebraElt) -> Result<GroupAlgebraElt> {
        self.bruhat_operator(Op::C, mu, f)
    }

    pub fn twisted_b(&self, mu: &WeightVec, f: &GroupAlgebraElt) -> Result<GroupAlgebraElt> {
        self.bruhat_operator(Op::TwistedB, mu, f)
    }

    pub fn twisted_c(&self, mu: &WeightVec, f: &GroupAlgebraElt) -> Result<GroupAlgebraElt> {
        self.bruhat_operator(Op::TwistedC, mu, f)
    }

    /// `Σ a_x x ↦ Σ a_x A_x`.
    pub fn upsilon(&self, f: &GroupAlgebraElt) -> NilHeckeElt {
        f.clone()
    }

    /// Centrality through the twisted operators: `B̃^{ω_i} f = C̃^{ω_i} f` for all `i`.
    pub fn twisted_central(&self, f: &GroupAlgebraElt) -> Result<bool> {
        for i in 1..=self.rank() {
            let om = self.fundamental_weight(i);
            if self.twisted_b(&om, f)? != self.twisted_c(&om, f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `B^{μ_k}⋯B^{μ_1} Σ_w t_{wλ}` before applying `Υ`.
    pub fn b_chain(&self, lambda: &CorootVec, seq: &[WeightVec]) -> Result<GroupAlgebraElt> {
        if !self.is_regular_antidominant(lambda) {
            return Err(Error::Precondition("λ must be regular antidominant".into()));
        }
        let mut f = orbit_sum(self, lambda);
        for mu in seq {
            f = self.b_op(mu, &f)?;
        }
        Ok(f)
    }

    /// `b(λ; μ_1, …, μ_k)`, checked to be central.
    pub fn b_element(&self, lambda: &CorootVec, seq: &[WeightVec]) -> Result<NilHeckeElt> {
        let b = self.upsilon(&self.b_chain(lambda, seq)?);
        if !self.is_central(&b) {
            return Err(Error::Invariant("b-element is not central".into()));
        }
        Ok(b)
    }

    /// `Θ_w^λ(q_μ σ^v) = v w⁻¹ t_{w(λ+μ)}` on `λ`-small classes.
    pub fn theta_map(&self, w: &WeylElt, lambda: &CorootVec, sigma: &QHClass) -> Result<GroupAlgebraElt> {
        let winv = w.inverse();
        let mut out = GroupAlgebraElt::zero();
        for ((v, mu), c) in sigma.iter() {
            let shifted = *lambda + *mu;
            if !self.is_antidominant(&shifted) || self.budget(&shifted).is_none() {
                return Err(Error::Precondition("class is not λ-small".into()));
            }
            out.add_term(AffineElt { w: v.mul(&winv), t: self.act_coroot(w, &shifted) }, c.clone());
        }
        Ok(out)
    }

    /// Non-equivariant multiplication by `ξ_{r_0}`: `Σ a_i^∨ ξ_{r_i x}` over
    /// length-increasing Grassmannian `r_i x`.
    pub fn pieri_r0(&self, xi: &LinComb<AffineElt>) -> LinComb<AffineElt> {
        let mut out = LinComb::zero();
        for (x, c) in xi.iter() {
            let c0 = c.eval_zero();
            let lx = self.aff_length(x);
            for i in 0..=self.rank() {
                let y = self.aff_mul(&self.aff_simple(i), x);
                if self.aff_length(&y) == lx + 1 && self.is_grassmannian(&y) {
                    out.add_term(y, c0.scale_int(&self.comarks()[i].into()));
                }
            }
        }
        out
    }
}

/// The affine side of the Borel-case correspondence, with a transparent
/// cache of `j`-classes.
pub struct Peterson<'a> {
    pub rs: &'a RootSystem,
    pub qr: QuantumRing<'a>,
    jcache: Mutex<HashMap<AffineElt, JElement>>,
}

impl<'a> Peterson<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<Self> {
        Ok(Peterson { rs, qr: QuantumRing::new(rs)?, jcache: Mutex::new(HashMap::new()) })
    }

    /// Checks that `x = w t_λ` is deep enough for the quantum Schubert
    /// polynomial of `w` to be pushed through the `B` operators.
    pub fn j_ready(&self, x: &AffineElt) -> Result<()> {
        let rs = self.rs;
        for t in &self.qr.schubert_poly(&x.w).terms {
            let lam = x.t + t.q;
            if !rs.is_regular_antidominant(&lam) {
                return Err(Error::Budget(format!("{:?} is not regular antidominant", lam.coords(rs.rank()))));
            }
            match rs.budget(&lam) {
                Some(b) if b >= t.word.len() as i64 => {}
                _ => return Err(Error::Budget(format!("translation of {} is not deep enough", rs.format_aff_word(x)))),
            }
        }
        Ok(())
    }

    /// The smallest `deep_antidominant(b)` making `f(ν)` hold, searching by doubling.
    pub fn deep_enough(&self, ok: impl Fn(&CorootVec) -> bool) -> CorootVec {
        let mut b = 0;
        loop {
            let nu = self.rs.deep_antidominant(b);
            if ok(&nu) {
                return nu;
            }
            b = if b == 0 { 1 } else { 2 * b };
        }
    }

    /// `j(ξ_{w t_λ})` from the quantum Schubert polynomial of `σ^w`.
    pub fn j_class(&self, x: &AffineElt) -> Result<JElement> {
        if let Some(j) = self.jcache.lock().expect("cache").get(x) {
            return Ok(j.clone());
        }
        self.j_ready(x)?;
        let rs = self.rs;
        let poly = self.qr.schubert_poly(&x.w);
        let mut memo: HashMap<(CorootVec, Vec<usize>), GroupAlgebraElt> = HashMap::new();
        let mut sum = NilHeckeElt::zero();
        for t in &poly.terms {
            let lam = x.t + t.q;
            if !memo.contains_key(&(lam, Vec::new())) {
                memo.insert((lam, Vec::new()), orbit_sum(rs, &lam));
            }
            for k in 1..=t.word.len() {
                let key = (lam, t.word[..k].to_vec());
                if !memo.contains_key(&key) {
                    let prev = &memo[&(lam, t.word[..k - 1].to_vec())];
                    let next = rs.b_op(&rs.fundamental_weight(t.word[k - 1]), prev)?;
                    memo.insert(key, next);
                }
            }
            sum.add_scaled(&rs.upsilon(&memo[&(lam, t.word.clone())]), &t.coeff);
        }
        let j = sum.div_int(&poly.denominator)?;
        if !rs.is_central(&j) {
            return Err(Error::Invariant(format!("j({}) is not central", rs.format_aff_word(x))));
        }
        if rs.mod_j(&j) != NilHeckeElt::basis(*x) {
            return Err(Error::Invariant(format!("j({}) is not A_x mod J", rs.format_aff_word(x))));
        }
        self.jcache.lock().expect("cache").insert(*x, j.clone());
        Ok(j)
    }

    /// `j_x^y` for a `j`-ready `x`.
    pub fn j_coefficient(&self, x: &AffineElt, y: &AffineElt) -> Result<Scalar> {
        Ok(self.j_class(x)?.get(y))
    }

    /// `ξ_a ξ_b`, translating `a` by `ξ_{t_ν}` when its terms are too shallow.
    pub fn hom_product(&self, a: &HomologyClass, b: &HomologyClass) -> Result<HomologyClass> {
        let rs = self.rs;
        let ready = |nu: &CorootVec| a.terms.iter().all(|(x, _)| self.j_ready(&AffineElt { w: x.w, t: x.t + *nu }).is_ok());
        let nu = if ready(&CorootVec::ZERO) { CorootVec::ZERO } else { self.deep_enough(ready) };
        let mut out = LinComb::zero();
        for (x, c) in a.terms.iter() {
            let xt = AffineElt { w: x.w, t: x.t + nu };
            let j = self.j_class(&xt)?;
            out.add_scaled(&rs.act_on_homology(&j, &b.terms), c);
        }
        HomologyClass::new(rs, out, a.denominator + b.denominator + nu)
    }

    /// `ξ_{w t_κ} ξ_{t_ν}^{-1} ↦ q_{κ−ν} σ^w`.
    pub fn psi_map(&self, h: &HomologyClass) -> QHClass {
        h.terms.iter().map(|(x, c)| ((x.w, x.t - h.denominator), c.clone())).collect()
    }

    /// A preimage under `ψ` with a common denominator `ξ_{t_ν}`.
    pub fn psi_inverse(&self, c: &QHClass) -> HomologyClass {
        let rs = self.rs;
        let nu = self.deep_enough(|nu| c.iter().all(|((w, q), _)| rs.is_grassmannian(&AffineElt { w: *w, t: *q + *nu })));
        let terms = c.iter().map(|((w, q), v)| (AffineElt { w: *w, t: *q + nu }, v.clone())).collect();
        HomologyClass { terms, denominator: nu }
    }

    /// `j_x^y` through quantum cohomology: `c_{w,v}^{uv, v⁻¹ν − λ}` for
    /// `x = w t_λ` and superregular `y = u t_ν`.
    pub fn j_from_gw(&self, x: &AffineElt, y: &AffineElt) -> Result<Scalar> {
        let rs = self.rs;
        if !rs.is_grassmannian(x) {
            return Err(Error::Precondition("x must be Grassmannian".into()));
        }
        let (v, anti) = rs.decompose_chamber(&y.t);
        if rs.budget(&anti).is_none() {
            return Err(Error::Precondition("y must be superregular".into()));
        }
        let kappa = anti - x.t;
        if !kappa.is_nonneg() {
            return Ok(Scalar::zero());
        }
        Ok(self.qr.gw_coefficient(&x.w, &v, &y.w.mul(&v), &kappa))
    }

    /// A base translation `λ` for which the converse dictionary applies to `η`.
    pub fn converse_base(&self, f: &WeylElt, eta: &CorootVec) -> CorootVec {
        let rs = self.rs;
        self.deep_enough(|lam| {
            let s = *eta + *lam;
            self.j_ready(&AffineElt { w: *f, t: *lam }).is_ok() && rs.is_regular_antidominant(&s) && rs.budget(&s).is_some()
        })
    }

    /// `c_{f,g}^{h,η} = j_{f t_λ}^{h g⁻¹ t_{g(η+λ)}}` at the given base `λ`.
    pub fn gw_from_j_at(&self, f: &WeylElt, g: &WeylElt, h: &WeylElt, eta: &CorootVec, lam: &CorootVec) -> Result<Scalar> {
        let rs = self.rs;
        let x = AffineElt { w: *f, t: *lam };
        let y = AffineElt { w: h.mul(&g.inverse()), t: rs.act_coroot(g, &(*eta + *lam)) };
        self.j_coefficient(&x, &y)
    }

    pub fn gw_from_j(&self, f: &WeylElt, g: &WeylElt, h: &WeylElt, eta: &CorootVec) -> Result<Scalar> {
        let lam = self.converse_base(f, eta);
        self.gw_from_j_at(f, g, h, eta, &lam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_operator_near_terms() {
        let a1 = RootSystem::build("A1").unwrap();
        let lam = a1.deep_antidominant(2);
        let f = orbit_sum(&a1, &lam);
        let om = a1.fundamental_weight(1);
        let g = a1.b_op(&om, &f).unwrap();
        assert_eq!(g.len(), 3);
        // the twisted operators coincide with the plain ones on the identity chamber
        let t = GroupAlgebraElt::basis(a1.aff_translation(lam));
        assert_eq!(a1.twisted_b(&om, &t).unwrap(), a1.b_op(&om, &t).unwrap());
        assert!(a1.b_op(&om, &GroupAlgebraElt::basis(a1.aff_identity())).is_err());
    }

    #[test]
    fn j_class_a1() {
        let a1 = RootSystem::build("A1").unwrap();
        let p = Peterson::new(&a1).unwrap();
        let lam = a1.deep_antidominant(2);
        let t = a1.aff_translation(lam);
        let jt = p.j_class(&t).unwrap();
        let mut want = NilHeckeElt::basis(t);
        want.add_term(a1.aff_translation(-lam), Scalar::one());
        assert_eq!(jt, want);

        let s = a1.simple_reflection(1);
        let x = AffineElt { w: s, t: lam };
        let jx = p.j_class(&x).unwrap();
        let av = a1.simple_coroot(1);
        let mut want = NilHeckeElt::basis(x);
        want.add_term(a1.aff_translation(-lam), Scalar::var(1));
        want.add_term(AffineElt { w: s, t: -lam - av }, Scalar::one());
        assert_eq!(jx, want);
        assert_eq!(jx, a1.b_element(&lam, &[a1.fundamental_weight(1)]).unwrap());
    }

    #[test]
    fn homology_products_a1() {
        let a1 = RootSystem::build("A1").unwrap();
        let p = Peterson::new(&a1).unwrap();
        let r0 = a1.aff_simple(0);
        let xi = HomologyClass::basis(&a1, r0).unwrap();
        let sq = p.hom_product(&xi, &xi).unwrap().eval_zero();
        let psi = p.psi_map(&sq);
        assert_eq!(psi, QHClass::single((a1.weyl_identity(), -a1.simple_coroot(1)), Scalar::one()));
        assert_eq!(p.psi_map(&xi), QHClass::single((a1.simple_reflection(1), -a1.simple_coroot(1)), Scalar::one()));
        let sq_direct = p.qr.class_product(&p.psi_map(&xi), &p.psi_map(&xi));
        assert_eq!(crate::quantum::specialize(&sq_direct, crate::quantum::Specialization::AlphaToZero), psi);
        assert_eq!(a1.pieri_r0(&xi.terms), LinComb::basis(a1.aff_from_word(&[1, 0]).unwrap()));
        let id = HomologyClass::basis(&a1, a1.aff_identity()).unwrap();
        assert_eq!(p.psi_map(&p.hom_product(&id, &xi).unwrap()), p.psi_map(&xi));
    }

    #[test]
    fn dictionary_a1() {
        let a1 = RootSystem::build("A1").unwrap();
        let p = Peterson::new(&a1).unwrap();
        let s = a1.simple_reflection(1);
        let id = a1.weyl_identity();
        let av = a1.simple_coroot(1);
        assert_eq!(p.gw_from_j(&s, &s, &id, &av).unwrap(), Scalar::one());
        assert_eq!(p.gw_from_j(&s, &s, &s, &CorootVec::ZERO).unwrap(), Scalar::var(1));
        let lam = a1.deep_antidominant(2);
        let x = AffineElt { w: s, t: lam };
        for (y, c) in p.j_class(&x).unwrap().iter() {
            assert_eq!(&p.j_from_gw(&x, y).unwrap(), c);
        }
    }

    #[test]
    fn psi_round_trip() {
        let a2 = RootSystem::build("A2").unwrap();
        let p = Peterson::new(&a2).unwrap();
        let c = p.qr.product(&a2.simple_reflection(1), &a2.longest_element());
        assert_eq!(p.psi_map(&p.psi_inverse(&c)), c);
    }
}
