//! The affine nilHecke ring: left `S`-combinations `Σ a_x A_x`.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::cartan::{RootSystem, RootVec, WeightVec};
use crate::coeffring::{LinComb, Mono, Scalar};
use crate::weyl::AffineElt;

pub type NilHeckeElt = LinComb<AffineElt>;

/// `A_x μ = (x·μ) A_x + Σ c_y A_y` for an integral weight `μ`; the leading
/// weight is kept symbolic because `ω_i` need not lie in `Z[α]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCommutation {
    pub leading: WeightVec,
    pub element: AffineElt,
    pub corrections: NilHeckeElt,
}

impl WeightCommutation {
    pub fn num_terms(&self) -> usize {
        self.corrections.len() + usize::from(!self.leading.is_zero())
    }
}

impl RootSystem {
    /// `A_x A_y`: `A_{xy}` when lengths add, else zero.
    pub fn basis_product(&self, x: &AffineElt, y: &AffineElt) -> Option<AffineElt> {
        let xy = self.aff_mul(x, y);
        (self.aff_length(&xy) == self.aff_length(x) + self.aff_length(y)).then_some(xy)
    }

    fn commute_corrections(&self, x: &AffineElt, pairing: impl Fn(&crate::cartan::CorootVec) -> i64) -> NilHeckeElt {
        let mut out = NilHeckeElt::zero();
        for c in self.cocovers(x) {
            let vee = self.coroot_of(&c.root.finite).expect("real root");
            let p = pairing(&vee);
            if p != 0 {
                out.add_term(c.target, Scalar::from_int(p));
            }
        }
        out
    }

    /// `A_x β` for a root-lattice linear form `β`, with scalars moved left.
    pub fn commute_linear(&self, x: &AffineElt, beta: &RootVec) -> NilHeckeElt {
        let mut out = self.commute_corrections(x, |v| self.pair_root(v, beta));
        out.add_term(*x, Scalar::linear(&x.w.act_root(beta)));
        out
    }

    /// `A_x μ` for a weight `μ` (level-zero action; translations act trivially).
    pub fn commute_weight(&self, x: &AffineElt, mu: &WeightVec) -> WeightCommutation {
        WeightCommutation {
            leading: self.act_weight(&x.w, mu),
            element: *x,
            corrections: self.commute_corrections(x, |v| self.pair(v, mu)),
        }
    }

    /// `A_x f` for a polynomial `f`, pushing one linear factor at a time.
    pub fn commute_scalar(&self, x: &AffineElt, f: &Scalar) -> NilHeckeElt {
        let mut memo = HashMap::new();
        let mut out = NilHeckeElt::zero();
        for (m, c) in f.terms() {
            let part = self.commute_mono(x, *m, &mut memo);
            out.add_scaled(&part, &Scalar::from_big(c.clone()));
        }
        out
    }

    fn commute_mono(&self, x: &AffineElt, m: Mono, memo: &mut HashMap<(AffineElt, Mono), NilHeckeElt>) -> NilHeckeElt {
        if m == Mono::ONE {
            return NilHeckeElt::basis(*x);
        }
        if let Some(v) = memo.get(&(*x, m)) {
            return v.clone();
        }
        let i = m.0.iter().position(|&e| e > 0).expect("nonconstant");
        let mut rest = m;
        rest.0[i] -= 1;
        let mut out = NilHeckeElt::zero();
        for (y, c) in self.commute_linear(x, &RootVec::basis(i + 1)).iter() {
            out.add_scaled(&self.commute_mono(y, rest, memo), c);
        }
        memo.insert((*x, m), out.clone());
        out
    }

    pub fn nil_product(&self, a: &NilHeckeElt, b: &NilHeckeElt) -> NilHeckeElt {
        let mut out = NilHeckeElt::zero();
        for (x, ax) in a.iter() {
            for (y, by) in b.iter() {
                for (z, cz) in self.commute_scalar(x, by).iter() {
                    if let Some(zy) = self.basis_product(z, y) {
                        out.add_term(zy, ax * cz);
                    }
                }
            }
        }
        out
    }

    /// `a ω_i − ω_i a`, which is integral even when `ω_i ∉ Z[α]`.
    pub fn commutator_fundamental(&self, a: &NilHeckeElt, i: usize) -> NilHeckeElt {
        let om = self.fundamental_weight(i);
        let mut out = NilHeckeElt::zero();
        for (x, ax) in a.iter() {
            out.add_term(*x, -(ax * &Scalar::weight_diff(self, &om, &x.w)));
            out.add_scaled(&self.commute_corrections(x, |v| v.at(i) as i64), ax);
        }
        out
    }

    /// Membership in the centralizer of `S`.
    pub fn is_central(&self, a: &NilHeckeElt) -> bool {
        (1..=self.rank()).all(|i| self.commutator_fundamental(a, i).is_zero())
    }

    /// Reduction modulo `J`: keep the Grassmannian terms.
    pub fn mod_j(&self, a: &NilHeckeElt) -> NilHeckeElt {
        a.filter(|x| self.is_grassmannian(x))
    }

    /// Action on `H_T(Gr_G)`: `A_y·ξ_z = ξ_{yz}` when lengths add and `yz ∈ W_af^-`.
    pub fn act_on_homology(&self, a: &NilHeckeElt, xi: &LinComb<AffineElt>) -> LinComb<AffineElt> {
        let mut out = LinComb::zero();
        for (z, bz) in xi.iter() {
            let lz = self.aff_length(z);
            for (y, ay) in a.iter() {
                let yz = self.aff_mul(y, z);
                if self.is_grassmannian(&yz) && self.aff_length(&yz) == self.aff_length(y) + lz {
                    out.add_term(yz, ay * bz);
                }
            }
        }
        out
    }

    /// Evaluation `φ_0` of every coefficient.
    pub fn eval_zero(&self, a: &NilHeckeElt) -> NilHeckeElt {
        a.map_coeffs(|c| c.eval_zero())
    }

    pub fn nil_to_json(&self, a: &NilHeckeElt) -> Value {
        Value::Array(
            a.iter()
                .map(|(x, c)| json!({ "element": self.aff_to_json(x), "word": self.format_aff_word(x), "coefficient": c.to_text() }))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CorootVec;

    #[test]
    fn basis_products_a1() {
        let a1 = RootSystem::build("A1").unwrap();
        let (r0, r1) = (a1.aff_simple(0), a1.aff_simple(1));
        let id = a1.aff_identity();
        assert_eq!(a1.basis_product(&id, &r1), Some(r1));
        assert_eq!(a1.basis_product(&r1, &r1), None);
        assert_eq!(a1.basis_product(&r1, &r0), Some(a1.aff_from_word(&[1, 0]).unwrap()));
    }

    #[test]
    fn commuting_weights() {
        let a1 = RootSystem::build("A1").unwrap();
        let x = a1.aff_from_word(&[1, 0]).unwrap();
        let om = a1.fundamental_weight(1);
        assert_eq!(a1.commute_weight(&x, &om).num_terms(), 3);
        let lin = a1.commute_linear(&x, &RootVec::basis(1));
        assert_eq!(lin.len(), 3);
        assert_eq!(lin.get(&x), Scalar::var(1));
        assert_eq!(lin.get(&a1.aff_simple(1)), Scalar::from_int(-2));
        assert_eq!(lin.get(&a1.aff_simple(0)), Scalar::from_int(-2));
        let id = a1.aff_identity();
        assert_eq!(a1.commute_linear(&id, &RootVec::basis(1)), NilHeckeElt::single(id, Scalar::var(1)));
    }

    #[test]
    fn simple_commutation_relation() {
        let a2 = RootSystem::build("A2").unwrap();
        for i in 0..=2 {
            let ri = a2.aff_simple(i);
            for j in 1..=2 {
                let beta = RootVec::basis(j);
                let got = a2.commute_linear(&ri, &beta);
                let alpha_i = a2.simple_affine_root(i).finite;
                let vee = a2.coroot_of(&alpha_i).unwrap();
                let mut want = NilHeckeElt::single(ri, Scalar::linear(&ri.w.act_root(&beta)));
                want.add_term(a2.aff_identity(), Scalar::from_int(a2.pair_root(&vee, &beta)));
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn centrality_examples() {
        let a1 = RootSystem::build("A1").unwrap();
        assert!(a1.is_central(&NilHeckeElt::single(a1.aff_identity(), Scalar::var(1))));
        assert!(!a1.is_central(&NilHeckeElt::basis(a1.aff_simple(1))));
        let v = a1.simple_coroot(1);
        let mut t = NilHeckeElt::basis(a1.aff_translation(-v));
        t.add_term(a1.aff_translation(v), Scalar::one());
        assert!(a1.is_central(&t));
    }

    #[test]
    fn product_examples() {
        let a1 = RootSystem::build("A1").unwrap();
        let r1 = NilHeckeElt::basis(a1.aff_simple(1));
        let s = NilHeckeElt::single(a1.aff_identity(), Scalar::var(1));
        assert_eq!(a1.nil_product(&NilHeckeElt::basis(a1.aff_identity()), &r1), r1);
        let left = a1.nil_product(&s, &r1);
        let right = a1.nil_product(&r1, &s);
        let mut diff = right.sub(&left);
        // A_1 α_1 = −α_1 A_1 + 2
        diff.add_term(a1.aff_simple(1), &Scalar::var(1) + &Scalar::var(1));
        assert_eq!(diff, NilHeckeElt::single(a1.aff_identity(), Scalar::from_int(2)));
    }

    #[test]
    fn mod_j_and_action() {
        let a1 = RootSystem::build("A1").unwrap();
        let lam = CorootVec::from_slice(&[-3]);
        let t = a1.aff_translation(lam);
        assert_eq!(a1.mod_j(&NilHeckeElt::basis(t)), NilHeckeElt::basis(t));
        assert!(a1.mod_j(&NilHeckeElt::basis(a1.aff_simple(1))).is_zero());
        let r0 = a1.aff_simple(0);
        let xi = LinComb::basis(r0);
        let r1r0 = a1.aff_from_word(&[1, 0]).unwrap();
        assert_eq!(a1.act_on_homology(&NilHeckeElt::basis(a1.aff_simple(1)), &xi), LinComb::basis(r1r0));
        assert!(a1.act_on_homology(&NilHeckeElt::basis(r0), &xi).is_zero());
        assert_eq!(a1.act_on_homology(&NilHeckeElt::basis(a1.aff_identity()), &xi), xi);
    }
}
