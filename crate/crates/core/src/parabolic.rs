//! Parabolic quotients: `(W^P)_af`, `π_P`, the ideal `J_P` and the map `Ψ_P`,
//! diagram automorphisms, strange duality and the type-A partition dictionary.

use std::collections::HashMap;
use std::sync::Mutex;

use num_rational::Rational64;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::cartan::{CorootVec, Family, RootSystem, RootVec};
use crate::coeffring::{LinComb, Scalar};
use crate::error::{Error, Result};
use crate::linalg::rational_inverse;
use crate::peterson::{HomologyClass, Peterson};
use crate::quantum::QHClass;
use crate::weyl::{AffineElt, WeylElt};

/// A permutation of the affine Dynkin nodes `0..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAut(pub Vec<usize>);

impl DiagramAut {
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Relabels a reduced word of `x`.
    pub fn act(&self, rs: &RootSystem, x: &AffineElt) -> AffineElt {
        let word: Vec<usize> = rs.aff_reduced_word(x).into_iter().map(|i| self.0[i]).collect();
        rs.aff_from_word(&word).expect("nodes stay in range")
    }
}

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KBoundedPartition(pub Vec<usize>);

impl KBoundedPartition {
    pub fn new(parts: &[usize], k: usize) -> Result<Self> {
        let parts: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition("parts must be weakly decreasing".into()));
        }
        if parts.iter().any(|&p| p > k) {
            return Err(Error::Precondition(format!("parts must be at most {k}")));
        }
        Ok(KBoundedPartition(parts))
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn transpose(&self) -> KBoundedPartition {
        let cols = self.0.first().copied().unwrap_or(0);
        KBoundedPartition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

/// The pieces of the closed form `π_P(t_λ) = v t_{λ+φ_P(λ)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationProjection {
    /// `ψ_P(λ)` in simple-coroot coordinates.
    pub psi: Vec<Rational64>,
    /// `j_m` per component, `None` standing for `0_m`.
    pub special: Vec<Option<usize>>,
    pub phi: CorootVec,
    pub v: WeylElt,
    pub result: AffineElt,
}

struct Component {
    nodes: Vec<usize>,
    /// `ω_j^∨` of the component, in global simple-coroot coordinates.
    coweights: HashMap<usize, Vec<Rational64>>,
    cominuscule: Vec<usize>,
}

pub struct ParabolicData<'a> {
    pub rs: &'a RootSystem,
    pub ip: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub rp_plus: Vec<RootVec>,
    pub w_p: WeylElt,
    pub two_rho_p: RootVec,
    comps: Vec<Component>,
    products: Mutex<HashMap<(WeylElt, WeylElt), QHClass>>,
}

impl RootSystem {
    /// Strips right descents in `nodes`: the minimal representative of `w W_J`.
    pub fn min_coset(&self, w: &WeylElt, nodes: &[usize]) -> WeylElt {
        let mut w = *w;
        while let Some(i) = self.right_descents(&w).into_iter().find(|i| nodes.contains(i)) {
            w = w.mul(&self.simple_reflection(i));
        }
        w
    }

    /// All automorphisms of the affine Dynkin diagram.
    pub fn diagram_automorphisms(&self) -> Vec<DiagramAut> {
        fn extend(rs: &RootSystem, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<DiagramAut>) {
            let a = perm.len();
            let n = rs.rank() + 1;
            if a == n {
                out.push(DiagramAut(perm.clone()));
                return;
            }
            for c in 0..n {
                if used[c] || rs.affine_cartan_entry(c, c) != rs.affine_cartan_entry(a, a) {
                    continue;
                }
                let ok = (0..a).all(|b| {
                    rs.affine_cartan_entry(perm[b], c) == rs.affine_cartan_entry(b, a)
                        && rs.affine_cartan_entry(c, perm[b]) == rs.affine_cartan_entry(a, b)
                });
                if ok {
                    perm.push(c);
                    used[c] = true;
                    extend(rs, perm, used, out);
                    used[c] = false;
                    perm.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(self, &mut Vec::new(), &mut vec![false; self.rank() + 1], &mut out);
        out
    }

    fn coweight_or_zero(&self, i: usize) -> Vec<Rational64> {
        if i == 0 {
            vec![Rational64::zero(); self.rank()]
        } else {
            self.fundamental_coweight(i)
        }
    }

    /// `v_i`: shortest element with `v_i ω_i = w_0 ω_i`.
    pub fn v_special(&self, i: usize) -> Result<WeylElt> {
        if !self.special_nodes().contains(&i) {
            return Err(Error::Precondition(format!("node {i} is not special")));
        }
        if i == 0 {
            return Ok(self.weyl_identity());
        }
        let others: Vec<usize> = (1..=self.rank()).filter(|&k| k != i).collect();
        Ok(self.min_coset(&self.longest_element(), &others))
    }

    /// `τ_i`: the diagram automorphism with `τ_i(i) = 0` realizing translation by
    /// `−ω_i^∨` on special nodes; checked against `v_i t_{−ω_i^∨}` on the simple roots.
    pub fn tau(&self, i: usize) -> Result<DiagramAut> {
        let v = self.v_special(i)?;
        let special = self.special_nodes();
        let wi = self.coweight_or_zero(i);
        let matches_sigma = |a: &DiagramAut| {
            special.iter().all(|&s| {
                let lhs = self.coweight_or_zero(a.apply(s));
                let rhs = self.coweight_or_zero(s);
                (0..self.rank()).all(|k| (lhs[k] - rhs[k] + wi[k]).is_integer())
            })
        };
        let cands: Vec<DiagramAut> =
            self.diagram_automorphisms().into_iter().filter(|a| a.apply(i) == 0 && matches_sigma(a)).collect();
        if cands.len() != 1 {
            return Err(Error::Invariant(format!("{} candidates for τ_{i}", cands.len())));
        }
        let tau = cands.into_iter().next().expect("one candidate");
        for j in 0..=self.rank() {
            let a = self.simple_affine_root(j);
            let lvl = a.level + if i == 0 { 0 } else { a.finite.at(i) };
            let img = crate::cartan::AffineRoot::new(v.act_root(&a.finite), lvl);
            if img != self.simple_affine_root(tau.apply(j)) {
                return Err(Error::Invariant(format!("τ_{i} disagrees with v_i t_(-ω_i^∨) on α_{j}")));
            }
        }
        Ok(tau)
    }

    /// `i ↦ i*` with `w_0 r_i w_0 = r_{i*}` and `0* = 0`.
    pub fn star(&self) -> DiagramAut {
        let w0 = self.longest_element();
        let mut p = vec![0];
        for i in 1..=self.rank() {
            let c = w0.mul(&self.simple_reflection(i)).mul(&w0);
            p.push((1..=self.rank()).find(|&k| self.simple_reflection(k) == c).expect("conjugate of a simple reflection"));
        }
        DiagramAut(p)
    }

    fn require_type_a(&self) -> Result<usize> {
        match self.ctype.family {
            Family::A => Ok(self.rank() + 1),
            _ => Err(Error::Precondition(format!("{} is not of type A", self.label()))),
        }
    }

    /// One-line notation `w(1) … w(n)` of a permutation in type `A_{n−1}`.
    pub fn one_line(&self, w: &WeylElt) -> Result<Vec<usize>> {
        let n = self.require_type_a()?;
        let word = self.weyl_reduced_word(w);
        Ok((1..=n)
            .map(|k| {
                word.iter().rev().fold(k, |x, &i| {
                    if x == i {
                        i + 1
                    } else if x == i + 1 {
                        i
                    } else {
                        x
                    }
                })
            })
            .collect())
    }

    /// `w_λ^af`: residues `x_1 − x_2 mod n`, rows top to bottom, each right to left.
    pub fn partition_to_affine(&self, lambda: &KBoundedPartition) -> Result<AffineElt> {
        let n = self.require_type_a()?;
        let lambda = KBoundedPartition::new(&lambda.0, n - 1)?;
        let mut word = Vec::new();
        for (row, &len) in lambda.0.iter().enumerate().rev() {
            let x2 = row as i64 + 1;
            for x1 in (1..=len as i64).rev() {
                word.push((x1 - x2).rem_euclid(n as i64) as usize);
            }
        }
        let x = self.aff_from_word(&word)?;
        if self.aff_length(&x) != word.len() || !self.is_grassmannian(&x) {
            return Err(Error::Invariant("partition filling is not a reduced Grassmannian word".into()));
        }
        Ok(x)
    }

    /// `w_μ ∈ W^P` for `I ∖ I_P = {j}`: values `j + x_1 − x_2`, columns right to
    /// left, each column top to bottom.
    pub fn partition_to_wp(&self, j: usize, mu: &KBoundedPartition) -> Result<WeylElt> {
        let n = self.require_type_a()?;
        if mu.0.len() > j || mu.0.iter().any(|&p| p > n - j) {
            return Err(Error::Precondition(format!("shape does not fit in the {j}×{} rectangle", n - j)));
        }
        let mut word = Vec::new();
        let cols = mu.0.first().copied().unwrap_or(0);
        for x1 in (1..=cols).rev() {
            let height = mu.0.iter().filter(|&&p| p >= x1).count();
            for x2 in (1..=height).rev() {
                word.push(j + x1 - x2);
            }
        }
        let w = self.weyl_from_word(&word)?;
        if self.weyl_length(&w) != word.len() {
            return Err(Error::Invariant("column reading is not reduced".into()));
        }
        Ok(w)
    }

    /// `h_[m] = r_{m−1} ⋯ r_1 r_0`.
    pub fn h_generator(&self, m: usize) -> Result<AffineElt> {
        let word: Vec<usize> = (0..m).rev().collect();
        self.aff_from_word(&word)
    }
}

/// `c_[m] = r_{j−m+1} ⋯ r_{j−1} r_j`.
pub fn c_generator(rs: &RootSystem, j: usize, m: usize) -> Result<WeylElt> {
    if m > j {
        return Err(Error::Precondition(format!("c_[{m}] needs m ≤ {j}")));
    }
    let word: Vec<usize> = (j + 1 - m..=j).collect();
    rs.weyl_from_word(&word)
}

impl<'a> ParabolicData<'a> {
    pub fn new(rs: &'a RootSystem, ip: &[usize]) -> Result<Self> {
        let mut ip = ip.to_vec();
        ip.sort_unstable();
        ip.dedup();
        if let Some(&bad) = ip.iter().find(|&&i| i == 0 || i > rs.rank()) {
            return Err(Error::Precondition(format!("node {bad} is not a finite node of {}", rs.label())));
        }
        let supported = |b: &RootVec| (1..=rs.rank()).all(|k| b.at(k) == 0 || ip.contains(&k));
        let rp_plus: Vec<RootVec> = rs.positive_roots().iter().copied().filter(|b| supported(b)).collect();
        let two_rho_p = rp_plus.iter().fold(RootVec::ZERO, |a, b| a + *b);
        let components = rs.connected_components(&ip);
        let mut comps = Vec::new();
        for nodes in &components {
            let m: Vec<Vec<i64>> = nodes
                .iter()
                .map(|&i| nodes.iter().map(|&k| rs.pair_root(&rs.simple_coroot(i), &rs.simple_root(k))).collect())
                .collect();
            let inv = rational_inverse(&m).ok_or_else(|| Error::Invariant("singular Levi Cartan matrix".into()))?;
            let mut coweights = HashMap::new();
            for (a, &j) in nodes.iter().enumerate() {
                let mut v = vec![Rational64::zero(); rs.rank()];
                for (b, &i) in nodes.iter().enumerate() {
                    v[i - 1] = inv[a][b];
                }
                coweights.insert(j, v);
            }
            let in_comp = |b: &RootVec| (1..=rs.rank()).all(|k| b.at(k) == 0 || nodes.contains(&k));
            let theta_m = rp_plus.iter().filter(|b| in_comp(b)).max_by_key(|b| b.height()).copied().expect("nonempty component");
            let cominuscule = nodes.iter().copied().filter(|&j| theta_m.at(j) == 1).collect();
            comps.push(Component { nodes: nodes.clone(), coweights, cominuscule });
        }
        Ok(ParabolicData {
            rs,
            w_p: rs.longest_in(&ip),
            ip,
            components,
            rp_plus,
            two_rho_p,
            comps,
            products: Mutex::new(HashMap::new()),
        })
    }

    /// The maximal parabolic with `I ∖ I_P = {j}`.
    pub fn maximal(rs: &'a RootSystem, j: usize) -> Result<Self> {
        let ip: Vec<usize> = (1..=rs.rank()).filter(|&k| k != j).collect();
        Self::new(rs, &ip)
    }

    pub fn in_rp(&self, beta: &RootVec) -> bool {
        !beta.is_zero() && (1..=self.rs.rank()).all(|k| beta.at(k) == 0 || self.ip.contains(&k))
    }

    pub fn complement(&self) -> Vec<usize> {
        (1..=self.rs.rank()).filter(|k| !self.ip.contains(k)).collect()
    }

    /// `π_P` on `W`: the `W^P` factor.
    pub fn pi_finite(&self, w: &WeylElt) -> WeylElt {
        self.rs.min_coset(w, &self.ip)
    }

    pub fn is_min_coset(&self, w: &WeylElt) -> bool {
        self.rs.right_descents(w).iter().all(|i| !self.ip.contains(i))
    }

    /// `W^P`, ordered by length then word.
    pub fn coset_reps(&self) -> Vec<WeylElt> {
        self.rs.weyl_elements().iter().copied().filter(|w| self.is_min_coset(w)).collect()
    }

    /// `η_P`: coset representative with the `I_P` coordinates cleared.
    pub fn eta(&self, lambda: &CorootVec) -> CorootVec {
        let mut out = *lambda;
        for &i in &self.ip {
            out.0[i - 1] = 0;
        }
        out
    }

    /// Membership in `(W^P)_af` by the pairing criterion on `R_P^+`.
    pub fn in_wpaff(&self, x: &AffineElt) -> bool {
        self.rp_plus.iter().all(|a| {
            let p = self.rs.pair_root(&x.t, a);
            if x.w.act_root(a).is_positive() {
                p == 0
            } else {
                p == -1
            }
        })
    }

    /// The `(W^P)_af` factor of `x`, by stripping inversions with finite part in `R_P`.
    pub fn pi_p(&self, x: &AffineElt) -> Result<AffineElt> {
        let rs = self.rs;
        let mut cur = *x;
        while let Some(beta) = rs.aff_inversions(&cur).into_iter().find(|b| self.in_rp(&b.finite)) {
            cur = rs.aff_mul(&cur, &rs.aff_reflection(&beta)?);
        }
        if x.w.is_identity() {
            let closed = self.pi_p_translation(&x.t)?;
            if closed != cur {
                return Err(Error::Invariant("inversion stripping and the closed form disagree".into()));
            }
        }
        Ok(cur)
    }

    pub fn v_component(&self, m: usize, j: Option<usize>) -> WeylElt {
        let c = &self.comps[m];
        match j {
            None => self.rs.weyl_identity(),
            Some(j) => {
                let others: Vec<usize> = c.nodes.iter().copied().filter(|&k| k != j).collect();
                self.rs.min_coset(&self.rs.longest_in(&c.nodes), &others)
            }
        }
    }

    /// `π_P(t_λ) = v t_{λ+φ_P(λ)}` with all intermediate data.
    pub fn translation_projection(&self, lambda: &CorootVec) -> Result<TranslationProjection> {
        let rs = self.rs;
        let r = rs.rank();
        let mut psi = vec![Rational64::zero(); r];
        let mut phi = CorootVec::ZERO;
        let mut v = rs.weyl_identity();
        let mut special = Vec::new();
        for (m, c) in self.comps.iter().enumerate() {
            let mut mu = vec![Rational64::zero(); r];
            for &j in &c.nodes {
                let p = Rational64::from(rs.pair_root(lambda, &rs.simple_root(j)));
                for (k, x) in c.coweights[&j].iter().enumerate() {
                    mu[k] += p * x;
                }
            }
            let zero = vec![Rational64::zero(); r];
            let mut found = None;
            for cand in std::iter::once(None).chain(c.cominuscule.iter().map(|&j| Some(j))) {
                let om = cand.map_or(&zero, |j| &c.coweights[&j]);
                if (0..r).all(|k| (mu[k] + om[k]).is_integer()) {
                    if found.is_some() {
                        return Err(Error::Invariant("two special nodes represent one coset".into()));
                    }
                    found = Some((cand, om.clone()));
                }
            }
            let (jm, om) = found.ok_or_else(|| Error::Invariant("no special node represents the coset".into()))?;
            for k in 0..r {
                psi[k] += mu[k];
                let val = -mu[k] - om[k];
                phi.0[k] += val.to_integer() as i32;
            }
            v = v.mul(&self.v_component(m, jm));
            special.push(jm);
        }
        if rs.is_antidominant(lambda) && !phi.is_nonneg() {
            return Err(Error::Invariant("φ_P of an antidominant coroot has a negative coordinate".into()));
        }
        Ok(TranslationProjection { psi, special, phi, v, result: AffineElt { w: v, t: *lambda + phi } })
    }

    pub fn pi_p_translation(&self, lambda: &CorootVec) -> Result<AffineElt> {
        Ok(self.translation_projection(lambda)?.result)
    }

    /// Grassmannian `x` lies in `J_P` iff it is outside `(W^P)_af`.
    pub fn in_jp(&self, x: &AffineElt) -> Result<bool> {
        if !self.rs.is_grassmannian(x) {
            return Err(Error::Precondition("J_P membership is for Grassmannian elements".into()));
        }
        Ok(!self.in_wpaff(x))
    }

    /// `Ψ_P(ξ_x) = q_{η_P(κ)} σ_P^u` for `x = u π_P(t_κ)`, or `None` in `J_P`.
    pub fn psi_p_term(&self, x: &AffineElt) -> Result<Option<(WeylElt, CorootVec)>> {
        if self.in_jp(x)? {
            return Ok(None);
        }
        let u = self.pi_finite(&x.w);
        let back = self.rs.aff_mul(&self.rs.aff_finite(u), &self.pi_p_translation(&x.t)?);
        if back != *x {
            return Err(Error::Invariant(format!("{} is not u·π_P(t_κ)", self.rs.format_aff_word(x))));
        }
        Ok(Some((u, self.eta(&x.t))))
    }

    /// `Ψ_P` on a combination of Schubert classes, dropping `J_P`.
    pub fn psi_p(&self, terms: &LinComb<AffineElt>) -> Result<QHClass> {
        let mut out = QHClass::zero();
        for (x, c) in terms.iter() {
            if let Some(key) = self.psi_p_term(x)? {
                out.add_term(key, c.clone());
            }
        }
        Ok(out)
    }

    /// A regular antidominant base translation.
    pub fn base_translation(&self) -> CorootVec {
        -self.rs.positive_coroots().iter().fold(CorootVec::ZERO, |a, c| a + *c)
    }

    /// `u π_P(t_λ)`, checked to lie in `W_af^- ∩ (W^P)_af`.
    pub fn lift(&self, u: &WeylElt, lambda: &CorootVec) -> Result<AffineElt> {
        if !self.is_min_coset(u) {
            return Err(Error::Precondition("element is not in W^P".into()));
        }
        let x = self.rs.aff_mul(&self.rs.aff_finite(*u), &self.pi_p_translation(lambda)?);
        if !self.rs.is_grassmannian(&x) || !self.in_wpaff(&x) {
            return Err(Error::Invariant("lift left W_af^- ∩ (W^P)_af".into()));
        }
        Ok(x)
    }

    /// `Ψ_P(ξ_x ξ_y)` for `x, y ∈ W_af^- ∩ (W^P)_af`.
    pub fn quotient_product_affine(&self, pet: &Peterson, x: &AffineElt, y: &AffineElt) -> Result<QHClass> {
        let rs = self.rs;
        let h = pet.hom_product(&HomologyClass::basis(rs, *x)?, &HomologyClass::basis(rs, *y)?)?;
        self.psi_p(&h.clear_denominator(rs)?)
    }

    /// `σ_P^u * σ_P^v` through the affine Grassmannian.
    pub fn quotient_product(&self, pet: &Peterson, u: &WeylElt, v: &WeylElt) -> Result<QHClass> {
        if let Some(p) = self.products.lock().expect("cache").get(&(*u, *v)) {
            return Ok(p.clone());
        }
        let base = self.base_translation();
        let x = self.lift(u, &base)?;
        let y = self.lift(v, &base)?;
        let shift = self.eta(&(x.t + y.t));
        let raw = self.quotient_product_affine(pet, &x, &y)?;
        let out: QHClass = raw.iter().map(|((w, q), c)| ((*w, *q - shift), c.clone())).collect();
        self.products.lock().expect("cache").insert((*u, *v), out.clone());
        Ok(out)
    }

    /// Bilinear extension of `quotient_product`.
    pub fn class_product(&self, pet: &Peterson, a: &QHClass, b: &QHClass) -> Result<QHClass> {
        let mut out = QHClass::zero();
        for ((u, qa), ca) in a.iter() {
            for ((v, qb), cb) in b.iter() {
                let c = ca * cb;
                for ((w, q), k) in self.quotient_product(pet, u, v)?.iter() {
                    out.add_term((*w, *q + *qa + *qb), &c * k);
                }
            }
        }
        Ok(out)
    }

    fn require_proper(&self) -> Result<()> {
        if self.in_rp(&self.rs.theta()) {
            return Err(Error::Precondition("P = G".into()));
        }
        Ok(())
    }

    /// A translation with `π_P(t_λ) = t_λ` and `⟨λ, α_i⟩ < 0` off `I_P`.
    pub fn parabolic_translation(&self) -> CorootVec {
        let rs = self.rs;
        let det = rs.cartan_det();
        let mut out = CorootVec::ZERO;
        for i in self.complement() {
            for (k, c) in rs.fundamental_coweight(i).iter().enumerate() {
                out.0[k] -= (c * det).to_integer() as i32;
            }
        }
        out
    }

    /// Closed formula for `σ_P^{π_P(r_θ)} * σ_P^w` (non-equivariant).
    pub fn highest_root_product(&self, w: &WeylElt) -> Result<QHClass> {
        self.require_proper()?;
        let rs = self.rs;
        let theta = rs.theta();
        let tv = rs.theta_vee();
        let r_theta = rs.reflection(&theta)?;
        let mut out = QHClass::zero();
        let hits = rs.positive_roots().iter().any(|a| !self.in_rp(a) && w.act_root(a) == theta);
        if hits {
            let q = self.eta(&(tv - rs.act_coroot_inv(w, &tv)));
            out.add_term((self.pi_finite(&r_theta.mul(w)), q), Scalar::one());
        }
        for i in 1..=rs.rank() {
            let riw = rs.simple_reflection(i).mul(w);
            if rs.weyl_length(&riw) < rs.weyl_length(w) {
                out.add_term((riw, self.eta(&tv)), Scalar::from_int(rs.comarks()[i]));
            }
        }
        Ok(out)
    }

    /// The same product through `ξ_{r_0} ξ_{w t_λ}` and `Ψ_P`.
    pub fn highest_root_product_affine(&self, w: &WeylElt) -> Result<QHClass> {
        self.require_proper()?;
        let rs = self.rs;
        let lam = self.parabolic_translation();
        let x = self.lift(w, &lam)?;
        let img = self.psi_p(&rs.pieri_r0(&LinComb::basis(x)))?;
        let shift = self.eta(&(rs.theta_vee() - lam));
        Ok(img.iter().map(|((u, q), c)| ((*u, *q + shift), c.clone())).collect())
    }

    fn cominuscule_node(&self) -> Result<usize> {
        let comp = self.complement();
        if comp.len() != 1 {
            return Err(Error::Precondition("P must be maximal".into()));
        }
        let j = comp[0];
        if self.rs.marks()[j] != 1 {
            return Err(Error::Precondition(format!("node {j} is not cominuscule")));
        }
        Ok(j)
    }

    /// `ϑ(y) = τ_j(y)^*`.
    pub fn theta_cominuscule(&self, y: &WeylElt) -> Result<AffineElt> {
        let rs = self.rs;
        let j = self.cominuscule_node()?;
        if !self.is_min_coset(y) {
            return Err(Error::Precondition("element is not in W^P".into()));
        }
        let x = rs.star().act(rs, &rs.tau(j)?.act(rs, &rs.aff_finite(*y)));
        if !rs.is_grassmannian(&x) || !self.in_wpaff(&x) {
            return Err(Error::Invariant("ϑ(y) left W_af^- ∩ (W^P)_af".into()));
        }
        if self.pi_finite(&x.w) != self.pi_finite(&self.w_p.mul(y)) {
            return Err(Error::Invariant("finite part of ϑ(y) has the wrong W^P projection".into()));
        }
        Ok(x)
    }

    /// `δ(w)`: occurrences of `r_j` in a reduced word.
    pub fn delta(&self, w: &WeylElt) -> Result<i32> {
        let j = self.cominuscule_node()?;
        Ok(self.rs.weyl_reduced_word(w).iter().filter(|&&i| i == j).count() as i32)
    }

    /// `q ↦ q^{-1}`, `σ_P^w ↦ q^{−δ(w)} σ_P^{π_P(w_P w)}` (type A, where `ζ ≡ 1`).
    pub fn strange_duality(&self, c: &QHClass) -> Result<QHClass> {
        self.rs.require_type_a()?;
        let j = self.cominuscule_node()?;
        let mut out = QHClass::zero();
        for ((w, q), v) in c.iter() {
            let d = self.delta(w)?;
            let q2 = -*q - self.rs.simple_coroot(j).scale(d);
            out.add_term((self.pi_finite(&self.w_p.mul(w)), q2), v.clone());
        }
        Ok(out)
    }

    /// `Ψ(ξ_x) = σ_P^y` when `x = ϑ(y) π_P(t_λ)`, else zero.
    pub fn lm_map(&self, x: &AffineElt) -> Result<Option<WeylElt>> {
        let rs = self.rs;
        rs.require_type_a()?;
        if !rs.is_grassmannian(x) {
            return Err(Error::Precondition("input must be Grassmannian".into()));
        }
        let mut found = None;
        for y in self.coset_reps() {
            let th = self.theta_cominuscule(&y)?;
            let z = rs.aff_mul(&rs.aff_inv(&th), x);
            if self.pi_p_translation(&z.t)? == z {
                if found.is_some() {
                    return Err(Error::Invariant("two ϑ-factorizations".into()));
                }
                found = Some(y);
            }
        }
        Ok(found)
    }

    /// The same map as strange duality after `Ψ_P`, at `q = 1`.
    pub fn lm_map_via_duality(&self, x: &AffineElt) -> Result<Option<WeylElt>> {
        Ok(match self.psi_p_term(x)? {
            None => None,
            Some((u, q)) => {
                let img = self.strange_duality(&QHClass::basis((u, q)))?;
                img.support().first().map(|k| k.0)
            }
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "type": self.rs.label(),
            "ip": self.ip,
            "components": self.components,
            "w_p": self.rs.format_word(&self.w_p),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elt(rs: &RootSystem, word: &[usize], t: CorootVec) -> AffineElt {
        AffineElt { w: rs.weyl_from_word(word).unwrap(), t }
    }

    #[test]
    fn projections_of_translations() {
        let a3 = RootSystem::build("A3").unwrap();
        let tv = a3.theta_vee();
        let p = ParabolicData::new(&a3, &[2, 3]).unwrap();
        let got = p.pi_p(&a3.aff_translation(-a3.simple_coroot(1))).unwrap();
        assert_eq!(got, elt(&a3, &[2, 3], -tv));
        let p = ParabolicData::new(&a3, &[1, 3]).unwrap();
        assert_eq!(p.pi_p(&a3.aff_translation(-a3.simple_coroot(2))).unwrap(), elt(&a3, &[1, 3], -tv));

        let c3 = RootSystem::build("C3").unwrap();
        let p = ParabolicData::new(&c3, &[2, 3]).unwrap();
        let d = p.translation_projection(&-c3.simple_coroot(1)).unwrap();
        assert_eq!(d.special, vec![None]);
        assert_eq!(d.result, c3.aff_translation(-c3.theta_vee()));

        let b3 = RootSystem::build("B3").unwrap();
        let p = ParabolicData::new(&b3, &[2, 3]).unwrap();
        assert_eq!(p.pi_p(&b3.aff_translation(-b3.simple_coroot(1))).unwrap(), elt(&b3, &[2, 3, 2], -b3.theta_vee()));
    }

    #[test]
    fn wpaff_membership() {
        let a3 = RootSystem::build("A3").unwrap();
        let p = ParabolicData::new(&a3, &[2, 3]).unwrap();
        assert!(p.in_wpaff(&a3.aff_identity()));
        assert!(p.in_wpaff(&a3.aff_simple(0)));
        assert!(!p.in_wpaff(&a3.aff_simple(2)));
        assert!(!p.in_jp(&a3.aff_identity()).unwrap());
    }

    #[test]
    fn diagram_automorphisms_type_a() {
        let a3 = RootSystem::build("A3").unwrap();
        assert!(a3.tau(0).unwrap().is_identity());
        assert_eq!(a3.tau(2).unwrap(), DiagramAut(vec![2, 3, 0, 1]));
        assert_eq!(a3.star(), DiagramAut(vec![0, 3, 2, 1]));
        assert!(a3.tau(1).is_ok());
        let b3 = RootSystem::build("B3").unwrap();
        assert!(b3.tau(2).is_err());
        assert!(b3.tau(1).is_ok());
    }

    #[test]
    fn sl7_example() {
        let a6 = RootSystem::build("A6").unwrap();
        let p = ParabolicData::maximal(&a6, 4).unwrap();
        let y = a6.weyl_from_word(&[4, 5, 2, 3, 4]).unwrap();
        assert_eq!(a6.one_line(&y).unwrap(), vec![1, 3, 5, 6, 2, 4, 7]);
        let th = p.theta_cominuscule(&y).unwrap();
        assert_eq!(a6.aff_reduced_word(&th), a6.aff_reduced_word(&a6.aff_from_word(&[0, 6, 2, 1, 0]).unwrap()));
        assert_eq!(th, a6.aff_from_word(&[0, 6, 2, 1, 0]).unwrap());
        assert_eq!(a6.one_line(&th.w).unwrap(), vec![6, 7, 2, 4, 5, 1, 3]);
        assert_eq!(a6.one_line(&p.pi_finite(&th.w)).unwrap(), vec![2, 4, 6, 7, 1, 3, 5]);
        let lam = th.t;
        let want = elt(&a6, &[2, 3, 1, 2, 6, 5], lam);
        assert_eq!(p.pi_p_translation(&lam).unwrap(), want);
        let part = KBoundedPartition::new(&[2, 2, 1], 6).unwrap();
        assert_eq!(a6.partition_to_wp(4, &part).unwrap(), y);
        let lam_part = KBoundedPartition::new(&[3, 2], 6).unwrap();
        assert_eq!(a6.partition_to_affine(&lam_part).unwrap(), th);
        assert_eq!(lam_part.transpose(), part);
    }

    #[test]
    fn generators() {
        let a3 = RootSystem::build("A3").unwrap();
        let p = ParabolicData::maximal(&a3, 2).unwrap();
        let c2 = c_generator(&a3, 2, 2).unwrap();
        assert_eq!(p.theta_cominuscule(&c2).unwrap(), a3.h_generator(2).unwrap());
        assert_eq!(a3.h_generator(2).unwrap(), a3.aff_from_word(&[1, 0]).unwrap());
        assert_eq!(p.lm_map(&a3.h_generator(3).unwrap()).unwrap(), None);
        let h1 = a3.h_generator(1).unwrap();
        assert_eq!(p.lm_map(&h1).unwrap(), p.lm_map_via_duality(&h1).unwrap());
    }
}
