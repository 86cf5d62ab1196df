//! Equivariant quantum cohomology of `G/B`: the Chevalley operator, quantum
//! Schubert polynomials and full products.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::cartan::{CorootVec, RootSystem, WeightVec};
use crate::coeffring::{format_q, LinComb, Scalar};
use crate::error::{Error, Result};
use crate::linalg::solve_scaled;
use crate::parabolic::ParabolicData;
use crate::qbruhat::{EdgeKind, QBGraph};
use crate::weyl::{format_word, WeylElt};

/// Basis key `q_λ σ^w`.
pub type QKey = (WeylElt, CorootVec);
pub type QHClass = LinComb<QKey>;

/// One term `a · q_λ · ω_{i_1}⋯ω_{i_k}` of a quantum Schubert polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSTerm {
    pub coeff: Scalar,
    pub q: CorootVec,
    pub word: Vec<usize>,
}

/// `(1/D) Σ terms`, representing `σ^w` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSchubertPoly {
    pub w: WeylElt,
    pub terms: Vec<QSTerm>,
    pub denominator: BigInt,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Specialization {
    QToOne,
    AlphaToZero,
    Both,
}

type PolyKey = (Vec<usize>, CorootVec);

/// A polynomial in the `ω_i` with a common integer denominator.
#[derive(Clone, Debug)]
struct RatPoly {
    num: LinComb<PolyKey>,
    den: BigInt,
}

impl RatPoly {
    fn one() -> Self {
        RatPoly { num: LinComb::basis((Vec::new(), CorootVec::ZERO)), den: BigInt::one() }
    }

    fn zero() -> Self {
        RatPoly { num: LinComb::zero(), den: BigInt::one() }
    }

    fn rescaled(&self, den: &BigInt) -> LinComb<PolyKey> {
        self.num.map_coeffs(|c| c.scale_int(&(den / &self.den)))
    }

    /// `self += c · o`.
    fn add_scaled(&mut self, o: &RatPoly, c: &Scalar) {
        let den = self.den.lcm(&o.den);
        let mut num = self.rescaled(&den);
        num.add_scaled(&o.rescaled(&den), c);
        *self = RatPoly { num, den };
    }

    fn times_omega(&self, i: usize) -> RatPoly {
        let num = self
            .num
            .iter()
            .map(|((word, q), c)| {
                let mut w = word.clone();
                let at = w.partition_point(|&x| x <= i);
                w.insert(at, i);
                ((w, *q), c.clone())
            })
            .collect();
        RatPoly { num, den: self.den.clone() }
    }

    fn shifted(&self, by: &CorootVec) -> RatPoly {
        let num = self.num.iter().map(|((w, q), c)| ((w.clone(), *q + *by), c.clone())).collect();
        RatPoly { num, den: self.den.clone() }
    }

    fn reduce(&mut self) {
        let mut g = self.den.clone();
        for (_, c) in self.num.iter() {
            for (_, k) in c.terms() {
                g = g.gcd(k);
            }
        }
        if !g.is_one() && !g.is_zero() {
            self.num = self.num.div_int(&g).expect("gcd divides");
            self.den = &self.den / &g;
        }
    }
}

/// The ring `QH^T(G/B)` for one root system, with caches for Schubert
/// polynomials and products.
pub struct QuantumRing<'a> {
    pub rs: &'a RootSystem,
    pub graph: QBGraph<'a>,
    polys: Vec<QSchubertPoly>,
    products: Mutex<HashMap<(usize, usize), QHClass>>,
}

impl<'a> QuantumRing<'a> {
    pub fn new(rs: &'a RootSystem) -> Result<Self> {
        let graph = QBGraph::build(rs);
        let mut ring = QuantumRing { rs, graph, polys: Vec::new(), products: Mutex::new(HashMap::new()) };
        ring.polys = ring.compute_polys()?;
        Ok(ring)
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.graph.vertices
    }

    pub fn schubert(&self, w: &WeylElt) -> QHClass {
        QHClass::basis((*w, CorootVec::ZERO))
    }

    /// `σ^{r_i} * σ` by the quantum equivariant Chevalley formula.
    pub fn chevalley(&self, i: usize, sigma: &QHClass) -> QHClass {
        let rs = self.rs;
        let om = rs.fundamental_weight(i);
        let mut out = QHClass::zero();
        for ((w, q), c) in sigma.iter() {
            out.add_term((*w, *q), c * &Scalar::weight_diff(rs, &om, w));
            for e in &self.graph.out[self.graph.index_of(w)] {
                let vee = rs.positive_coroots()[e.root];
                let k = vee.at(i);
                if k == 0 {
                    continue;
                }
                let u = self.graph.vertices[e.to];
                let key = match e.kind {
                    EdgeKind::Bruhat => (u, *q),
                    EdgeKind::Quantum => (u, *q + vee),
                };
                out.add_term(key, c.scale_int(&BigInt::from(k)));
            }
        }
        out
    }

    /// Multiplication by `[μ] = Σ μ_i [ω_i]`.
    pub fn chevalley_weight(&self, mu: &WeightVec, sigma: &QHClass) -> QHClass {
        let mut out = QHClass::zero();
        for i in 1..=self.rs.rank() {
            if mu.at(i) != 0 {
                out.add_scaled(&self.chevalley(i, sigma), &Scalar::from_int(mu.at(i) as i64));
            }
        }
        out
    }

    fn compute_polys(&self) -> Result<Vec<QSchubertPoly>> {
        let rs = self.rs;
        let g = &self.graph;
        let n = g.vertices.len();
        let lens: Vec<usize> = g.vertices.iter().map(|w| rs.weyl_length(w)).collect();
        let mut rat: Vec<Option<RatPoly>> = vec![None; n];
        rat[0] = Some(RatPoly::one());
        let top = lens.iter().copied().max().unwrap_or(0);
        for d in 1..=top {
            let below: Vec<usize> = (0..n).filter(|&k| lens[k] == d - 1).collect();
            let level: Vec<usize> = (0..n).filter(|&k| lens[k] == d).collect();
            let col = |k: usize| level.iter().position(|&x| x == k).expect("level member");
            let mut rows: Vec<RatPoly> = Vec::new();
            let mut monk: Vec<Vec<i64>> = Vec::new();
            for &v in &below {
                let pv = rat[v].as_ref().expect("lower level done");
                for i in 1..=rs.rank() {
                    let mut row = pv.times_omega(i);
                    let wd = Scalar::weight_diff(rs, &rs.fundamental_weight(i), &g.vertices[v]);
                    row.add_scaled(pv, &-wd);
                    let mut m = vec![0i64; level.len()];
                    for e in &g.out[v] {
                        let vee = rs.positive_coroots()[e.root];
                        let k = vee.at(i) as i64;
                        if k == 0 {
                            continue;
                        }
                        match e.kind {
                            EdgeKind::Bruhat => m[col(e.to)] += k,
                            EdgeKind::Quantum => {
                                let pu = rat[e.to].as_ref().expect("quantum edges go down");
                                row.add_scaled(&pu.shifted(&vee), &Scalar::from_int(-k));
                            }
                        }
                    }
                    rows.push(row);
                    monk.push(m);
                }
            }
            let mt: Vec<Vec<i64>> = (0..level.len()).map(|c| monk.iter().map(|r| r[c]).collect()).collect();
            for (c, &w) in level.iter().enumerate() {
                let target: Vec<i64> = (0..level.len()).map(|k| i64::from(k == c)).collect();
                let (y, dd) = solve_scaled(&mt, &target).ok_or_else(|| {
                    Error::Invariant(format!("divisors do not reach {}", g.label(w)))
                })?;
                let mut p = RatPoly::zero();
                for (row, coef) in rows.iter().zip(&y) {
                    if !coef.is_zero() {
                        p.add_scaled(row, &Scalar::from_big(coef.clone()));
                    }
                }
                p.den *= dd;
                p.reduce();
                rat[w] = Some(p);
            }
        }
        let polys: Vec<QSchubertPoly> = rat
            .into_iter()
            .enumerate()
            .map(|(k, p)| {
                let p = p.expect("every element reached");
                QSchubertPoly {
                    w: g.vertices[k],
                    terms: p.num.iter().map(|((word, q), c)| QSTerm { coeff: c.clone(), q: *q, word: word.clone() }).collect(),
                    denominator: p.den,
                }
            })
            .collect();
        for p in &polys {
            let got = self.evaluate(p, &self.schubert(&rs.weyl_identity()))?;
            if got != self.schubert(&p.w) {
                return Err(Error::Invariant(format!("Schubert polynomial for {} fails to round-trip", g.label(g.index_of(&p.w)))));
            }
        }
        Ok(polys)
    }

    pub fn schubert_poly(&self, w: &WeylElt) -> &QSchubertPoly {
        &self.polys[self.graph.index_of(w)]
    }

    /// Evaluates a polynomial in the `[ω_i]` on `σ`: `(1/D) Σ a q_λ [ω_{i_1}]⋯[ω_{i_k}] * σ`.
    pub fn evaluate(&self, p: &QSchubertPoly, sigma: &QHClass) -> Result<QHClass> {
        let mut memo: HashMap<Vec<usize>, QHClass> = HashMap::new();
        memo.insert(Vec::new(), sigma.clone());
        let mut total = QHClass::zero();
        for t in &p.terms {
            for k in 1..=t.word.len() {
                if !memo.contains_key(&t.word[..k]) {
                    let next = self.chevalley(t.word[k - 1], &memo[&t.word[..k - 1]]);
                    memo.insert(t.word[..k].to_vec(), next);
                }
            }
            let img = &memo[&t.word];
            for ((w, q), c) in img.iter() {
                total.add_term((*w, *q + t.q), &t.coeff * c);
            }
        }
        total.div_int(&p.denominator)
    }

    /// `σ^u * σ^v`.
    pub fn product(&self, u: &WeylElt, v: &WeylElt) -> QHClass {
        let key = (self.graph.index_of(u), self.graph.index_of(v));
        if let Some(p) = self.products.lock().expect("cache").get(&key) {
            return p.clone();
        }
        let p = self.evaluate(self.schubert_poly(u), &self.schubert(v)).expect("exact by construction");
        self.products.lock().expect("cache").insert(key, p.clone());
        p
    }

    /// Product of two arbitrary classes, extended `S[q]`-bilinearly.
    pub fn class_product(&self, a: &QHClass, b: &QHClass) -> QHClass {
        let mut out = QHClass::zero();
        for ((u, qa), ca) in a.iter() {
            for ((v, qb), cb) in b.iter() {
                let c = ca * cb;
                for ((w, q), k) in self.product(u, v).iter() {
                    out.add_term((*w, *q + *qa + *qb), &c * k);
                }
            }
        }
        out
    }

    /// `c_{u,v}^{w,λ}`: coefficient of `q_λ σ^w` in `σ^u * σ^v`.
    pub fn gw_coefficient(&self, u: &WeylElt, v: &WeylElt, w: &WeylElt, lambda: &CorootVec) -> Scalar {
        self.product(u, v).get(&(*w, *lambda))
    }

    /// `⟨λ, 2ρ⟩`, the cohomological degree of `q_λ`.
    pub fn q_degree(&self, lambda: &CorootVec) -> i64 {
        self.rs.pair(lambda, &self.rs.rho()) * 2
    }

    pub fn label(&self, w: &WeylElt) -> String {
        self.graph.label(self.graph.index_of(w))
    }

    pub fn poly_to_json(&self, p: &QSchubertPoly) -> Value {
        let r = self.rs.rank();
        json!({
            "w": self.label(&p.w),
            "denominator": p.denominator.to_string(),
            "terms": p.terms.iter().map(|t| json!({
                "coefficient": t.coeff.to_text(),
                "q": format_q(&t.q, r),
                "word": format_word(&t.word, "w"),
            })).collect::<Vec<_>>(),
        })
    }

    /// `{"(s1,q1)": "a1", …}`, keys ordered by length, word and q-exponent.
    pub fn class_to_json(&self, c: &QHClass) -> Value {
        class_to_json(self.rs, c)
    }
}

/// Data of the lift of a parabolic quantum parameter to `G/B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PwLift {
    pub lambda_b: CorootVec,
    pub ip_prime: Vec<usize>,
    /// `w_P w_{P'}`.
    pub v: WeylElt,
}

impl ParabolicData<'_> {
    /// `σ_P^{r_i} * σ` in `QH^T(G/P)` by the parabolic Chevalley formula.
    pub fn parabolic_chevalley(&self, i: usize, sigma: &QHClass) -> Result<QHClass> {
        let rs = self.rs;
        if i == 0 || i > rs.rank() || self.ip.contains(&i) {
            return Err(Error::Precondition(format!("node {i} must lie outside I_P")));
        }
        let om = rs.fundamental_weight(i);
        let mut out = QHClass::zero();
        for ((w, q), c) in sigma.iter() {
            if !self.is_min_coset(w) {
                return Err(Error::Precondition("class is not supported on W^P".into()));
            }
            out.add_term((*w, *q), c * &Scalar::weight_diff(rs, &om, w));
            let lw = rs.weyl_length(w) as i64;
            for (a, vee) in rs.positive_roots().iter().zip(rs.positive_coroots()) {
                let k = vee.at(i);
                if k == 0 || self.in_rp(a) {
                    continue;
                }
                let wr = w.mul(&rs.reflection(a)?);
                let lwr = rs.weyl_length(&wr) as i64;
                let c = c.scale_int(&BigInt::from(k));
                if lwr == lw + 1 && self.is_min_coset(&wr) {
                    out.add_term((wr, *q), c.clone());
                }
                let two_rho = rs.pair(vee, &rs.rho()) * 2;
                let two_rho_p = rs.pair_root(vee, &self.two_rho_p);
                let pw = self.pi_finite(&wr);
                if rs.weyl_length(&pw) as i64 == lw + 1 - two_rho + two_rho_p && lwr == lw + 1 - two_rho {
                    out.add_term((pw, *q + self.eta(vee)), c);
                }
            }
        }
        Ok(out)
    }

    /// `λ_B` and `P'` with `c^{z,λ_P,P}_{x,y} = c^{z w_P w_{P'}, λ_B}_{x,y}`.
    pub fn pw_lift(&self, lambda_p: &CorootVec) -> Result<PwLift> {
        let rs = self.rs;
        let lam = self.eta(lambda_p);
        let tp = self.translation_projection(&lam)?;
        let lambda_b = lam + tp.phi;
        let ip_prime: Vec<usize> = self.ip.iter().copied().filter(|k| !tp.special.contains(&Some(*k))).collect();
        if tp.v != self.w_p.mul(&rs.longest_in(&ip_prime)) {
            return Err(Error::Invariant("v differs from w_P w_P'".into()));
        }
        if self.rp_plus.iter().any(|a| !matches!(rs.pair_root(&lambda_b, a), 0 | -1)) {
            return Err(Error::Invariant("λ_B pairs outside {0, -1} with R_P^+".into()));
        }
        Ok(PwLift { lambda_b, ip_prime, v: tp.v })
    }
}

pub fn class_key(rs: &RootSystem, w: &WeylElt, q: &CorootVec) -> String {
    let word = format_word(&rs.weyl_reduced_word(w), "s").replace(' ', "");
    let qs = if q.is_zero() { String::new() } else { format_q(q, rs.rank()) };
    format!("({word},{qs})")
}

pub fn class_to_json(rs: &RootSystem, c: &QHClass) -> Value {
    let mut entries: Vec<((usize, Vec<usize>, Vec<i32>), String, String)> = c
        .iter()
        .map(|((w, q), v)| {
            let word = rs.weyl_reduced_word(w);
            ((word.len(), word, q.coords(rs.rank()).to_vec()), class_key(rs, w, q), v.to_text())
        })
        .collect();
    entries.sort();
    let mut m = Map::new();
    for (_, k, v) in entries {
        m.insert(k, Value::String(v));
    }
    Value::Object(m)
}

/// Evaluation homomorphisms `q → 1` and/or `α → 0`.
pub fn specialize(c: &QHClass, mode: Specialization) -> QHClass {
    let mut out = QHClass::zero();
    for ((w, q), v) in c.iter() {
        let q = if mode == Specialization::AlphaToZero { *q } else { CorootVec::ZERO };
        let v = if mode == Specialization::QToOne { v.clone() } else { v.eval_zero() };
        out.add_term((*w, q), v);
    }
    out
}

/// `φ_0` of every coefficient is a nonnegative integer.
pub fn nonequivariant_nonneg(c: &QHClass) -> bool {
    c.iter().all(|(_, v)| !v.constant_term().is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(t: &str) -> (RootSystem,) {
        (RootSystem::build(t).unwrap(),)
    }

    #[test]
    fn chevalley_examples() {
        let (a1,) = ring("A1");
        let qr = QuantumRing::new(&a1).unwrap();
        let id = a1.weyl_identity();
        let s = a1.simple_reflection(1);
        assert_eq!(qr.chevalley(1, &qr.schubert(&id)), qr.schubert(&s));
        let got = qr.chevalley(1, &qr.schubert(&s));
        let mut want = QHClass::single((s, CorootVec::ZERO), Scalar::var(1));
        want.add_term((id, a1.simple_coroot(1)), Scalar::one());
        assert_eq!(got, want);
        assert_eq!(serde_json::to_string(&qr.class_to_json(&got)).unwrap(), r#"{"(id,q1)":"1","(s1,)":"a1"}"#);

        let (a2,) = ring("A2");
        let qr2 = QuantumRing::new(&a2).unwrap();
        let s1 = a2.simple_reflection(1);
        let s2 = a2.simple_reflection(2);
        let mut want = qr2.schubert(&s1.mul(&s2));
        want.add_assign(&qr2.schubert(&s2.mul(&s1)));
        assert_eq!(qr2.chevalley(2, &qr2.schubert(&s1)), want);
    }

    #[test]
    fn poly_shapes() {
        let (a2,) = ring("A2");
        let qr = QuantumRing::new(&a2).unwrap();
        let p = qr.schubert_poly(&a2.simple_reflection(1));
        assert_eq!(p.terms, vec![QSTerm { coeff: Scalar::one(), q: CorootVec::ZERO, word: vec![1] }]);
        let p0 = qr.schubert_poly(&a2.weyl_identity());
        assert_eq!(p0.terms.len(), 1);
        assert!(p0.terms[0].word.is_empty());
        for w in qr.elements() {
            assert_eq!(qr.schubert_poly(w).denominator, BigInt::one());
        }
    }

    #[test]
    fn a1_product() {
        let (a1,) = ring("A1");
        let qr = QuantumRing::new(&a1).unwrap();
        let s = a1.simple_reflection(1);
        let id = a1.weyl_identity();
        let p = qr.product(&s, &s);
        assert_eq!(qr.gw_coefficient(&s, &s, &id, &a1.simple_coroot(1)), Scalar::one());
        assert_eq!(qr.gw_coefficient(&s, &s, &s, &CorootVec::ZERO), Scalar::var(1));
        let spec = specialize(&p, Specialization::AlphaToZero);
        assert_eq!(spec, QHClass::single((id, a1.simple_coroot(1)), Scalar::one()));
        assert_eq!(specialize(&spec, Specialization::AlphaToZero), spec);
        assert_eq!(qr.product(&id, &s), qr.schubert(&s));
    }

    #[test]
    fn nonintegral_generation_uses_denominators() {
        let (g2,) = ring("G2");
        let qr = QuantumRing::new(&g2).unwrap();
        assert!(qr.elements().iter().any(|w| qr.schubert_poly(w).denominator > BigInt::one()));
    }

    #[test]
    fn parabolic_chevalley_and_lift() {
        let (a3,) = ring("A3");
        let p = ParabolicData::new(&a3, &[1, 3]).unwrap();
        let id = a3.weyl_identity();
        let s2 = a3.simple_reflection(2);
        let got = p.parabolic_chevalley(2, &QHClass::basis((id, CorootVec::ZERO))).unwrap();
        assert_eq!(got, QHClass::basis((s2, CorootVec::ZERO)));
        assert!(p.parabolic_chevalley(1, &got).is_err());

        let p = ParabolicData::new(&a3, &[2, 3]).unwrap();
        let lift = p.pw_lift(&-a3.simple_coroot(1)).unwrap();
        assert_eq!(lift.lambda_b, -a3.theta_vee());
        assert_eq!(lift.ip_prime, vec![2]);
        assert_eq!(lift.v, a3.weyl_from_word(&[2, 3]).unwrap());
        let zero = p.pw_lift(&CorootVec::ZERO).unwrap();
        assert_eq!((zero.lambda_b, zero.ip_prime), (CorootVec::ZERO, vec![2, 3]));
    }
}
