//! Coefficients: `S = Z[α_1..α_r]`, quantum monomials `q_λ`, and free
//! `S`-modules over an ordered basis (group algebra, nilHecke ring, homology).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cartan::{CorootVec, RootSystem, RootVec, WeightVec, MAX_RANK};
use crate::error::{Error, Result};
use crate::weyl::WeylElt;

/// Exponent vector of a monomial in the simple roots.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Mono(pub [u16; MAX_RANK]);

impl Mono {
    pub const ONE: Mono = Mono([0; MAX_RANK]);

    pub fn var(i: usize) -> Mono {
        let mut m = Mono::ONE;
        m.0[i - 1] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(o.0) {
            *a += b;
        }
        m
    }

    fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0).all(|(a, b)| *a <= b)
    }

    fn div(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for (a, b) in m.0.iter_mut().zip(o.0) {
            *a -= b;
        }
        m
    }

    /// Lex order with `a1 > a2 > …`.
    fn lex_key(&self) -> [u16; MAX_RANK] {
        self.0
    }
}

/// A polynomial in the simple roots with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    terms: BTreeMap<Mono, BigInt>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Scalar::from_big(BigInt::from(c))
    }

    pub fn from_big(c: BigInt) -> Self {
        let mut s = Scalar::zero();
        if !c.is_zero() {
            s.terms.insert(Mono::ONE, c);
        }
        s
    }

    /// The variable `α_i`, `i` 1-based.
    pub fn var(i: usize) -> Self {
        Scalar::monomial(Mono::var(i), BigInt::one())
    }

    pub fn monomial(m: Mono, c: BigInt) -> Self {
        let mut s = Scalar::zero();
        if !c.is_zero() {
            s.terms.insert(m, c);
        }
        s
    }

    /// The linear form `Σ c_i α_i`.
    pub fn linear(beta: &RootVec) -> Self {
        let mut s = Scalar::zero();
        for i in 0..MAX_RANK {
            if beta.0[i] != 0 {
                s.terms.insert(Mono::var(i + 1), BigInt::from(beta.0[i]));
            }
        }
        s
    }

    /// The integral weight difference `μ − w·μ` as a linear form.
    pub fn weight_diff(rs: &RootSystem, mu: &WeightVec, w: &WeylElt) -> Self {
        Scalar::linear(&rs.weight_diff(mu, w))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&Mono::ONE).cloned().unwrap_or_default()
    }

    /// Evaluation at `α = 0`.
    pub fn eval_zero(&self) -> Scalar {
        Scalar::from_big(self.constant_term())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() as i64 == d)
    }

    /// All coefficients nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale_int(&self, k: &BigInt) -> Scalar {
        if k.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Exact division by an integer.
    pub fn div_int(&self, d: &BigInt) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NonzeroRemainder);
            }
            out.terms.insert(*m, q);
        }
        Ok(out)
    }

    /// Exact division by a nonzero linear form, failing on a remainder.
    pub fn exact_divide_by_linear(&self, l: &Scalar) -> Result<Scalar> {
        if l.is_zero() || !l.terms.keys().all(|m| m.degree() == 1) {
            return Err(Error::Precondition("divisor must be a nonzero linear form".into()));
        }
        let (lead_m, lead_c) = l.terms.iter().max_by_key(|(m, _)| m.lex_key()).expect("nonzero");
        let (lead_m, lead_c) = (*lead_m, lead_c.clone());
        let mut rem = self.clone();
        let mut quo = Scalar::zero();
        while let Some((m, c)) = rem.terms.iter().max_by_key(|(m, _)| m.lex_key()).map(|(m, c)| (*m, c.clone())) {
            if !lead_m.divides(&m) {
                return Err(Error::NonzeroRemainder);
            }
            let (q, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::NonzeroRemainder);
            }
            let qm = m.div(&lead_m);
            for (lm, lc) in &l.terms {
                rem.add_term(qm.mul(lm), -(&q * lc));
            }
            quo.add_term(qm, q);
        }
        Ok(quo)
    }

    /// Canonical text form, e.g. `a1^2*a2 + 3*a2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut ts: Vec<(&Mono, &BigInt)> = self.terms.iter().collect();
        ts.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.lex_key().cmp(&a.0.lex_key())));
        let mut out = String::new();
        for (k, (m, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars = format_mono(&m.0, "a");
            match (vars.is_empty(), abs.is_one()) {
                (true, _) => out.push_str(&abs.to_string()),
                (false, true) => out.push_str(&vars),
                (false, false) => out.push_str(&format!("{abs}*{vars}")),
            }
        }
        out
    }
}

fn format_mono<T: Copy + Into<i64>>(e: &[T], prefix: &str) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        let x: i64 = x.into();
        match x {
            0 => {}
            1 => parts.push(format!("{prefix}{}", i + 1)),
            _ => parts.push(format!("{prefix}{}^{x}", i + 1)),
        }
    }
    parts.join("*")
}

/// `q_λ` rendered as `q1^2*q2`; `1` for `λ = 0`.
pub fn format_q(lambda: &CorootVec, r: usize) -> String {
    let s = format_mono(lambda.coords(r), "q");
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.to_text())
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut s = self.clone();
        s += o;
        s
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, o: Scalar) -> Scalar {
        self += &o;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        for (m, c) in &o.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut s = self.clone();
        s -= o;
        s
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, o: Scalar) -> Scalar {
        self -= &o;
        self
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        let mut s = Scalar::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                s.add_term(m1.mul(m2), c1 * c2);
            }
        }
        s
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

/// A finitely supported `S`-linear combination over an ordered basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: Scalar) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn basis(k: K) -> Self {
        Self::single(k, Scalar::one())
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e += &c;
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Self, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &o.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (k, v) in &o.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut s = self.clone();
        for (k, v) in &o.terms {
            s.add_term(k.clone(), -v);
        }
        s
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut s = Self::zero();
        s.add_scaled(self, c);
        s
    }

    pub fn get(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<K> {
        self.terms.keys().cloned().collect()
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut s = Self::zero();
        for (k, v) in &self.terms {
            s.add_term(k.clone(), f(v));
        }
        s
    }

    pub fn filter(&self, f: impl Fn(&K) -> bool) -> Self {
        Self { terms: self.terms.iter().filter(|(k, _)| f(k)).map(|(k, v)| (k.clone(), v.clone())).collect() }
    }

    pub fn div_int(&self, d: &BigInt) -> Result<Self> {
        let mut s = Self::zero();
        for (k, v) in &self.terms {
            s.add_term(k.clone(), v.div_int(d)?);
        }
        Ok(s)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (k, v) in iter {
            s.add_term(k, v);
        }
        s
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, v)| (k, v.to_text()))).finish()
    }
}

/// Elements of the group algebra `S[W_af]`.
pub type GroupAlgebraElt = LinComb<crate::weyl::AffineElt>;

/// `Σ_{w∈W} t_{wλ}`.
pub fn orbit_sum(rs: &RootSystem, lambda: &CorootVec) -> GroupAlgebraElt {
    rs.weyl_elements().iter().map(|w| (rs.aff_translation(rs.act_coroot(w, lambda)), Scalar::one())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: usize) -> Scalar {
        Scalar::var(i)
    }

    #[test]
    fn products_and_printing() {
        let p = &(&a(1) + &a(2)) * &a(1);
        assert_eq!(p.to_text(), "a1^2 + a1*a2");
        let q = &(&(&a(1) * &a(1)) * &a(2)) + &Scalar::linear(&RootVec::from_slice(&[0, 3]));
        assert_eq!(q.to_text(), "a1^2*a2 + 3*a2");
        assert_eq!((-a(2) + a(1)).to_text(), "a1 - a2");
        assert_eq!(Scalar::zero().to_text(), "0");
    }

    #[test]
    fn division() {
        let num = &(&a(1) * &a(1)) - &(&a(2) * &a(2));
        let den = &a(1) - &a(2);
        assert_eq!(num.exact_divide_by_linear(&den).unwrap(), &a(1) + &a(2));
        assert_eq!(a(1).exact_divide_by_linear(&a(2)), Err(Error::NonzeroRemainder));
    }

    #[test]
    fn weight_differences() {
        let a1 = RootSystem::build("A1").unwrap();
        let s = a1.simple_reflection(1);
        assert_eq!(Scalar::weight_diff(&a1, &a1.fundamental_weight(1), &s), a(1));
        assert!(Scalar::weight_diff(&a1, &a1.fundamental_weight(1), &a1.weyl_identity()).is_zero());
        let a2 = RootSystem::build("A2").unwrap();
        let rt = a2.reflection(&a2.theta()).unwrap();
        assert_eq!(Scalar::weight_diff(&a2, &a2.fundamental_weight(1), &rt), &a(1) + &a(2));
    }

    #[test]
    fn orbit_sums() {
        let a2 = RootSystem::build("A2").unwrap();
        let lam = CorootVec::from_slice(&[-3, -5]);
        let f = orbit_sum(&a2, &lam);
        assert_eq!(f.len(), 6);
        assert_eq!(f.scale(&a(1)).support(), f.support());
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn q_monomials() {
        assert_eq!(format_q(&CorootVec::from_slice(&[2, 1]), 2), "q1^2*q2");
        assert_eq!(format_q(&CorootVec::ZERO, 2), "1");
    }
}
