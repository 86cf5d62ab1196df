//! Finite root systems: Cartan data, roots, coroots, weights and pairings.
//!
//! Finite Dynkin nodes are labelled `1..=r` as in the usual Bourbaki
//! numbering; label `0` is reserved for the affine node.  Lattice vectors
//! store their coordinates in a fixed array whose unused tail is zero.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 8;

macro_rules! lattice_vec {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(pub [i32; MAX_RANK]);

        impl $name {
            pub const ZERO: Self = Self([0; MAX_RANK]);

            /// Basis vector of the 1-based node `i`.
            pub fn basis(i: usize) -> Self {
                let mut v = Self::ZERO;
                v.0[i - 1] = 1;
                v
            }

            pub fn from_slice(c: &[i32]) -> Self {
                let mut v = Self::ZERO;
                v.0[..c.len()].copy_from_slice(c);
                v
            }

            /// Coefficient of the 1-based node `i`.
            pub fn at(&self, i: usize) -> i32 {
                self.0[i - 1]
            }

            pub fn coords(&self, r: usize) -> &[i32] {
                &self.0[..r]
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn is_nonneg(&self) -> bool {
                self.0.iter().all(|&c| c >= 0)
            }

            pub fn scale(mut self, k: i32) -> Self {
                for c in self.0.iter_mut() {
                    *c *= k;
                }
                self
            }

            pub fn coord_sum(&self) -> i64 {
                self.0.iter().map(|&c| c as i64).sum()
            }

            /// Comma separated coordinates, as used on the command line.
            pub fn to_csv(&self, r: usize) -> String {
                self.coords(r).iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            }
        }

        impl Add for $name {
            type Output = Self;
            fn add(mut self, o: Self) -> Self {
                for k in 0..MAX_RANK {
                    self.0[k] += o.0[k];
                }
                self
            }
        }

        impl Sub for $name {
            type Output = Self;
            fn sub(mut self, o: Self) -> Self {
                for k in 0..MAX_RANK {
                    self.0[k] -= o.0[k];
                }
                self
            }
        }

        impl Neg for $name {
            type Output = Self;
            fn neg(self) -> Self {
                self.scale(-1)
            }
        }

        impl AddAssign for $name {
            fn add_assign(&mut self, o: Self) {
                *self = *self + o;
            }
        }

        impl SubAssign for $name {
            fn sub_assign(&mut self, o: Self) {
                *self = *self - o;
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let n = self.0.iter().rposition(|&c| c != 0).map_or(1, |p| p + 1);
                write!(f, "{}{:?}", stringify!($name), &self.0[..n])
            }
        }
    };
}

lattice_vec!(
    /// Integer vector in the simple-root basis (elements of Q).
    RootVec
);
lattice_vec!(
    /// Integer vector in the simple-coroot basis (elements of Q^∨).
    CorootVec
);
lattice_vec!(
    /// Integer vector in the fundamental-weight basis (elements of P).
    WeightVec
);

impl RootVec {
    pub fn height(&self) -> i64 {
        self.coord_sum()
    }

    /// Sign of a root: roots have all coordinates of one sign.
    pub fn is_positive(&self) -> bool {
        match self.0.iter().find(|&&c| c != 0) {
            Some(&c) => c > 0,
            None => false,
        }
    }
}

/// A real or imaginary affine root `α + nδ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineRoot {
    pub finite: RootVec,
    pub level: i32,
}

impl AffineRoot {
    pub fn new(finite: RootVec, level: i32) -> Self {
        AffineRoot { finite, level }
    }

    pub fn is_real(&self) -> bool {
        !self.finite.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.level > 0 || (self.level == 0 && self.finite.is_positive())
    }
}

impl Neg for AffineRoot {
    type Output = Self;
    fn neg(self) -> Self {
        AffineRoot { finite: -self.finite, level: -self.level }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn parse(label: &str) -> Result<Self> {
        let label = label.trim();
        let bad = || Error::UnsupportedType(label.to_string());
        let mut chars = label.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok || rank > MAX_RANK {
            return Err(bad());
        }
        Ok(CartanType { family, rank })
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Gram matrix of the simple roots, scaled so that every entry is an integer.
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut b = vec![vec![0i64; n]; n];
        let link = |b: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            b[i][j] = v;
            b[j][i] = v;
        };
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = 2;
        }
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    link(&mut b, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    link(&mut b, i, i + 1, -1);
                }
                b[n - 1][n - 1] = 1;
            }
            Family::C => {
                for i in 0..n - 2 {
                    link(&mut b, i, i + 1, -1);
                }
                link(&mut b, n - 2, n - 1, -2);
                b[n - 1][n - 1] = 4;
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(&mut b, i, i + 1, -1);
                }
                link(&mut b, n - 3, n - 1, -1);
            }
            Family::E => {
                link(&mut b, 0, 2, -1);
                link(&mut b, 1, 3, -1);
                for i in 2..n - 1 {
                    link(&mut b, i, i + 1, -1);
                }
            }
            Family::F => {
                b[0][0] = 4;
                b[1][1] = 4;
                link(&mut b, 0, 1, -2);
                link(&mut b, 1, 2, -2);
                link(&mut b, 2, 3, -1);
            }
            Family::G => {
                b[1][1] = 6;
                link(&mut b, 0, 1, -3);
            }
        }
        b
    }

    fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Immutable tables for a finite simple root system.
#[derive(Debug)]
pub struct RootSystem {
    pub ctype: CartanType,
    r: usize,
    /// `cartan[i][j] = ⟨α_i^∨, α_j⟩` (0-based indices).
    cartan: [[i64; MAX_RANK]; MAX_RANK],
    /// Squared lengths of the simple roots (up to a common factor).
    sq_len: [i64; MAX_RANK],
    lcm_len: i64,
    det: i64,
    /// `det · A^{-1}`, an integer matrix.
    adj: [[i64; MAX_RANK]; MAX_RANK],
    pos_roots: Vec<RootVec>,
    pos_coroots: Vec<CorootVec>,
    /// Positive roots in the fundamental-weight basis: `⟨λ, α⟩ = Σ λ_i w_i`.
    pos_roots_w: Vec<WeightVec>,
    root_index: HashMap<RootVec, usize>,
    theta: RootVec,
    theta_vee: CorootVec,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    two_rho: RootVec,
    weyl_order: u64,
    pub(crate) weyl_cache: std::sync::OnceLock<Vec<crate::weyl::WeylElt>>,
}

impl RootSystem {
    pub fn build(label: &str) -> Result<Self> {
        Ok(Self::new(CartanType::parse(label)?))
    }

    pub fn new(ctype: CartanType) -> Self {
        let r = ctype.rank;
        let gram = ctype.gram();
        let mut cartan = [[0i64; MAX_RANK]; MAX_RANK];
        let mut sq_len = [1i64; MAX_RANK];
        for i in 0..r {
            sq_len[i] = gram[i][i];
            for j in 0..r {
                debug_assert_eq!((2 * gram[i][j]) % gram[i][i], 0);
                cartan[i][j] = 2 * gram[i][j] / gram[i][i];
            }
        }
        let lcm_len = (0..r).fold(1i64, |acc, i| num_integer::lcm(acc, sq_len[i]));
        let (det, adj) = integer_inverse(&cartan, r);

        let mut rs = RootSystem {
            ctype,
            r,
            cartan,
            sq_len,
            lcm_len,
            det,
            adj,
            pos_roots: Vec::new(),
            pos_coroots: Vec::new(),
            pos_roots_w: Vec::new(),
            root_index: HashMap::new(),
            theta: RootVec::ZERO,
            theta_vee: CorootVec::ZERO,
            marks: Vec::new(),
            comarks: Vec::new(),
            two_rho: RootVec::ZERO,
            weyl_order: ctype.weyl_order(),
            weyl_cache: std::sync::OnceLock::new(),
        };
        rs.close_roots();
        rs
    }

    /// Positive roots and coroots by closure of the simple ones under simple
    /// reflections.  A coroot is transported along with its root, so
    /// `(u·α_i)^∨ = u·α_i^∨`.
    fn close_roots(&mut self) {
        let r = self.r;
        let mut found: HashMap<RootVec, CorootVec> = HashMap::new();
        let mut queue = Vec::new();
        for i in 1..=r {
            found.insert(RootVec::basis(i), CorootVec::basis(i));
            queue.push(RootVec::basis(i));
        }
        while let Some(beta) = queue.pop() {
            let cb = found[&beta];
            for i in 1..=r {
                let b2 = self.reflect_root(i, &beta);
                if b2.is_positive() && !found.contains_key(&b2) {
                    found.insert(b2, self.reflect_coroot(i, &cb));
                    queue.push(b2);
                }
            }
        }
        let mut roots: Vec<RootVec> = found.keys().copied().collect();
        roots.sort_by_key(|b| (b.height(), std::cmp::Reverse(*b)));
        self.pos_coroots = roots.iter().map(|b| found[b]).collect();
        self.pos_roots_w = roots.iter().map(|b| self.root_to_weight(b)).collect();
        self.root_index = roots.iter().enumerate().map(|(k, b)| (*b, k)).collect();
        self.two_rho = roots.iter().fold(RootVec::ZERO, |acc, b| acc + *b);
        let top = *roots.last().expect("nonempty root system");
        self.theta = top;
        self.theta_vee = found[&top];
        self.marks = std::iter::once(1).chain((1..=r).map(|i| top.at(i) as i64)).collect();
        self.comarks =
            std::iter::once(1).chain((1..=r).map(|i| self.theta_vee.at(i) as i64)).collect();
        self.pos_roots = roots;
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn label(&self) -> String {
        self.ctype.to_string()
    }

    /// `⟨α_i^∨, α_j⟩` for 1-based nodes.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.r).map(|i| self.cartan[i][..self.r].to_vec()).collect()
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.pos_roots
    }

    pub fn positive_coroots(&self) -> &[CorootVec] {
        &self.pos_coroots
    }

    pub(crate) fn positive_roots_weight_basis(&self) -> &[WeightVec] {
        &self.pos_roots_w
    }

    pub fn num_positive_roots(&self) -> usize {
        self.pos_roots.len()
    }

    /// Index of a positive root in [`positive_roots`](Self::positive_roots).
    pub fn root_index(&self, beta: &RootVec) -> Option<usize> {
        self.root_index.get(beta).copied()
    }

    pub fn is_root(&self, beta: &RootVec) -> bool {
        self.root_index.contains_key(beta) || self.root_index.contains_key(&-*beta)
    }

    pub fn theta(&self) -> RootVec {
        self.theta
    }

    pub fn theta_vee(&self) -> CorootVec {
        self.theta_vee
    }

    /// Marks `a_0..a_r`, with `δ = Σ a_i α_i`.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Comarks `a_0^∨..a_r^∨`.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn rho(&self) -> WeightVec {
        WeightVec::from_slice(&vec![1; self.r])
    }

    pub fn two_rho(&self) -> RootVec {
        self.two_rho
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        RootVec::basis(i)
    }

    pub fn simple_coroot(&self, i: usize) -> CorootVec {
        CorootVec::basis(i)
    }

    pub fn fundamental_weight(&self, i: usize) -> WeightVec {
        WeightVec::basis(i)
    }

    pub fn check_dim(&self, c: &[i32]) -> Result<()> {
        if c.len() != self.r {
            return Err(Error::Dimension { expected: self.r, got: c.len() });
        }
        Ok(())
    }

    /// `⟨λ, μ⟩` for a coroot-lattice vector and a weight.
    pub fn pair(&self, lambda: &CorootVec, mu: &WeightVec) -> i64 {
        (0..self.r).map(|i| lambda.0[i] as i64 * mu.0[i] as i64).sum()
    }

    /// `⟨λ, β⟩` for a coroot-lattice vector and a root-lattice vector.
    pub fn pair_root(&self, lambda: &CorootVec, beta: &RootVec) -> i64 {
        let mut s = 0;
        for i in 0..self.r {
            if lambda.0[i] == 0 {
                continue;
            }
            let row: i64 = (0..self.r).map(|j| self.cartan[i][j] * beta.0[j] as i64).sum();
            s += lambda.0[i] as i64 * row;
        }
        s
    }

    /// `⟨λ, α_j⟩` for `j = 1..=r`, packed 0-based.
    pub fn simple_pairings(&self, lambda: &CorootVec) -> [i64; MAX_RANK] {
        let mut out = [0i64; MAX_RANK];
        for (j, o) in out.iter_mut().enumerate().take(self.r) {
            *o = (0..self.r).map(|i| lambda.0[i] as i64 * self.cartan[i][j]).sum();
        }
        out
    }

    /// A root-lattice vector written in the fundamental-weight basis.
    pub fn root_to_weight(&self, beta: &RootVec) -> WeightVec {
        let mut out = WeightVec::ZERO;
        for i in 0..self.r {
            out.0[i] = (0..self.r).map(|j| self.cartan[i][j] * beta.0[j] as i64).sum::<i64>() as i32;
        }
        out
    }

    pub fn reflect_root(&self, i: usize, beta: &RootVec) -> RootVec {
        let c: i64 = (0..self.r).map(|j| self.cartan[i - 1][j] * beta.0[j] as i64).sum();
        let mut out = *beta;
        out.0[i - 1] -= c as i32;
        out
    }

    pub fn reflect_coroot(&self, i: usize, lambda: &CorootVec) -> CorootVec {
        let c: i64 = (0..self.r).map(|k| lambda.0[k] as i64 * self.cartan[k][i - 1]).sum();
        let mut out = *lambda;
        out.0[i - 1] -= c as i32;
        out
    }

    pub fn reflect_weight(&self, i: usize, mu: &WeightVec) -> WeightVec {
        let c = mu.0[i - 1] as i64;
        let mut out = *mu;
        for k in 0..self.r {
            out.0[k] -= (c * self.cartan[k][i - 1]) as i32;
        }
        out
    }

    /// The coroot `α^∨` of a (positive or negative) root.
    pub fn coroot_of(&self, alpha: &RootVec) -> Result<CorootVec> {
        if let Some(k) = self.root_index(alpha) {
            Ok(self.pos_coroots[k])
        } else if let Some(k) = self.root_index(&-*alpha) {
            Ok(-self.pos_coroots[k])
        } else {
            Err(Error::NotARoot(format!("{:?}", alpha)))
        }
    }

    /// Coordinates of a weight in the simple-root basis.
    pub fn weight_to_root_basis(&self, mu: &WeightVec) -> Vec<Rational64> {
        (0..self.r)
            .map(|i| {
                let num: i64 = (0..self.r).map(|j| self.adj[i][j] * mu.0[j] as i64).sum();
                Rational64::new(num, self.det)
            })
            .collect()
    }

    /// The weight as a root-lattice vector, failing unless it lies in `Q`.
    pub fn root_lattice_check(&self, mu: &WeightVec) -> Result<RootVec> {
        let mut out = RootVec::ZERO;
        for (i, q) in self.weight_to_root_basis(mu).into_iter().enumerate() {
            if !q.is_integer() {
                return Err(Error::NotInRootLattice(format!("{:?}", mu)));
            }
            out.0[i] = q.to_integer() as i32;
        }
        Ok(out)
    }

    /// `det(A) · μ` written in the simple-root basis (always integral).
    pub(crate) fn scaled_root_coords(&self, mu: &WeightVec) -> [i64; MAX_RANK] {
        let mut out = [0i64; MAX_RANK];
        for (i, o) in out.iter_mut().enumerate().take(self.r) {
            *o = (0..self.r).map(|j| self.adj[i][j] * mu.0[j] as i64).sum();
        }
        out
    }

    pub(crate) fn cartan_det(&self) -> i64 {
        self.det
    }

    pub(crate) fn sq_len(&self, i: usize) -> i64 {
        self.sq_len[i]
    }

    pub(crate) fn lcm_len(&self) -> i64 {
        self.lcm_len
    }

    /// Fundamental coweight `ω_j^∨` in the simple-coroot basis.
    pub fn fundamental_coweight(&self, j: usize) -> Vec<Rational64> {
        (0..self.r).map(|i| Rational64::new(self.adj[j - 1][i], self.det)).collect()
    }

    /// Affine Cartan matrix entry `⟨α_i^∨, α_j⟩` for `i, j ∈ 0..=r`.
    pub fn affine_cartan_entry(&self, i: usize, j: usize) -> i64 {
        match (i, j) {
            (0, 0) => 2,
            (0, j) => -self.pair_root(&self.theta_vee, &RootVec::basis(j)),
            (i, 0) => -(0..self.r).map(|k| self.cartan[i - 1][k] * self.theta.0[k] as i64).sum::<i64>(),
            (i, j) => self.cartan_entry(i, j),
        }
    }

    /// Nodes `i ∈ 0..=r` with mark `a_i = 1`.
    pub fn special_nodes(&self) -> Vec<usize> {
        (0..=self.r).filter(|&i| self.marks[i] == 1).collect()
    }

    /// Connected components of the Dynkin subdiagram on `nodes`.
    pub fn connected_components(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.r + 1];
        let mut comps = Vec::new();
        let mut sorted = nodes.to_vec();
        sorted.sort_unstable();
        for &start in &sorted {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let a = comp[k];
                for &b in &sorted {
                    if !seen[b] && self.cartan_entry(a, b) != 0 {
                        seen[b] = true;
                        comp.push(b);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn to_json(&self) -> Value {
        let r = self.r;
        json!({
            "type": self.label(),
            "rank": r,
            "cartan_matrix": self.cartan_matrix(),
            "positive_roots": self.pos_roots.iter().map(|b| b.coords(r).to_vec()).collect::<Vec<_>>(),
            "positive_coroots": self.pos_coroots.iter().map(|b| b.coords(r).to_vec()).collect::<Vec<_>>(),
            "theta": self.theta.coords(r),
            "theta_vee": self.theta_vee.coords(r),
            "marks": self.marks,
            "comarks": self.comarks,
            "two_rho": self.two_rho.coords(r),
            "weyl_order": self.weyl_order,
        })
    }
}

/// Determinant and adjugate (`det · M^{-1}`) of the leading `r×r` block.
fn integer_inverse(m: &[[i64; MAX_RANK]; MAX_RANK], r: usize) -> (i64, [[i64; MAX_RANK]; MAX_RANK]) {
    let mut a: Vec<Vec<Rational64>> = (0..r)
        .map(|i| {
            let mut row: Vec<Rational64> = (0..r).map(|j| Rational64::from(m[i][j])).collect();
            row.extend((0..r).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            row
        })
        .collect();
    let mut det = Rational64::one();
    for c in 0..r {
        let p = (c..r).find(|&k| !a[k][c].is_zero()).expect("Cartan matrix is invertible");
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c];
        det *= piv;
        for v in a[c].iter_mut() {
            *v /= piv;
        }
        for k in 0..r {
            if k != c && !a[k][c].is_zero() {
                let f = a[k][c];
                for j in 0..2 * r {
                    let t = a[c][j] * f;
                    a[k][j] -= t;
                }
            }
        }
    }
    let d = det.to_integer();
    let mut adj = [[0i64; MAX_RANK]; MAX_RANK];
    for i in 0..r {
        for j in 0..r {
            let v = a[i][r + j] * Rational64::from(d);
            debug_assert!(v.is_integer());
            adj[i][j] = v.to_integer();
        }
    }
    (d, adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_basics() {
        let rs = RootSystem::build("A2").unwrap();
        assert_eq!(rs.theta(), RootVec::from_slice(&[1, 1]));
        assert_eq!(rs.weyl_order(), 6);
        assert_eq!(rs.num_positive_roots(), 3);
        assert_eq!(rs.pair_root(&rs.theta_vee(), &rs.two_rho()), 4);
        assert_eq!(rs.cartan_entry(1, 2), -1);
        let w = rs.weight_to_root_basis(&WeightVec::basis(1));
        assert_eq!(w, vec![Rational64::new(2, 3), Rational64::new(1, 3)]);
    }

    #[test]
    fn c3_highest_root() {
        let rs = RootSystem::build("C3").unwrap();
        assert_eq!(rs.theta(), RootVec::from_slice(&[2, 2, 1]));
    }

    #[test]
    fn a1_comarks() {
        let rs = RootSystem::build("A1").unwrap();
        assert_eq!(rs.comarks(), &[1, 1]);
        assert_eq!(rs.theta(), RootVec::basis(1));
    }

    #[test]
    fn short_root_has_long_coroot() {
        let rs = RootSystem::build("B2").unwrap();
        let a2 = RootVec::basis(2);
        let c = rs.coroot_of(&a2).unwrap();
        assert_eq!(c, CorootVec::basis(2));
        assert_eq!(rs.pair_root(&c, &a2), 2);
        assert!(rs.coroot_of(&RootVec::from_slice(&[2, 0])).is_err());
    }

    #[test]
    fn unsupported_labels() {
        for bad in ["H3", "A0", "B1", "D3", "E9", "F3", "G3", "A9", "", "A"] {
            assert!(RootSystem::build(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn root_counts() {
        for (t, n) in [("A3", 6), ("B3", 9), ("C4", 16), ("D4", 12), ("E6", 36), ("E8", 120), ("F4", 24), ("G2", 6)] {
            assert_eq!(RootSystem::build(t).unwrap().num_positive_roots(), n, "{t}");
        }
    }

    #[test]
    fn weight_differences_are_integral() {
        let rs = RootSystem::build("A2").unwrap();
        let w1 = WeightVec::basis(1);
        assert!(rs.root_lattice_check(&w1).is_err());
        let rt = rs.theta();
        let refl = rs.root_to_weight(&rt).scale(rs.pair(&rs.theta_vee(), &w1) as i32);
        assert_eq!(rs.root_lattice_check(&refl).unwrap(), RootVec::from_slice(&[1, 1]));
    }
}
