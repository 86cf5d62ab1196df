//! Finite and affine Weyl group arithmetic.
//!
//! A finite element is stored as its action matrix on the root lattice
//! (columns are the images of the simple roots) together with the matrix of
//! its inverse.  An affine element `w t_λ` pairs such a matrix with a
//! translation `λ ∈ Q^∨`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde_json::{json, Value};

use crate::cartan::{AffineRoot, CorootVec, RootSystem, RootVec, WeightVec, MAX_RANK};
use crate::error::{Error, Result};

type Mat = [[i8; MAX_RANK]; MAX_RANK];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    m: Mat,
    mi: Mat,
    r: u8,
}

fn mat_mul(a: &Mat, b: &Mat, r: usize) -> Mat {
    let mut c = [[0i8; MAX_RANK]; MAX_RANK];
    for i in 0..r {
        for j in 0..r {
            let mut s = 0i32;
            for k in 0..r {
                s += a[i][k] as i32 * b[k][j] as i32;
            }
            c[i][j] = s as i8;
        }
    }
    c
}

fn mat_apply(a: &Mat, v: &[i32; MAX_RANK], r: usize) -> [i32; MAX_RANK] {
    let mut out = [0i32; MAX_RANK];
    for i in 0..r {
        let mut s = 0i32;
        for k in 0..r {
            s += a[i][k] as i32 * v[k];
        }
        out[i] = s;
    }
    out
}

impl WeylElt {
    pub fn identity(r: usize) -> Self {
        let mut m = [[0i8; MAX_RANK]; MAX_RANK];
        for (i, row) in m.iter_mut().enumerate().take(r) {
            row[i] = 1;
        }
        WeylElt { m, mi: m, r: r as u8 }
    }

    pub fn rank(&self) -> usize {
        self.r as usize
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElt::identity(self.rank())
    }

    pub fn mul(&self, o: &WeylElt) -> WeylElt {
        let r = self.rank();
        WeylElt { m: mat_mul(&self.m, &o.m, r), mi: mat_mul(&o.mi, &self.mi, r), r: self.r }
    }

    pub fn inverse(&self) -> WeylElt {
        WeylElt { m: self.mi, mi: self.m, r: self.r }
    }

    pub fn act_root(&self, beta: &RootVec) -> RootVec {
        RootVec(mat_apply(&self.m, &beta.0, self.rank()))
    }

    pub fn act_root_inv(&self, beta: &RootVec) -> RootVec {
        RootVec(mat_apply(&self.mi, &beta.0, self.rank()))
    }

    /// Action matrix on the root lattice, rows of the leading block.
    pub fn matrix(&self) -> Vec<Vec<i32>> {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|j| self.m[i][j] as i32).collect()).collect()
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt{:?}", self.matrix())
    }
}

/// The affine Weyl group element `w t_λ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineElt {
    pub w: WeylElt,
    pub t: CorootVec,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoverKind {
    Near,
    Far,
    Generic,
}

/// A Bruhat cocover `target = source · r_β ⋖ source`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CoverRecord {
    pub source: AffineElt,
    pub target: AffineElt,
    /// The positive affine root `β` of the reflection.
    pub root: AffineRoot,
    pub kind: CoverKind,
    /// Case 1–4 of the superregular classification, 0 for generic covers.
    pub case: u8,
    /// Index of the finite positive root `α` driving a classified cover.
    pub alpha: Option<usize>,
}

impl RootSystem {
    // ----- finite Weyl group -----

    pub fn weyl_identity(&self) -> WeylElt {
        WeylElt::identity(self.rank())
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        let r = self.rank();
        let mut m = [[0i8; MAX_RANK]; MAX_RANK];
        for j in 1..=r {
            let col = self.reflect_root(i, &RootVec::basis(j));
            for k in 0..r {
                m[k][j - 1] = col.0[k] as i8;
            }
        }
        WeylElt { m, mi: m, r: r as u8 }
    }

    /// The reflection `r_α` of a root.
    pub fn reflection(&self, alpha: &RootVec) -> Result<WeylElt> {
        let cv = self.coroot_of(alpha)?;
        let r = self.rank();
        let mut m = [[0i8; MAX_RANK]; MAX_RANK];
        for j in 1..=r {
            let c = self.pair_root(&cv, &RootVec::basis(j)) as i32;
            let col = RootVec::basis(j) - alpha.scale(c);
            for k in 0..r {
                m[k][j - 1] = col.0[k] as i8;
            }
        }
        Ok(WeylElt { m, mi: m, r: r as u8 })
    }

    pub fn weyl_from_word(&self, word: &[usize]) -> Result<WeylElt> {
        let mut w = self.weyl_identity();
        for &i in word {
            if i == 0 || i > self.rank() {
                return Err(Error::Parse(format!("node {i} is not a finite node of {}", self.label())));
            }
            w = w.mul(&self.simple_reflection(i));
        }
        Ok(w)
    }

    pub fn act_coroot(&self, w: &WeylElt, lambda: &CorootVec) -> CorootVec {
        self.conj_coroot(&w.m, lambda)
    }

    pub fn act_coroot_inv(&self, w: &WeylElt, lambda: &CorootVec) -> CorootVec {
        self.conj_coroot(&w.mi, lambda)
    }

    /// Coroot-basis action `D M D^{-1}`, `D` the diagonal of squared root lengths.
    fn conj_coroot(&self, m: &Mat, lambda: &CorootVec) -> CorootVec {
        let r = self.rank();
        let l = self.lcm_len();
        let mut y = [0i64; MAX_RANK];
        for j in 0..r {
            y[j] = lambda.0[j] as i64 * (l / self.sq_len(j));
        }
        let mut out = CorootVec::ZERO;
        for i in 0..r {
            let z: i64 = (0..r).map(|k| m[i][k] as i64 * y[k]).sum();
            out.0[i] = (z * self.sq_len(i) / l) as i32;
        }
        out
    }

    /// `w·μ` for a weight in the fundamental-weight basis.
    pub fn act_weight(&self, w: &WeylElt, mu: &WeightVec) -> WeightVec {
        let r = self.rank();
        let s = self.scaled_root_coords(mu);
        let t: Vec<i64> = (0..r).map(|i| (0..r).map(|k| w.m[i][k] as i64 * s[k]).sum()).collect();
        let mut out = WeightVec::ZERO;
        for i in 1..=r {
            let v: i64 = (1..=r).map(|j| self.cartan_entry(i, j) * t[j - 1]).sum();
            out.0[i - 1] = (v / self.cartan_det()) as i32;
        }
        out
    }

    /// `μ − w·μ`, which always lies in the root lattice.
    pub fn weight_diff(&self, mu: &WeightVec, w: &WeylElt) -> RootVec {
        let r = self.rank();
        let s = self.scaled_root_coords(mu);
        let det = self.cartan_det();
        let mut out = RootVec::ZERO;
        for i in 0..r {
            let ws: i64 = (0..r).map(|k| w.m[i][k] as i64 * s[k]).sum();
            let d = s[i] - ws;
            debug_assert_eq!(d % det, 0);
            out.0[i] = (d / det) as i32;
        }
        out
    }

    pub fn weyl_length(&self, w: &WeylElt) -> usize {
        self.positive_roots().iter().filter(|a| !w.act_root(a).is_positive()).count()
    }

    /// Finite right descents `i` with `w α_i < 0`.
    pub fn right_descents(&self, w: &WeylElt) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| !w.act_root(&RootVec::basis(i)).is_positive()).collect()
    }

    pub fn weyl_reduced_word(&self, w: &WeylElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = *w;
        while let Some(i) =
            (1..=self.rank()).find(|&i| !cur.act_root(&RootVec::basis(i)).is_positive())
        {
            word.push(i);
            cur = cur.mul(&self.simple_reflection(i));
        }
        word.reverse();
        word
    }

    /// All elements of `W`, sorted by length and then by reduced word.
    pub fn weyl_elements(&self) -> &[WeylElt] {
        self.weyl_cache.get_or_init(|| {
            assert!(self.weyl_order() <= 200_000, "Weyl group of {} is too large to enumerate", self.label());
            let mut seen: HashSet<WeylElt> = HashSet::new();
            let id = self.weyl_identity();
            seen.insert(id);
            let mut queue = VecDeque::from([id]);
            let gens: Vec<WeylElt> = (1..=self.rank()).map(|i| self.simple_reflection(i)).collect();
            while let Some(w) = queue.pop_front() {
                for g in &gens {
                    let u = w.mul(g);
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            let mut all: Vec<(usize, Vec<usize>, WeylElt)> =
                seen.into_iter().map(|w| (self.weyl_length(&w), self.weyl_reduced_word(&w), w)).collect();
            all.sort();
            all.into_iter().map(|(_, _, w)| w).collect()
        })
    }

    pub fn longest_element(&self) -> WeylElt {
        self.longest_in(&(1..=self.rank()).collect::<Vec<_>>())
    }

    /// Longest element of the parabolic subgroup generated by `nodes`.
    pub fn longest_in(&self, nodes: &[usize]) -> WeylElt {
        let mut w = self.weyl_identity();
        while let Some(&i) = nodes.iter().find(|&&i| w.act_root(&RootVec::basis(i)).is_positive()) {
            w = w.mul(&self.simple_reflection(i));
        }
        w
    }

    /// Reduced word rendered as `r2 r3`, or `id`.
    pub fn format_word(&self, w: &WeylElt) -> String {
        format_word(&self.weyl_reduced_word(w), "r")
    }

    // ----- affine Weyl group -----

    pub fn aff_identity(&self) -> AffineElt {
        AffineElt { w: self.weyl_identity(), t: CorootVec::ZERO }
    }

    pub fn aff_translation(&self, lambda: CorootVec) -> AffineElt {
        AffineElt { w: self.weyl_identity(), t: lambda }
    }

    pub fn aff_finite(&self, w: WeylElt) -> AffineElt {
        AffineElt { w, t: CorootVec::ZERO }
    }

    /// Simple reflection `r_i`, `i ∈ 0..=r`, with `r_0 = r_θ t_{−θ^∨}`.
    pub fn aff_simple(&self, i: usize) -> AffineElt {
        if i == 0 {
            AffineElt { w: self.reflection(&self.theta()).expect("θ is a root"), t: -self.theta_vee() }
        } else {
            self.aff_finite(self.simple_reflection(i))
        }
    }

    pub fn simple_affine_root(&self, i: usize) -> AffineRoot {
        if i == 0 {
            AffineRoot::new(-self.theta(), 1)
        } else {
            AffineRoot::new(RootVec::basis(i), 0)
        }
    }

    pub fn aff_from_word(&self, word: &[usize]) -> Result<AffineElt> {
        let mut x = self.aff_identity();
        for &i in word {
            if i > self.rank() {
                return Err(Error::Parse(format!("node {i} is not an affine node of {}", self.label())));
            }
            x = self.aff_mul(&x, &self.aff_simple(i));
        }
        Ok(x)
    }

    /// `(w t_λ)(v t_μ) = wv t_{v^{-1}λ + μ}`.
    pub fn aff_mul(&self, x: &AffineElt, y: &AffineElt) -> AffineElt {
        AffineElt { w: x.w.mul(&y.w), t: self.act_coroot_inv(&y.w, &x.t) + y.t }
    }

    pub fn aff_inv(&self, x: &AffineElt) -> AffineElt {
        AffineElt { w: x.w.inverse(), t: -self.act_coroot(&x.w, &x.t) }
    }

    /// Level-zero action `w t_λ·(μ + nδ) = w·μ + (n − ⟨λ,μ⟩)δ`.
    pub fn aff_act(&self, x: &AffineElt, beta: &AffineRoot) -> AffineRoot {
        let p = self.pair_root(&x.t, &beta.finite);
        AffineRoot::new(x.w.act_root(&beta.finite), beta.level - p as i32)
    }

    /// The reflection `r_{α+nδ} = r_α t_{nα^∨}`.
    pub fn aff_reflection(&self, beta: &AffineRoot) -> Result<AffineElt> {
        let w = self.reflection(&beta.finite)?;
        let cv = self.coroot_of(&beta.finite)?;
        Ok(AffineElt { w, t: cv.scale(beta.level) })
    }

    pub fn aff_length(&self, x: &AffineElt) -> usize {
        let mut total = 0i64;
        for (a, aw) in self.positive_roots().iter().zip(self.positive_roots_weight_basis()) {
            let chi = i64::from(!x.w.act_root(a).is_positive());
            let p = self.pair(&x.t, aw);
            total += (chi + p).abs();
        }
        total as usize
    }

    pub fn is_aff_descent(&self, x: &AffineElt, i: usize) -> bool {
        !self.aff_act(x, &self.simple_affine_root(i)).is_positive()
    }

    /// Left descent: `ℓ(r_i x) < ℓ(x)`.
    pub fn is_aff_left_descent(&self, x: &AffineElt, i: usize) -> bool {
        self.is_aff_descent(&self.aff_inv(x), i)
    }

    pub fn aff_reduced_word(&self, x: &AffineElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = *x;
        while let Some(i) = (0..=self.rank()).find(|&i| self.is_aff_descent(&cur, i)) {
            word.push(i);
            cur = self.aff_mul(&cur, &self.aff_simple(i));
        }
        word.reverse();
        word
    }

    /// The inversion set `{β ∈ R_af^+ : x·β < 0}`.
    pub fn aff_inversions(&self, x: &AffineElt) -> Vec<AffineRoot> {
        let mut out = Vec::new();
        for (a, aw) in self.positive_roots().iter().zip(self.positive_roots_weight_basis()) {
            let neg = !x.w.act_root(a).is_positive();
            let p = self.pair(&x.t, aw) as i32;
            for n in 0..p {
                out.push(AffineRoot::new(*a, n));
            }
            if neg && p >= 0 {
                out.push(AffineRoot::new(*a, p));
            }
            for n in 1..-p {
                out.push(AffineRoot::new(-*a, n));
            }
            if !neg && p <= -1 {
                out.push(AffineRoot::new(-*a, -p));
            }
        }
        out
    }

    /// `x` is the minimal-length element of `x·W`.
    pub fn is_grassmannian(&self, x: &AffineElt) -> bool {
        (1..=self.rank()).all(|i| !self.is_aff_descent(x, i))
    }

    /// Grassmannian elements of length at most `max_len`, by length then word.
    pub fn grassmannian_elements(&self, max_len: usize) -> Vec<AffineElt> {
        let mut layer = vec![self.aff_identity()];
        let mut out = layer.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for x in &layer {
                for i in 0..=self.rank() {
                    let y = self.aff_mul(&self.aff_simple(i), x);
                    if !self.is_aff_left_descent(x, i) && self.is_grassmannian(&y) && !next.contains(&y) {
                        next.push(y);
                    }
                }
            }
            next.sort_by_key(|y| self.aff_reduced_word(y));
            out.extend(next.iter().copied());
            layer = next;
        }
        out
    }

    pub fn is_antidominant(&self, lambda: &CorootVec) -> bool {
        self.simple_pairings(lambda)[..self.rank()].iter().all(|&p| p <= 0)
    }

    pub fn is_regular_antidominant(&self, lambda: &CorootVec) -> bool {
        self.simple_pairings(lambda)[..self.rank()].iter().all(|&p| p < 0)
    }

    /// `ℓ(u t_{wλ}) = ℓ(t_λ) − ℓ(uw) + ℓ(w)` for regular antidominant `λ`.
    pub fn length_regular(&self, u: &WeylElt, w: &WeylElt, lambda: &CorootVec) -> Result<usize> {
        if !self.is_regular_antidominant(lambda) {
            return Err(Error::Precondition("translation must be regular antidominant".into()));
        }
        let lt = self.aff_length(&self.aff_translation(*lambda)) as i64;
        let v = lt - self.weyl_length(&u.mul(w)) as i64 + self.weyl_length(w) as i64;
        let direct = self.aff_length(&AffineElt { w: *u, t: self.act_coroot(w, lambda) }) as i64;
        if v != direct {
            return Err(Error::Invariant(format!("regular length formula gave {v}, direct count {direct}")));
        }
        Ok(v as usize)
    }

    /// Bruhat order on `W_af`, by descending along a reduced word of `y`
    /// (the subword criterion in its recursive form).
    pub fn bruhat_leq(&self, x: &AffineElt, y: &AffineElt) -> bool {
        let mut x = *x;
        let mut y = *y;
        let mut lx = self.aff_length(&x);
        let mut ly = self.aff_length(&y);
        loop {
            if lx > ly {
                return false;
            }
            if ly == 0 {
                return lx == 0;
            }
            if lx == 0 {
                return true;
            }
            let s = (0..=self.rank()).find(|&i| self.is_aff_descent(&y, i)).expect("nonidentity has a descent");
            let rs = self.aff_simple(s);
            if self.is_aff_descent(&x, s) {
                x = self.aff_mul(&x, &rs);
                lx -= 1;
            }
            y = self.aff_mul(&y, &rs);
            ly -= 1;
        }
    }

    /// All Bruhat cocovers `x r_β ⋖ x`; candidates are exactly the inversions of `x`.
    pub fn cocovers(&self, x: &AffineElt) -> Vec<CoverRecord> {
        let lx = self.aff_length(x);
        let mut out: Vec<CoverRecord> = self
            .aff_inversions(x)
            .into_iter()
            .filter_map(|beta| {
                let y = self.aff_mul(x, &self.aff_reflection(&beta).ok()?);
                (self.aff_length(&y) + 1 == lx).then_some(CoverRecord {
                    source: *x,
                    target: y,
                    root: beta,
                    kind: CoverKind::Generic,
                    case: 0,
                    alpha: None,
                })
            })
            .collect();
        out.sort_by(|a, b| a.target.cmp(&b.target));
        out
    }

    // ----- superregular elements -----

    /// Threshold `2|W| + 2` on `min_α |⟨λ, α⟩|` above which an element is superregular.
    pub fn superregular_threshold(&self) -> i64 {
        2 * self.weyl_order() as i64 + 2
    }

    pub fn margin(&self, lambda: &CorootVec) -> i64 {
        self.positive_roots_weight_basis().iter().map(|aw| self.pair(lambda, aw).abs()).min().unwrap_or(0)
    }

    /// Number of operator applications the translation can still absorb, or
    /// `None` when it is not superregular.  One application shifts the
    /// translation by at most one coroot, which moves every pairing by less than 4.
    pub fn budget(&self, lambda: &CorootVec) -> Option<i64> {
        let m = self.margin(lambda);
        let th = self.superregular_threshold();
        (m >= th).then(|| (m - th) / 4)
    }

    /// A superregular antidominant coroot with the requested budget: a
    /// multiple of `−2ρ^∨` (the sum of the negative coroots).
    pub fn deep_antidominant(&self, budget: i64) -> CorootVec {
        let two_rho_vee = self.positive_coroots().iter().fold(CorootVec::ZERO, |a, c| a + *c);
        let need = self.superregular_threshold() + 4 * budget;
        let k = (need + 1) / 2;
        -two_rho_vee.scale(k as i32)
    }

    /// Writes `μ = v·λ` with `λ` antidominant.
    pub fn decompose_chamber(&self, mu: &CorootVec) -> (WeylElt, CorootVec) {
        let mut v = self.weyl_identity();
        let mut lam = *mu;
        loop {
            let p = self.simple_pairings(&lam);
            match (1..=self.rank()).find(|&i| p[i - 1] > 0) {
                Some(i) => {
                    lam = self.reflect_coroot(i, &lam);
                    v = v.mul(&self.simple_reflection(i));
                }
                None => return (v, lam),
            }
        }
    }

    /// Cocovers of a superregular `x = w t_{vλ}`, classified into the four
    /// cases (near: 1, 2; far: 3, 4).
    pub fn cocovers_superregular(&self, x: &AffineElt) -> Result<Vec<CoverRecord>> {
        let (v, lam) = self.decompose_chamber(&x.t);
        if self.budget(&lam).is_none() {
            return Err(Error::Budget(format!("translation {:?} is not superregular", x.t)));
        }
        let wv = x.w.mul(&v);
        let lwv = self.weyl_length(&wv) as i64;
        let lv = self.weyl_length(&v) as i64;
        let mut out = Vec::new();
        for (k, (a, av)) in self.positive_roots().iter().zip(self.positive_coroots()).enumerate() {
            let ra = self.reflection(a)?;
            let h = 2 * av.coord_sum();
            let n1 = self.pair_root(&lam, a) as i32;
            let l_wvra = self.weyl_length(&wv.mul(&ra)) as i64;
            let l_vra = self.weyl_length(&v.mul(&ra)) as i64;
            let mut cases = Vec::with_capacity(2);
            if l_wvra == lwv + 1 {
                cases.push((1u8, n1));
            } else if l_wvra == lwv + 1 - h {
                cases.push((2u8, n1 + 1));
            }
            if l_vra == lv - 1 {
                cases.push((3u8, 0));
            } else if l_vra == lv + h - 1 {
                cases.push((4u8, -1));
            }
            let va = v.act_root(a);
            for (case, n) in cases {
                let refl = AffineRoot::new(va, n);
                let y = self.aff_mul(x, &self.aff_reflection(&refl)?);
                out.push(CoverRecord {
                    source: *x,
                    target: y,
                    root: -refl,
                    kind: if case <= 2 { CoverKind::Near } else { CoverKind::Far },
                    case,
                    alpha: Some(k),
                });
            }
        }
        out.sort_by(|a, b| a.target.cmp(&b.target));
        Ok(out)
    }

    /// The target predicted by the explicit formulas of each case.
    pub fn cover_case_target(&self, x: &AffineElt, alpha: usize, case: u8) -> AffineElt {
        let (v, lam) = self.decompose_chamber(&x.t);
        let a = self.positive_roots()[alpha];
        let av = self.positive_coroots()[alpha];
        let rva = self.reflection(&v.act_root(&a)).expect("root");
        let ra = self.reflection(&a).expect("root");
        let w = x.w.mul(&rva);
        let t = match case {
            1 => self.act_coroot(&v, &lam),
            2 => self.act_coroot(&v, &(lam + av)),
            3 => self.act_coroot(&v.mul(&ra), &lam),
            _ => self.act_coroot(&v.mul(&ra), &(lam + av)),
        };
        AffineElt { w, t }
    }

    /// Compares the case classification with the generic enumeration.
    pub fn check_cover_classification(&self, x: &AffineElt) -> Result<()> {
        let classified = self.cocovers_superregular(x)?;
        for c in &classified {
            let expect = self.cover_case_target(x, c.alpha.expect("classified"), c.case);
            if expect != c.target {
                return Err(Error::Invariant(format!("case {} formula disagrees with x·r_β", c.case)));
            }
        }
        let a: BTreeSet<AffineElt> = classified.iter().map(|c| c.target).collect();
        let b: BTreeSet<AffineElt> = self.cocovers(x).iter().map(|c| c.target).collect();
        if a != b || a.len() != classified.len() {
            return Err(Error::Invariant(format!(
                "classified cocovers ({}) differ from enumerated cocovers ({})",
                classified.len(),
                b.len()
            )));
        }
        Ok(())
    }

    // ----- text and JSON forms -----

    pub fn format_aff_word(&self, x: &AffineElt) -> String {
        format_word(&self.aff_reduced_word(x), "r")
    }

    pub fn aff_to_json(&self, x: &AffineElt) -> Value {
        json!({ "w": self.format_word(&x.w), "t": x.t.to_csv(self.rank()) })
    }
}

/// `[2, 3]` ↦ `"r2 r3"`; the empty word is `"id"`.
pub fn format_word(word: &[usize], prefix: &str) -> String {
    if word.is_empty() {
        return "id".to_string();
    }
    word.iter().map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(" ")
}

/// Parses words such as `"r2 r3"`, `"s1s2"`, `"2,3"`, `"0 6 2 1 0"` or `"id"`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "id" || s == "e" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut digits = String::new();
    let flush = |digits: &mut String, out: &mut Vec<usize>| -> Result<()> {
        if !digits.is_empty() {
            out.push(digits.parse().map_err(|_| Error::Parse(format!("bad node `{digits}`")))?);
            digits.clear();
        }
        Ok(())
    };
    for ch in s.chars() {
        match ch {
            '0'..='9' => digits.push(ch),
            'r' | 's' => flush(&mut digits, &mut out)?,
            ' ' | ',' | '*' | '\t' => flush(&mut digits, &mut out)?,
            _ => return Err(Error::Parse(format!("unexpected `{ch}` in word `{s}`"))),
        }
    }
    flush(&mut digits, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::build(t).unwrap()
    }

    #[test]
    fn lengths_of_small_elements() {
        let a2 = rs("A2");
        assert_eq!(a2.aff_length(&a2.aff_identity()), 0);
        assert_eq!(a2.aff_length(&a2.aff_translation(-a2.theta_vee())), 4);
        for t in ["A1", "A2", "B2", "G2", "C3"] {
            let s = rs(t);
            assert_eq!(s.aff_length(&s.aff_simple(0)), 1, "{t}");
        }
    }

    #[test]
    fn r0_is_grassmannian() {
        let a1 = rs("A1");
        let x = AffineElt { w: a1.simple_reflection(1), t: CorootVec::from_slice(&[-1]) };
        assert_eq!(x, a1.aff_simple(0));
        assert!(a1.is_grassmannian(&x));
        let a2 = rs("A2");
        assert!(!a2.is_grassmannian(&a2.aff_simple(1)));
        assert!(a2.is_grassmannian(&a2.aff_identity()));
    }

    #[test]
    fn inversions_of_r0() {
        let a2 = rs("A2");
        assert_eq!(a2.aff_inversions(&a2.aff_simple(0)), vec![AffineRoot::new(-a2.theta(), 1)]);
    }

    #[test]
    fn reduced_word_of_translation() {
        let a1 = rs("A1");
        assert_eq!(a1.aff_reduced_word(&a1.aff_translation(-a1.theta_vee())), vec![1, 0]);
    }

    #[test]
    fn cocovers_small() {
        let a2 = rs("A2");
        assert!(a2.cocovers(&a2.aff_identity()).is_empty());
        // deleting one letter of r1 r2 r1 r0 leaves three reduced words
        assert_eq!(a2.cocovers(&a2.aff_translation(-a2.theta_vee())).len(), 3);
        let a1 = rs("A1");
        let c = a1.cocovers(&a1.aff_simple(0));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].target, a1.aff_identity());
    }

    #[test]
    fn superregular_cover_counts() {
        let a2 = rs("A2");
        let x = a2.aff_translation(CorootVec::from_slice(&[-20, -20]));
        let covers = a2.cocovers_superregular(&x).unwrap();
        let near: Vec<_> = covers.iter().filter(|c| c.kind == CoverKind::Near).collect();
        let far: Vec<_> = covers.iter().filter(|c| c.kind == CoverKind::Far).collect();
        assert_eq!(near.len(), 2);
        assert!(near.iter().all(|c| c.case == 1));
        assert_eq!(far.len(), 3);
        assert!(far.iter().all(|c| c.case == 4));
        a2.check_cover_classification(&x).unwrap();
    }

    #[test]
    fn length_regular_examples() {
        let a2 = rs("A2");
        let lam = -a2.theta_vee().scale(2);
        let id = a2.weyl_identity();
        let lt = a2.aff_length(&a2.aff_translation(lam));
        assert_eq!(a2.length_regular(&id, &id, &lam).unwrap(), lt);
        assert_eq!(a2.length_regular(&a2.simple_reflection(1), &id, &lam).unwrap(), lt - 1);
        let w0 = a2.longest_element();
        assert_eq!(a2.length_regular(&id, &w0, &lam).unwrap(), lt);
        assert_eq!(a2.length_regular(&w0, &w0, &lam).unwrap(), lt + 3);
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("r2 r3").unwrap(), vec![2, 3]);
        assert_eq!(parse_word("s1s2").unwrap(), vec![1, 2]);
        assert_eq!(parse_word("0 6 2 1 0").unwrap(), vec![0, 6, 2, 1, 0]);
        assert_eq!(parse_word("id").unwrap(), Vec::<usize>::new());
        assert!(parse_word("r2 x").is_err());
    }
}
