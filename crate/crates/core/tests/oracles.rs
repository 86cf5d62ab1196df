//! Independent checks against permutation combinatorics and classical facts.

use std::collections::BTreeSet;

use schubert_core::coeffring::{LinComb, Scalar};
use schubert_core::peterson::{HomologyClass, Peterson};
use schubert_core::qbruhat::{EdgeKind, QBGraph};
use schubert_core::quantum::{specialize, QuantumRing, Specialization};
use schubert_core::{CorootVec, RootSystem, WeylElt};

type Perm = Vec<usize>;

// one-line notation of s_{a_1} ⋯ s_{a_k}, computed from scratch
fn perm(rs: &RootSystem, w: &WeylElt, n: usize) -> Perm {
    let mut p: Perm = (1..=n).collect();
    for &i in &rs.weyl_reduced_word(w) {
        p.swap(i - 1, i);
    }
    p
}

fn inversions(p: &Perm) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

fn times_transposition(p: &Perm, a: usize, b: usize) -> Perm {
    let mut q = p.clone();
    q.swap(a - 1, b - 1);
    q
}

// q_a ⋯ q_{b−1}
fn q_of(a: usize, b: usize) -> CorootVec {
    let mut c = [0i32; 8];
    for k in a..b {
        c[k - 1] = 1;
    }
    CorootVec(c)
}

/// The quantum Monk rule for `Fl_n` written in permutations.
fn quantum_monk(k: usize, w: &Perm) -> BTreeSet<(Perm, CorootVec)> {
    let n = w.len();
    let l = inversions(w);
    let mut out = BTreeSet::new();
    for a in 1..=k {
        for b in k + 1..=n {
            let v = times_transposition(w, a, b);
            let lv = inversions(&v);
            if lv == l + 1 {
                out.insert((v, CorootVec::ZERO));
            } else if lv + 2 * (b - a) - 1 == l {
                out.insert((v, q_of(a, b)));
            }
        }
    }
    out
}

#[test]
fn weyl_group_orders() {
    for (t, n) in [("A1", 2u64), ("A3", 24), ("A4", 120), ("B3", 48), ("C3", 48), ("D4", 192), ("G2", 12), ("F4", 1152)] {
        let rs = RootSystem::build(t).unwrap();
        assert_eq!(rs.weyl_order(), n, "{t}");
        assert_eq!(rs.weyl_elements().len() as u64, n, "{t}");
    }
}

#[test]
fn length_is_inversion_count_in_type_a() {
    for n in 2..=5 {
        let rs = RootSystem::build(&format!("A{}", n - 1)).unwrap();
        let mut seen = BTreeSet::new();
        for w in rs.weyl_elements() {
            let p = perm(&rs, w, n);
            assert_eq!(rs.weyl_length(w), inversions(&p));
            assert!(seen.insert(p));
        }
    }
}

#[test]
fn quantum_bruhat_graph_matches_permutation_rule() {
    for n in 2..=4 {
        let rs = RootSystem::build(&format!("A{}", n - 1)).unwrap();
        let g = QBGraph::build(&rs);
        let mut ours = BTreeSet::new();
        for e in g.edges() {
            let quantum = e.kind == EdgeKind::Quantum;
            ours.insert((perm(&rs, &g.vertices[e.from], n), perm(&rs, &g.vertices[e.to], n), quantum));
        }
        let mut oracle = BTreeSet::new();
        for w in rs.weyl_elements() {
            let p = perm(&rs, w, n);
            let l = inversions(&p);
            for a in 1..n {
                for b in a + 1..=n {
                    let v = times_transposition(&p, a, b);
                    let lv = inversions(&v);
                    if lv == l + 1 {
                        oracle.insert((p.clone(), v, false));
                    } else if lv + 2 * (b - a) - 1 == l {
                        oracle.insert((p.clone(), v, true));
                    }
                }
            }
        }
        assert_eq!(ours, oracle, "A{}", n - 1);
    }
}

#[test]
fn chevalley_matches_quantum_monk() {
    for n in 2..=4 {
        let rs = RootSystem::build(&format!("A{}", n - 1)).unwrap();
        let qr = QuantumRing::new(&rs).unwrap();
        for w in rs.weyl_elements() {
            for k in 1..n {
                let c = specialize(&qr.chevalley(k, &qr.schubert(w)), Specialization::AlphaToZero);
                let mut ours = BTreeSet::new();
                for ((v, q), s) in c.iter() {
                    assert_eq!(*s, Scalar::one());
                    ours.insert((perm(&rs, v, n), *q));
                }
                assert_eq!(ours, quantum_monk(k, &perm(&rs, w, n)));
            }
        }
    }
}

#[test]
fn products_in_fl3_follow_from_monk() {
    // σ^{s1} σ^w computed through Schubert polynomials agrees with the Monk rule
    let rs = RootSystem::build("A2").unwrap();
    let qr = QuantumRing::new(&rs).unwrap();
    let s1 = rs.simple_reflection(1);
    for w in rs.weyl_elements() {
        let p = specialize(&qr.product(&s1, w), Specialization::AlphaToZero);
        assert!(p.iter().all(|(_, c)| *c == Scalar::one()));
        let set: BTreeSet<_> = p.iter().map(|((v, q), _)| (perm(&rs, v, 3), *q)).collect();
        assert_eq!(set, quantum_monk(1, &perm(&rs, w, 3)));
    }
}

#[test]
fn loop_group_of_sl2_has_polynomial_homology() {
    // H_*(ΩSU(2)) = Z[x]: the Schubert basis multiplies as ξ_a ξ_b = ξ_{a+b}
    let rs = RootSystem::build("A1").unwrap();
    let pet = Peterson::new(&rs).unwrap();
    let gr = rs.grassmannian_elements(8);
    let of_len = |m: usize| *gr.iter().find(|x| rs.aff_length(x) == m).unwrap();
    for a in 0..=4 {
        for b in 0..=4 {
            let xa = HomologyClass::basis(&rs, of_len(a)).unwrap();
            let xb = HomologyClass::basis(&rs, of_len(b)).unwrap();
            let p = pet.hom_product(&xa, &xb).unwrap().eval_zero();
            let got = p.clear_denominator(&rs).unwrap();
            assert_eq!(got, LinComb::basis(of_len(a + b)), "ξ_{a} ξ_{b}");
        }
    }
}
