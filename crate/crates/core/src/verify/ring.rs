use super::{Checker, Outcome, Suite, SuiteConfig};
use crate::cartan::RootSystem;
use crate::quantum::QuantumRing;

pub struct Chevalley;

impl Suite for Chevalley {
    fn name(&self) -> &'static str {
        "chevalley"
    }
    fn criterion(&self) -> usize {
        7
    }
    fn summary(&self) -> &'static str {
        "commutativity, associativity, commuting divisors and degree homogeneity of QH^T(G/B)"
    }
    fn run(&self, cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        for t in cfg.types_or(&["A1", "A2", "B2"]) {
            let Some(rs) = ck.ok(|| t.clone(), RootSystem::build(&t)) else { continue };
            let Some(qr) = ck.ok(|| t.clone(), QuantumRing::new(&rs)) else { continue };
            let els = rs.weyl_elements();
            for u in els {
                for v in els {
                    let p = qr.product(u, v);
                    ck.check(p == qr.product(v, u), || format!("{t}: σ^{} σ^{} not commutative", rs.format_word(u), rs.format_word(v)));
                    for ((w, lam), c) in p.iter() {
                        let deg = (rs.weyl_length(u) + rs.weyl_length(v)) as i64 - rs.weyl_length(w) as i64 - qr.q_degree(lam);
                        ck.check(c.is_homogeneous_of(deg), || {
                            format!("{t}: coefficient {} of degree ≠ {deg} in σ^{} σ^{}", c.to_text(), rs.format_word(u), rs.format_word(v))
                        });
                    }
                }
                let s = qr.schubert(u);
                for i in 1..=rs.rank() {
                    for j in 1..=rs.rank() {
                        let a = qr.chevalley(i, &qr.chevalley(j, &s));
                        let b = qr.chevalley(j, &qr.chevalley(i, &s));
                        ck.check(a == b, || format!("{t}: divisors {i}, {j} do not commute on σ^{}", rs.format_word(u)));
                    }
                }
            }
            if t == "A2" {
                for u in els {
                    for v in els {
                        let uv = qr.product(u, v);
                        for w in els {
                            let left = qr.class_product(&uv, &qr.schubert(w));
                            let right = qr.class_product(&qr.schubert(u), &qr.product(v, w));
                            ck.check(left == right, || {
                                format!("A2: (σ^{} σ^{}) σ^{} not associative", rs.format_word(u), rs.format_word(v), rs.format_word(w))
                            });
                        }
                    }
                }
            }
        }
        ck.finish(self)
    }
}

pub struct Tilted;

impl Suite for Tilted {
    fn name(&self) -> &'static str {
        "tilted"
    }
    fn criterion(&self) -> usize {
        10
    }
    fn summary(&self) -> &'static str {
        "every tilted order D_u(W) embeds dually as an induced affine Bruhat suborder"
    }
    fn run(&self, cfg: &SuiteConfig) -> Outcome {
        let mut ck = Checker::new();
        for t in cfg.types_or(&["A2", "B2"]) {
            let Some(rs) = ck.ok(|| t.clone(), RootSystem::build(&t)) else { continue };
            let g = crate::qbruhat::QBGraph::build(&rs);
            for u in rs.weyl_elements() {
                let ctx = || format!("{t}: u = {}", rs.format_word(u));
                if let Some(n) = ck.ok(ctx, g.verify_tilted_embedding(u)) {
                    ck.check(n > 0, ctx);
                }
            }
        }
        ck.finish(self)
    }
}
