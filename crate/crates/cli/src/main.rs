use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use schubert_core::coeffring::LinComb;
use schubert_core::parabolic::{KBoundedPartition, ParabolicData};
use schubert_core::peterson::{HomologyClass, Peterson};
use schubert_core::quantum::{class_to_json, specialize, QHClass, QuantumRing, Specialization};
use schubert_core::qbruhat::QBGraph;
use schubert_core::routes::{gw_route, gw_routes};
use schubert_core::verify::{find, registry, SuiteConfig};
use schubert_core::weyl::{format_word, parse_word};
use schubert_core::{AffineElt, CorootVec, Error, RootSystem, WeylElt};

const GRAMMAR: &str = "\
Element grammar:
  finite word     \"r2 r3\", \"s1s2\", \"2,3\" or \"id\"
  affine word     letters 0..=r, e.g. \"0 6 2 1 0\" or \"r1 r0\"
  affine element  an affine word, or FINITE|COROOT such as \"r1|-4,-4\" for r1 t_(-4,-4)
  coroot          comma separated simple-coroot coordinates, e.g. \"-1,0,0\"
  q exponent      a coroot written the same way
Output is JSON on stdout; `qbg export --dot` prints DOT.
Exit codes: 0 success, 1 failed verification or internal error, 2 bad arguments.";

#[derive(Parser)]
#[command(name = "schubert", version, about = "Quantum cohomology of flag varieties and homology of the affine Grassmannian", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct TypeArg {
    /// Cartan type such as A2, B3, G2.
    #[arg(long = "type", value_name = "TYPE")]
    ty: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Root system data.
    Rootsys {
        #[command(subcommand)]
        cmd: RootsysCmd,
    },
    /// Affine Weyl group elements.
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// The quantum Bruhat graph.
    Qbg {
        #[command(subcommand)]
        cmd: QbgCmd,
    },
    /// Quantum cohomology of G/B.
    Qh {
        #[command(subcommand)]
        cmd: QhCmd,
    },
    /// Homology of the affine Grassmannian.
    Gr {
        #[command(subcommand)]
        cmd: GrCmd,
    },
    /// Projection onto (W^P)_af.
    PiP {
        #[command(flatten)]
        t: TypeArg,
        /// Nodes of the Levi, e.g. 2,3.
        #[arg(long, value_delimiter = ',')]
        ip: Vec<usize>,
        /// Project the translation by this coroot.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "x")]
        coroot: Option<String>,
        /// Project an arbitrary affine element.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Lift a parabolic q-degree to G/B.
    PwLift {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, value_delimiter = ',')]
        ip: Vec<usize>,
        #[arg(long, allow_hyphen_values = true)]
        coroot: String,
    },
    /// Strange duality on QH(Gr(j, n)).
    StrangeDual {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        /// Element of W^P.
        #[arg(long)]
        w: String,
        /// Power of q.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        q: i32,
    },
    /// Map from the affine Grassmannian of SL_n to QH(Gr(j, n)) at q = 1.
    LmMap {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        /// k-bounded partition, e.g. 3,2.
        #[arg(long, value_delimiter = ',', conflicts_with = "x")]
        partition: Option<Vec<usize>>,
        /// Grassmannian affine element.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
    /// Run a verification suite (or all of them).
    Verify {
        suite: Option<String>,
        /// List the suites.
        #[arg(long)]
        list: bool,
        /// Restrict to these types.
        #[arg(long = "type", value_delimiter = ',')]
        types: Vec<String>,
        /// Largest ⟨λ, 2ρ⟩ for the comparison sweep.
        #[arg(long)]
        qdeg: Option<i64>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum RootsysCmd {
    Show {
        #[command(flatten)]
        t: TypeArg,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    Length {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Elements covered by x in the Bruhat order.
    Covers {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    Grassmannian {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
}

#[derive(Subcommand)]
enum QbgCmd {
    Export {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        dot: bool,
    },
    /// Embedding of the tilted order D_u(W) into the affine Bruhat order.
    Tilted {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        u: String,
    },
}

#[derive(Subcommand)]
enum QhCmd {
    Product {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        equivariant: bool,
    },
    SchubertPoly {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        w: String,
    },
    /// One Gromov–Witten coefficient c_{u,v}^{w,q}.
    Gw {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        #[arg(long)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// quantum or affine
        #[arg(long, default_value = "quantum")]
        route: String,
        #[arg(long)]
        equivariant: bool,
    },
}

#[derive(Subcommand)]
enum GrCmd {
    Product {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long)]
        equivariant: bool,
    },
    JClass {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Non-equivariant multiplication by ξ_{r_0}.
    Pieri0 {
        #[command(flatten)]
        t: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
    Verify(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::Budget(_) | Error::NonzeroRemainder => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

fn build(ty: &str) -> Result<RootSystem, Failure> {
    Ok(RootSystem::build(ty)?)
}

fn coroot(rs: &RootSystem, s: &str) -> Result<CorootVec, Failure> {
    let c: Vec<i32> = s
        .split(',')
        .map(|p| p.trim().parse::<i32>().map_err(|_| Failure::Usage(format!("bad coordinate `{p}`"))))
        .collect::<Result<_, _>>()?;
    rs.check_dim(&c)?;
    Ok(CorootVec::from_slice(&c))
}

fn finite(rs: &RootSystem, s: &str) -> Result<WeylElt, Failure> {
    Ok(rs.weyl_from_word(&parse_word(s)?)?)
}

fn affine(rs: &RootSystem, s: &str) -> Result<AffineElt, Failure> {
    match s.split_once('|') {
        Some((w, t)) => Ok(AffineElt { w: finite(rs, w)?, t: coroot(rs, t)? }),
        None => Ok(rs.aff_from_word(&parse_word(s)?)?),
    }
}

fn grassmannian(rs: &RootSystem, s: &str) -> Result<AffineElt, Failure> {
    let x = affine(rs, s)?;
    if !rs.is_grassmannian(&x) {
        return Err(Failure::Usage(format!("{} is not Grassmannian", rs.format_aff_word(&x))));
    }
    Ok(x)
}

fn type_a(n: usize) -> Result<RootSystem, Failure> {
    if n < 2 {
        return Err(Failure::Usage("n must be at least 2".into()));
    }
    build(&format!("A{}", n - 1))
}

fn emit(v: Value) -> Out {
    Ok(serde_json::to_string(&v).expect("serializable"))
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Rootsys { cmd: RootsysCmd::Show { t } } => emit(build(&t.ty)?.to_json()),
        Cmd::Weyl { cmd } => match cmd {
            WeylCmd::Length { t, x } => {
                let rs = build(&t.ty)?;
                let x = affine(&rs, &x)?;
                emit(json!({ "element": rs.aff_to_json(&x), "word": rs.format_aff_word(&x), "length": rs.aff_length(&x) }))
            }
            WeylCmd::Covers { t, x } => {
                let rs = build(&t.ty)?;
                let x = affine(&rs, &x)?;
                let covers: Vec<Value> = rs
                    .cocovers(&x)
                    .iter()
                    .map(|c| {
                        json!({
                            "target": rs.format_aff_word(&c.target),
                            "element": rs.aff_to_json(&c.target),
                            "root": { "finite": c.root.finite.to_csv(rs.rank()), "level": c.root.level },
                        })
                    })
                    .collect();
                emit(json!({ "element": rs.format_aff_word(&x), "covers": covers }))
            }
            WeylCmd::Grassmannian { t, x } => {
                let rs = build(&t.ty)?;
                let x = affine(&rs, &x)?;
                emit(json!({ "element": rs.format_aff_word(&x), "grassmannian": rs.is_grassmannian(&x) }))
            }
        },
        Cmd::Qbg { cmd } => match cmd {
            QbgCmd::Export { t, dot } => {
                let rs = build(&t.ty)?;
                let g = QBGraph::build(&rs);
                if dot {
                    Ok(g.to_dot().trim_end().to_string())
                } else {
                    emit(g.to_json())
                }
            }
            QbgCmd::Tilted { t, u } => {
                let rs = build(&t.ty)?;
                let g = QBGraph::build(&rs);
                let u = finite(&rs, &u)?;
                let comparisons = g.verify_tilted_embedding(&u)?;
                let longest = rs.weyl_elements().iter().map(|w| g.distance(&u, w)).max().unwrap_or(0);
                let lam = rs.deep_antidominant(longest as i64);
                let xs = g.tilted_embedding(&u, &lam)?;
                let embedding: Vec<Value> = g
                    .vertices
                    .iter()
                    .zip(&xs)
                    .map(|(w, x)| json!({ "w": rs.format_word(w), "distance": g.distance(&u, w), "x": rs.aff_to_json(x) }))
                    .collect();
                emit(json!({ "u": rs.format_word(&u), "lambda": lam.to_csv(rs.rank()), "comparisons": comparisons, "embedding": embedding }))
            }
        },
        Cmd::Qh { cmd } => match cmd {
            QhCmd::Product { t, u, v, equivariant } => {
                let rs = build(&t.ty)?;
                let qr = QuantumRing::new(&rs)?;
                let p = qr.product(&finite(&rs, &u)?, &finite(&rs, &v)?);
                let p = if equivariant { p } else { specialize(&p, Specialization::AlphaToZero) };
                emit(class_to_json(&rs, &p))
            }
            QhCmd::SchubertPoly { t, w } => {
                let rs = build(&t.ty)?;
                let qr = QuantumRing::new(&rs)?;
                emit(qr.poly_to_json(qr.schubert_poly(&finite(&rs, &w)?)))
            }
            QhCmd::Gw { t, u, v, w, q, route, equivariant } => {
                let rs = build(&t.ty)?;
                let route = gw_route(&route).ok_or_else(|| {
                    let names: Vec<_> = gw_routes().iter().map(|r| r.name()).collect();
                    Failure::Usage(format!("unknown route `{route}`; expected one of {names:?}"))
                })?;
                let q = match q {
                    Some(s) => coroot(&rs, &s)?,
                    None => CorootVec::ZERO,
                };
                let pet = Peterson::new(&rs)?;
                let c = route.gw(&pet, &finite(&rs, &u)?, &finite(&rs, &v)?, &finite(&rs, &w)?, &q)?;
                let c = if equivariant { c } else { c.eval_zero() };
                emit(json!({ "route": route.name(), "value": c.to_text() }))
            }
        },
        Cmd::Gr { cmd } => match cmd {
            GrCmd::Product { t, x, y, equivariant } => {
                let rs = build(&t.ty)?;
                let pet = Peterson::new(&rs)?;
                let a = HomologyClass::basis(&rs, grassmannian(&rs, &x)?)?;
                let b = HomologyClass::basis(&rs, grassmannian(&rs, &y)?)?;
                let h = pet.hom_product(&a, &b)?;
                let h = HomologyClass::new(&rs, h.clear_denominator(&rs)?, CorootVec::ZERO)?;
                let h = if equivariant { h } else { h.eval_zero() };
                emit(h.to_json(&rs))
            }
            GrCmd::JClass { t, x } => {
                let rs = build(&t.ty)?;
                let pet = Peterson::new(&rs)?;
                let x = grassmannian(&rs, &x)?;
                emit(json!({ "x": rs.format_aff_word(&x), "j": rs.nil_to_json(&pet.j_class(&x)?) }))
            }
            GrCmd::Pieri0 { t, x } => {
                let rs = build(&t.ty)?;
                let x = grassmannian(&rs, &x)?;
                emit(HomologyClass::new(&rs, rs.pieri_r0(&LinComb::basis(x)), CorootVec::ZERO)?.to_json(&rs))
            }
        },
        Cmd::PiP { t, ip, coroot: c, x } => {
            let rs = build(&t.ty)?;
            let p = ParabolicData::new(&rs, &ip)?;
            let x = match (c, x) {
                (Some(c), _) => rs.aff_translation(coroot(&rs, &c)?),
                (None, Some(x)) => affine(&rs, &x)?,
                (None, None) => return Err(Failure::Usage("give --coroot or --x".into())),
            };
            emit(rs.aff_to_json(&p.pi_p(&x)?))
        }
        Cmd::PwLift { t, ip, coroot: c } => {
            let rs = build(&t.ty)?;
            let p = ParabolicData::new(&rs, &ip)?;
            let lift = p.pw_lift(&coroot(&rs, &c)?)?;
            emit(json!({
                "lambda_b": lift.lambda_b.to_csv(rs.rank()),
                "ip_prime": lift.ip_prime,
                "v": rs.format_word(&lift.v),
            }))
        }
        Cmd::StrangeDual { n, j, w, q } => {
            let rs = type_a(n)?;
            let p = ParabolicData::maximal(&rs, j)?;
            let w = finite(&rs, &w)?;
            if !p.is_min_coset(&w) {
                return Err(Failure::Usage(format!("{} is not a minimal coset representative", rs.format_word(&w))));
            }
            let img = p.strange_duality(&QHClass::basis((w, rs.simple_coroot(j).scale(q))))?;
            emit(class_to_json(&rs, &img))
        }
        Cmd::LmMap { n, j, partition, x } => {
            let rs = type_a(n)?;
            let p = ParabolicData::maximal(&rs, j)?;
            let x = match (partition, x) {
                (Some(parts), _) => rs.partition_to_affine(&KBoundedPartition::new(&parts, n - 1)?)?,
                (None, Some(x)) => grassmannian(&rs, &x)?,
                (None, None) => return Err(Failure::Usage("give --partition or --x".into())),
            };
            let image = p.lm_map(&x)?;
            emit(json!({
                "x": rs.format_aff_word(&x),
                "image": image.map(|y| format_word(&rs.weyl_reduced_word(&y), "r")),
            }))
        }
        Cmd::Verify { suite, list, types, qdeg, seed } => {
            if list {
                let v: Vec<Value> =
                    registry().iter().map(|s| json!({ "suite": s.name(), "criterion": s.criterion(), "summary": s.summary() })).collect();
                return emit(Value::Array(v));
            }
            let cfg = SuiteConfig { types: (!types.is_empty()).then_some(types), qdeg, seed };
            let suites = match suite.as_deref() {
                None | Some("all") => registry(),
                Some(name) => vec![find(name).ok_or_else(|| Failure::Usage(format!("unknown suite `{name}`")))?],
            };
            let outs: Vec<_> = suites.iter().map(|s| s.run(&cfg)).collect();
            let report = if outs.len() == 1 { outs[0].to_json() } else { Value::Array(outs.iter().map(|o| o.to_json()).collect()) };
            if outs.iter().all(|o| o.passed()) {
                emit(report)
            } else {
                Err(Failure::Verify(report))
            }
        }
    }
}

fn print(s: &str) {
    // a closed pipe is not an error for us
    let _ = writeln!(std::io::stdout(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(s) => {
            print(&s);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Verify(report)) => {
            print(&serde_json::to_string(&report).expect("serializable"));
            ExitCode::from(1)
        }
    }
}
