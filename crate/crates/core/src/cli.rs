//! Command-line surface. `run` parses arguments and returns the exit code and the text for stdout
//! and stderr; the binary only prints them.

use std::collections::HashSet;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::aut::{aut_group, decompose, matrix_of, standard_generators, Automorphism};
use crate::error::{Error, Result};
use crate::group::MacdonaldGroup;
use crate::iso::{iso_decision, sylow_local_iso, Homomorphism, IsoDecision, SylowIsoDecision};
use crate::lgroup::{l_aut_group, omega_matrix, LAutomorphism, LGroup};
use crate::ntheory::euler_phi;
use crate::structure::{center_generators, lower_central_series};
use crate::suites::{run_suite, Suite, Verdict};
use crate::torsion::{torsion_structure, SylowKind, DEFAULT_CAP};
use crate::Order;

#[derive(Debug, Parser)]
#[command(name = "macdonald", version, about = "Exact arithmetic and structure of Macdonald groups G(beta)")]
pub struct Cli {
    /// Largest enumeration allowed.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BetaArg {
    #[arg(long, allow_hyphen_values = true)]
    pub beta: BigInt,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Torsion structure, center generators and nilpotency class.
    Info(BetaArg),
    /// Product of two elements.
    Mul {
        #[command(flatten)]
        beta: BetaArg,
        x: String,
        y: String,
    },
    /// Order of an element.
    Ord {
        #[command(flatten)]
        beta: BetaArg,
        x: String,
    },
    /// `y^-1 x y`.
    Conj {
        #[command(flatten)]
        beta: BetaArg,
        x: String,
        y: String,
    },
    /// Automorphism group.
    Aut {
        #[command(flatten)]
        beta: BetaArg,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        order: bool,
        #[arg(long, num_args = 2, value_names = ["IMG_A", "IMG_B"])]
        matrix: Option<Vec<String>>,
        #[arg(long, num_args = 2, value_names = ["IMG_A", "IMG_B"])]
        decompose: Option<Vec<String>>,
    },
    /// Isomorphism between G(beta) and G(gamma), or between their Sylow p-parts.
    Iso {
        #[command(flatten)]
        beta: BetaArg,
        #[arg(long, allow_hyphen_values = true)]
        gamma: BigInt,
        #[arg(short, long)]
        p: Option<BigInt>,
    },
    /// The quotient L(beta) and its automorphisms.
    Lgroup {
        #[command(flatten)]
        beta: BetaArg,
        #[arg(long)]
        aut_order: bool,
        #[arg(long, num_args = 2, value_names = ["IMG_A", "IMG_B"])]
        omega: Option<Vec<String>>,
    },
    /// Run self-checks; exit code 1 on the first failure.
    Verify {
        #[command(flatten)]
        beta: BetaArg,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// JSON report or a GAP presentation.
    Export {
        #[command(flatten)]
        beta: BetaArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Gap,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub beta: String,
    pub command: String,
    pub results: Value,
    pub verdicts: Vec<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::usage(text),
            };
        }
    };
    match execute(&cli) {
        Ok(Output::Report(r)) => {
            let stdout = serde_json::to_string_pretty(&r).expect("report serializes") + "\n";
            match r.verdicts.iter().find(|v| !v.pass) {
                Some(v) => Outcome {
                    code: 1,
                    stdout,
                    stderr: format!(
                        "verification failed at {}: expected {}, computed {}\n",
                        v.locus, v.expected, v.computed
                    ),
                },
                None => Outcome {
                    code: 0,
                    stdout,
                    stderr: String::new(),
                },
            }
        }
        Ok(Output::Text(t)) => Outcome {
            code: 0,
            stdout: t,
            stderr: String::new(),
        },
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

enum Output {
    Report(Report),
    Text(String),
}

fn report(g: &MacdonaldGroup, command: &str, results: Value, verdicts: Vec<Verdict>) -> Output {
    Output::Report(Report {
        beta: g.beta().to_string(),
        command: command.to_string(),
        results,
        verdicts,
    })
}

fn parse_pair(g: &MacdonaldGroup, imgs: &[String]) -> Result<(crate::Element, crate::Element)> {
    Ok((g.parse(&imgs[0])?, g.parse(&imgs[1])?))
}

fn execute(cli: &Cli) -> Result<Output> {
    let cap = cli.cap;
    match &cli.command {
        Command::Info(b) => {
            let g = MacdonaldGroup::new(b.beta.clone())?;
            Ok(report(&g, "info", info_results(&g)?, info_verdicts(&g)?))
        }
        Command::Mul { beta, x, y } => {
            let g = MacdonaldGroup::new(beta.beta.clone())?;
            let (x, y) = (g.parse(x)?, g.parse(y)?);
            let r = json!({ "x": g.format(&x), "y": g.format(&y), "product": g.format(&g.multiply(&x, &y)) });
            Ok(report(&g, "mul", r, vec![]))
        }
        Command::Ord { beta, x } => {
            let g = MacdonaldGroup::new(beta.beta.clone())?;
            let x = g.parse(x)?;
            let order = g.order(&x)?;
            let r = json!({ "x": g.format(&x), "order": order.to_string(), "torsion": matches!(order, Order::Finite(_)) });
            Ok(report(&g, "ord", r, vec![]))
        }
        Command::Conj { beta, x, y } => {
            let g = MacdonaldGroup::new(beta.beta.clone())?;
            let (x, y) = (g.parse(x)?, g.parse(y)?);
            let r = json!({ "x": g.format(&x), "y": g.format(&y), "conjugate": g.format(&g.conjugate(&x, &y)) });
            Ok(report(&g, "conj", r, vec![]))
        }
        Command::Aut {
            beta,
            list,
            order,
            matrix,
            decompose: dec,
        } => {
            let g = MacdonaldGroup::new(beta.beta.clone())?;
            aut_command(&g, cap, *list, *order, matrix.as_deref(), dec.as_deref())
        }
        Command::Iso { beta, gamma, p } => iso_command(&beta.beta, gamma, p.as_ref()),
        Command::Lgroup { beta, aut_order, omega } => lgroup_command(&beta.beta, cap, *aut_order, omega.as_deref()),
        Command::Verify { beta, suite } => {
            let g = MacdonaldGroup::new(beta.beta.clone())?;
            let out = run_suite(&g, *suite, cap)?;
            let skipped: Vec<Value> = out
                .skipped
                .iter()
                .map(|(s, why)| json!({ "suite": s, "reason": why }))
                .collect();
            let r = json!({
                "suite": suite,
                "checks": out.verdicts.len(),
                "passed": out.verdicts.iter().filter(|v| v.pass).count(),
                "skipped": skipped,
            });
            Ok(report(&g, "verify", r, out.verdicts))
        }
        Command::Export { beta, format } => {
            let g = MacdonaldGroup::new(beta.beta.clone())?;
            match format {
                Format::Json => Ok(report(&g, "export", info_results(&g)?, info_verdicts(&g)?)),
                Format::Gap => Ok(Output::Text(gap_presentation(&g))),
            }
        }
    }
}

fn info_results(g: &MacdonaldGroup) -> Result<Value> {
    let t = torsion_structure(g)?;
    let lcs = lower_central_series(g)?;
    let sylow: Vec<Value> = t
        .sylow
        .iter()
        .map(|s| {
            json!({
                "p": s.p.to_string(),
                "m": s.m,
                "order": s.order.to_string(),
                "kind": s.kind,
            })
        })
        .collect();
    Ok(json!({
        "n": g.params().n.to_string(),
        "torsion": {
            "order": t.order.to_string(),
            "split": t.is_split,
            "kernel_order": t.kernel_order.to_string(),
            "quotient_order": t.quotient_order.to_string(),
            "sylow": sylow,
            "split_witness": t.split_witness.as_ref().map(|w| g.format(w)),
        },
        "center_generators": center_generators(g).iter().map(|z| g.format(z)).collect::<Vec<_>>(),
        "nilpotency_class": if lcs.class_three { 3 } else { 0 },
        "gamma3_order": lcs.gamma3_order.to_string(),
    }))
}

fn info_verdicts(g: &MacdonaldGroup) -> Result<Vec<Verdict>> {
    let p = g.params();
    let t = torsion_structure(g)?;
    let q8 = t.sylow.iter().any(|s| s.kind == SylowKind::QuaternionQ8);
    Ok(vec![
        Verdict::compare("torsion.order", p.n.pow(3), &t.order),
        Verdict::compare("torsion.split", p.v2 != 1, t.is_split),
        Verdict::compare("torsion.sylow2-quaternion", p.v2 == 1, q8),
        Verdict::holds("center.class-three", lower_central_series(g)?.class_three),
    ])
}

fn aut_json(g: &MacdonaldGroup, f: &Automorphism) -> Value {
    json!({ "A": g.format(f.img_a()), "B": g.format(f.img_b()) })
}

fn aut_command(
    g: &MacdonaldGroup,
    cap: u64,
    list: bool,
    order: bool,
    matrix: Option<&[String]>,
    dec: Option<&[String]>,
) -> Result<Output> {
    let n = &g.params().n;
    let expected_order: BigInt = 2 * n.pow(4);
    let mut r = serde_json::Map::new();
    let mut verdicts = vec![];
    if order || list {
        match aut_group(g, cap) {
            Ok(all) => {
                r.insert("order".into(), json!(all.len().to_string()));
                r.insert("method".into(), json!("closure"));
                verdicts.push(Verdict::compare("aut.order", &expected_order, all.len()));
                if list {
                    r.insert("automorphisms".into(), all.iter().map(|f| aut_json(g, f)).collect());
                }
            }
            Err(Error::CapExceeded { .. }) if !list => {
                r.insert("order".into(), json!(expected_order.to_string()));
                r.insert("method".into(), json!("formula"));
            }
            Err(e) => return Err(e),
        }
    }
    if let Some(imgs) = matrix {
        let (a, b) = parse_pair(g, imgs)?;
        let f = Automorphism::new(g, a, b)?;
        let m = matrix_of(g, &f)?;
        r.insert("automorphism".into(), aut_json(g, &f));
        r.insert("modulus".into(), json!(m.modulus.to_string()));
        r.insert(
            "matrix".into(),
            m.entries
                .iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>())
                .collect(),
        );
    }
    if let Some(imgs) = dec {
        let (a, b) = parse_pair(g, imgs)?;
        let f = Automorphism::new(g, a, b)?;
        let d = decompose(g, &f)?;
        r.insert("automorphism".into(), aut_json(g, &f));
        r.insert(
            "decomposition".into(),
            json!({ "eps": d.eps, "g": g.format(&d.g), "k": d.k.to_string() }),
        );
        verdicts.push(Verdict::holds("aut.decompose-round-trip", crate::aut::recompose(g, &d) == f));
    }
    if r.is_empty() {
        let gens = standard_generators(g);
        r.insert("generators".into(), gens.to_vec().iter().map(|f| aut_json(g, f)).collect());
        r.insert("order".into(), json!(expected_order.to_string()));
        r.insert("method".into(), json!("formula"));
    }
    Ok(report(g, "aut", Value::Object(r), verdicts))
}

fn hom_json(dst: &MacdonaldGroup, h: &Homomorphism, x: &str, y: &str) -> Value {
    json!({ x: dst.format(&h.img_a), y: dst.format(&h.img_b) })
}

fn iso_command(beta: &BigInt, gamma: &BigInt, p: Option<&BigInt>) -> Result<Output> {
    let g = MacdonaldGroup::new(beta.clone())?;
    let h = MacdonaldGroup::new(gamma.clone())?;
    let mut r = serde_json::Map::new();
    r.insert("gamma".into(), json!(gamma.to_string()));
    let mut verdicts = vec![];
    match p {
        None => match iso_decision(beta, gamma)? {
            IsoDecision::No => {
                r.insert("isomorphic".into(), json!(false));
            }
            IsoDecision::Yes(w) => {
                r.insert("isomorphic".into(), json!(true));
                r.insert("forward".into(), hom_json(&h, &w.forward, "A", "B"));
                r.insert("backward".into(), hom_json(&g, &w.backward, "X", "Y"));
                verdicts.push(Verdict::holds("iso.witness", w.verified));
            }
        },
        Some(p) => {
            r.insert("p".into(), json!(p.to_string()));
            match sylow_local_iso(beta, gamma, p)? {
                SylowIsoDecision::No => {
                    r.insert("isomorphic".into(), json!(false));
                }
                SylowIsoDecision::Yes(s) => {
                    r.insert("isomorphic".into(), json!(true));
                    r.insert("m".into(), json!(s.m));
                    r.insert("i".into(), json!(s.i.to_string()));
                    r.insert("j".into(), json!(s.j.to_string()));
                    r.insert("forward".into(), hom_json(&g, &s.forward, "X", "Y"));
                    r.insert("backward".into(), hom_json(&h, &s.backward, "A", "B"));
                    verdicts.push(Verdict::holds("iso.sylow-witness", s.verified));
                }
            }
        }
    }
    Ok(report(&g, "iso", Value::Object(r), verdicts))
}

fn lgroup_command(beta: &BigInt, cap: u64, aut_order: bool, omega: Option<&[String]>) -> Result<Output> {
    let l = LGroup::new(beta.clone())?;
    let n = l.n().clone();
    let expected = euler_phi(&n)? * n.pow(5);
    let mut r = serde_json::Map::new();
    r.insert("order".into(), json!(l.order().to_string()));
    r.insert(
        "center_generator".into(),
        json!(l.group().format(&l.power(&l.gen_b(), l.group().params().beta_minus_one()))),
    );
    let mut verdicts = vec![];
    if aut_order {
        let all = l_aut_group(&l, cap)?;
        let inner: HashSet<_> = crate::lgroup::inn(&l, cap)?.into_iter().collect();
        r.insert("aut_order".into(), json!(all.len().to_string()));
        r.insert("inn_order".into(), json!(inner.len().to_string()));
        verdicts.push(Verdict::compare("lgroup.aut-order", &expected, all.len()));
    } else {
        r.insert("aut_order".into(), json!(expected.to_string()));
    }
    if let Some(imgs) = omega {
        let (a, b) = parse_pair(l.group(), imgs)?;
        let f = LAutomorphism::new(&l, a, b)?;
        let m = omega_matrix(&l, &f)?;
        r.insert("automorphism".into(), json!(f.to_string()));
        r.insert(
            "omega".into(),
            json!(m.iter().map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()),
        );
    }
    Ok(report(l.group(), "lgroup", Value::Object(r), verdicts))
}

/// GAP input for `T(β)` on `B, C` and, when defined, `L(β)` on `a, b`.
pub fn gap_presentation(g: &MacdonaldGroup) -> String {
    let p = g.params();
    let (n, n2) = (&p.n, &p.n2);
    let conj = g.conjugate(&g.gen_b(), &g.gen_c());
    debug_assert!(conj.a_exp().to_u64() == Some(0) && conj.c_exp().to_u64() == Some(0));
    let mut rels = vec![format!("B^{n2}"), format!("C^-1*B*C*B^-{}", conj.b_exp())];
    match &p.half {
        None => rels.push(format!("C^{n}")),
        Some(h) => rels.push(format!("C^{n}*B^-{h}")),
    }
    let mut out = format!(
        "# torsion subgroup of G({beta}), order {order}\n\
         F := FreeGroup(\"B\", \"C\");;\n\
         B := F.1;; C := F.2;;\n\
         T := F / [ {} ];;\n",
        rels.join(", "),
        beta = p.beta,
        order = p.torsion_order(),
    );
    match LGroup::new(p.beta.clone()) {
        Ok(l) => out.push_str(&format!(
            "\n# L({beta}) = G({beta}) / <A^{n}>, order {order}\n\
             F2 := FreeGroup(\"a\", \"b\");;\n\
             a := F2.1;; b := F2.2;;\n\
             L := F2 / [ a^{n}, Comm(a,b)^-1*a*Comm(a,b)*a^-1, Comm(b,a)^-1*b*Comm(b,a)*b^-({beta}) ];;\n",
            beta = p.beta,
            order = l.order(),
        )),
        Err(e) => out.push_str(&format!("\n# L({}) not exported: {e}\n", p.beta)),
    }
    out
}
