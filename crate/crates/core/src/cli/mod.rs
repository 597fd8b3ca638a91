//! The `qmob` command line: every command reads `.qrep` files and prints one
//! JSON object on stdout.
//!
//! Exit codes: 0 on success, 1 when the library reports an error (printed as
//! `{"error": <code>, "message": ...}`), 2 on usage errors.

pub mod qrep;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::finiteness::{decide_finiteness, socle_series_counterexample_check};
use crate::lattice::{enumerable, enumerate_subreps, is_orthocyclic, is_poset_orthogonal, DEFAULT_CAP};
use crate::mobius::{
    count_length_l, count_maximal, count_simple_submodules, mobius_inversion_full, mobius_inversion_module,
    mobius_power, mobius_rep, mobius_rep_brute,
};
use crate::rep::{Representation, Subrep};
use qrep::{parse, parse_poset, QrepDocument};

#[derive(Parser, Debug)]
#[command(name = "qmob", version, about = "Möbius functions and submodule lattices of quiver representations")]
pub struct Cli {
    /// Worker threads for lattice enumeration (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Brute,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GArg {
    /// g ≡ 1
    One,
    /// g(N) = total dimension of N
    TotalDim,
    /// g(N) = 1 if N = M, else 0
    Top,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and validate a file.
    Validate { file: PathBuf },
    /// Dimension vector, flags, socle and radical. Also accepts `.poset` files.
    Info { file: PathBuf },
    /// Möbius value μ(0, M).
    Mobius {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Enumerate the submodule lattice.
    Lattice {
        file: PathBuf,
        /// Write the Hasse diagram (Graphviz) here.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write elements, covers and the Möbius table here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Submodule counts of S^t when |End S| = q.
    Count {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        length: Option<u32>,
    },
    /// Poset-orthogonality and orthocyclicity of two representations.
    Ortho {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Finiteness verdict with an infinite-lattice witness when there is one.
    Witness { file: PathBuf },
    /// Module-level Möbius inversion f(M) = Σ g(N)·μ(M/N).
    Invert {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "one")]
        g: GArg,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<QrepDocument> {
    parse(&read(path)?)
}

fn big(v: &BigInt) -> Value {
    json!(v.to_string())
}

fn rational(v: &BigRational) -> Value {
    json!(v.to_string())
}

fn subrep_json(u: &Subrep) -> Value {
    json!({
        "dims": u.dims(),
        "bases": u.spaces().iter().map(|s| s.basis().to_string()).collect::<Vec<_>>(),
    })
}

fn info_poset(text: &str) -> Result<Value> {
    let (p, _) = parse_poset(text)?;
    let mut out = json!({ "size": p.size(), "is_lattice": p.is_lattice() });
    if let (Some(b), Some(t)) = (p.bottom(), p.top()) {
        let label = |xs: Vec<usize>| xs.into_iter().map(|x| p.label(x).to_string()).collect::<Vec<_>>();
        out["atoms"] = json!(label(p.atoms()?));
        out["coatoms"] = json!(label(p.coatoms()?));
        out["mobius"] = big(&p.mobius_pair(b, t)?);
    }
    Ok(out)
}

fn info(rep: &Representation) -> Value {
    json!({
        "field": rep.field().to_string(),
        "vertices": rep.quiver().n_vertices(),
        "arrows": rep.quiver().arrows().len(),
        "relations": rep.relations().len(),
        "dims": rep.dimension_vector(),
        "total_dim": rep.total_dim(),
        "thin": rep.is_thin(),
        "semisimple": rep.is_semisimple(),
        "socle": rep.socle().dims(),
        "radical": rep.radical().dims(),
    })
}

fn g_fn(g: GArg, m: &Representation) -> impl Fn(&Subrep) -> BigRational + '_ {
    let top = Subrep::full(m);
    move |n: &Subrep| match g {
        GArg::One => BigRational::from_integer(1.into()),
        GArg::TotalDim => BigRational::from_integer(n.total_dim().into()),
        GArg::Top => BigRational::from_integer(BigInt::from(u8::from(*n == top))),
    }
}

/// Runs one parsed command and returns its JSON result.
pub fn execute(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Validate { file } => {
            let d = load(file)?;
            Ok(json!({ "valid": true, "dims": d.rep.dimension_vector() }))
        }
        Command::Info { file } => {
            let text = read(file)?;
            if file.extension().is_some_and(|e| e == "poset") {
                return info_poset(&text);
            }
            let d = parse(&text)?;
            let mut v = info(&d.rep);
            if let Some(n) = &d.name {
                v["name"] = json!(n);
            }
            Ok(v)
        }
        Command::Mobius { file, method, cap } => {
            let d = load(file)?;
            let r = match method {
                MethodArg::Closed => mobius_rep(&d.rep)?,
                MethodArg::Brute => mobius_rep_brute(&d.rep, *cap)?,
            };
            Ok(json!({ "mobius": r.value.to_string(), "method": r.method.to_string() }))
        }
        Command::Lattice { file, dot, json: json_path, cap } => {
            let d = load(file)?;
            let l = enumerate_subreps(&d.rep, *cap)?;
            if let Some(p) = dot {
                write(p, &l.to_dot())?;
            }
            if let Some(p) = json_path {
                write(p, &format!("{}\n", serde_json::to_string_pretty(&l.to_json()).expect("json")))?;
            }
            let by_length: serde_json::Map<String, Value> = l
                .count_by_length()
                .iter()
                .map(|(k, v)| (k.to_string(), big(v)))
                .collect();
            Ok(json!({
                "size": l.len(),
                "atoms": l.atoms().len(),
                "coatoms": l.coatoms().len(),
                "covers": l.covers().len(),
                "mobius": big(&l.mobius()),
                "by_length": by_length,
            }))
        }
        Command::Count { q, t, length } => {
            let mut v = json!({
                "q": q,
                "t": t,
                "simple": big(&count_simple_submodules(*q, *t)?),
                "maximal": big(&count_maximal(*q, *t)?),
                "mobius": big(&mobius_power(*q, *t)),
            });
            if let Some(l) = length {
                v["length"] = json!(l);
                v["count"] = big(&count_length_l(*q, *t, *l)?);
            }
            Ok(v)
        }
        Command::Ortho { a, b, cap } => {
            let (m, n) = (load(a)?.rep, load(b)?.rep);
            let o = is_poset_orthogonal(&m, &n, *cap)?;
            Ok(json!({
                "poset_orthogonal": o.orthogonal,
                "orthocyclic": is_orthocyclic(&m, &n, *cap)?,
                "sum_lattice_size": o.sum_size,
                "witness": o.witness.as_ref().map(subrep_json),
            }))
        }
        Command::Witness { file } => {
            let d = load(file)?;
            let v = decide_finiteness(&d.rep);
            let series = socle_series_counterexample_check(&d.rep)?;
            Ok(json!({
                "verdict": v.verdict.to_string(),
                "reason": v.reason.to_string(),
                "witness": v.witness.as_ref().map(|w| json!({
                    "vertex": w.vertex,
                    "sinking_set": w.sinking_set,
                    "quotient_dims": w.quotient.dimension_vector(),
                    "socle_dim_at_vertex": w.socle_dim(),
                })),
                "lattice_size": v.lattice.as_ref().map(|l| l.len()),
                "socle_series": series.layers,
                "socle_layers_thin": series.all_thin,
            }))
        }
        Command::Invert { file, g, cap } => {
            let d = load(file)?;
            let m = &d.rep;
            let interval = mobius_inversion_module(m, g_fn(*g, m), *cap)?;
            let full = if enumerable(m) {
                Some(mobius_inversion_full(m, g_fn(*g, m), *cap)?)
            } else {
                None
            };
            Ok(json!({
                "g": format!("{g:?}"),
                "radical_interval_sum": rational(&interval),
                "full_lattice_sum": full.as_ref().map(rational),
            }))
        }
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // a second initialization in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match execute(&cli.command) {
        Ok(v) => {
            println!("{v}");
            0
        }
        Err(e) => {
            let mut v = json!({ "error": e.code(), "message": e.to_string() });
            match &e {
                Error::Validation(list) => v["violations"] = json!(list),
                Error::Syntax { line, col, .. } => {
                    v["line"] = json!(line);
                    v["col"] = json!(col);
                }
                _ => {}
            }
            println!("{v}");
            1
        }
    }
}
