//! The `metacyclic` command line.

use std::collections::{BTreeMap, BTreeSet};

use clap::{Args, Parser, Subcommand};
use metacyclic::enumerate::DEFAULT_ORDER_CAP;
use metacyclic::oracle::{brute_classes, OracleConfig};
use metacyclic::{
    are_isomorphic, construct, is_nilpotent, mcinv, metacyclic_groups_by_order, metacyclic_id, Error,
    MetacyclicId, MetacyclicParams, UnitSubgroup,
};
use serde::Serialize;

/// Invariants, isomorphism and enumeration of finite metacyclic groups
/// `<a, b | a^m = 1, b^n = a^s, a^b = a^t>`.
#[derive(Debug, Parser)]
#[command(name = "metacyclic", version)]
pub struct Cli {
    /// Print JSON instead of whitespace-separated naturals.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest group order to accept (enumerate: 100000, oracle-check: 256).
    #[arg(long, global = true, value_name = "N")]
    pub max_order: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariant list (m n s t) of G(m,n,s,t).
    Invariants(Presentation),
    /// Invariant (m n s m' g) with Δ = <g> mod m'.
    Mcinv(Presentation),
    /// Whether two presentations define isomorphic groups (exit 1 if not).
    Iso {
        m1: u64,
        n1: u64,
        s1: u64,
        t1: u64,
        m2: u64,
        n2: u64,
        s2: u64,
        t2: u64,
    },
    /// Invariant lists of all metacyclic groups of the given order.
    Enumerate { order: u64 },
    /// A presentation realizing (m, n, s, <g> mod m').
    Construct { m: u64, n: u64, s: u64, m_prime: u64, generator: u64 },
    /// Whether G(m,n,s,t) is nilpotent.
    Nilpotent(Presentation),
    /// Compare brute-force isomorphism classes with invariant classes.
    OracleCheck { order: u64 },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Presentation {
    pub m: u64,
    pub n: u64,
    pub s: u64,
    pub t: u64,
}

impl Presentation {
    fn params(&self) -> metacyclic::Result<MetacyclicParams> {
        MetacyclicParams::new(self.m, self.n, self.s, self.t)
    }
}

/// Exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FALSE: u8 = 1;
    pub const INVALID: u8 = 2;
    pub const CAP: u8 = 3;
}

/// What a command printed and how it ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: exit::OK }
    }

    fn failure(err: &Error) -> Self {
        let code = match err {
            Error::CapExceeded { .. } => exit::CAP,
            _ => exit::INVALID,
        };
        Outcome { stdout: String::new(), stderr: format!("error: {err}\n"), code }
    }
}

#[derive(Serialize)]
struct IdRecord {
    m: u64,
    n: u64,
    s: u64,
    t: u64,
}

impl From<&MetacyclicId> for IdRecord {
    fn from(id: &MetacyclicId) -> Self {
        IdRecord { m: id.m, n: id.n, s: id.s, t: id.t }
    }
}

impl From<&MetacyclicParams> for IdRecord {
    fn from(p: &MetacyclicParams) -> Self {
        let (m, n, s, t) = p.as_tuple();
        IdRecord { m, n, s, t }
    }
}

#[derive(Serialize)]
struct McinvRecord {
    m: u64,
    n: u64,
    s: u64,
    m_prime: u64,
    t: u64,
}

#[derive(Serialize)]
struct OracleRecord {
    order: u64,
    brute_classes: usize,
    invariant_classes: usize,
    agree: bool,
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("records serialize");
    s.push('\n');
    s
}

fn plain_id(m: u64, n: u64, s: u64, t: u64) -> String {
    format!("{m} {n} {s} {t}\n")
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(outcome) => outcome,
        Err(err) => Outcome::failure(&err),
    }
}

fn execute(cli: &Cli) -> metacyclic::Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Invariants(p) => {
            let id = metacyclic_id(&p.params()?)?;
            Ok(Outcome::ok(if json { json_line(&IdRecord::from(&id)) } else { plain_id(id.m, id.n, id.s, id.t) }))
        }
        Command::Mcinv(p) => {
            let (m, n, s, m_prime, t) = mcinv(&p.params()?)?.as_tuple();
            Ok(Outcome::ok(if json {
                json_line(&McinvRecord { m, n, s, m_prime, t })
            } else {
                format!("{m} {n} {s} {m_prime} {t}\n")
            }))
        }
        Command::Iso { m1, n1, s1, t1, m2, n2, s2, t2 } => {
            let p1 = MetacyclicParams::new(*m1, *n1, *s1, *t1)?;
            let p2 = MetacyclicParams::new(*m2, *n2, *s2, *t2)?;
            let iso = are_isomorphic(&p1, &p2)?;
            let stdout = if json { json_line(&serde_json::json!({ "isomorphic": iso })) } else { format!("{iso}\n") };
            Ok(Outcome { stdout, stderr: String::new(), code: if iso { exit::OK } else { exit::FALSE } })
        }
        Command::Enumerate { order } => {
            let cap = cli.max_order.unwrap_or(DEFAULT_ORDER_CAP);
            if *order == 0 {
                return Err(Error::Precondition("order must be positive".into()));
            }
            let ids = metacyclic_groups_by_order(*order, cap)?;
            let stdout = ids
                .iter()
                .map(|id| if json { json_line(&IdRecord::from(id)) } else { plain_id(id.m, id.n, id.s, id.t) })
                .collect();
            Ok(Outcome::ok(stdout))
        }
        Command::Construct { m, n, s, m_prime, generator } => {
            let delta = UnitSubgroup::cyclic(*m_prime, *generator as i64)?;
            let p = construct(*m, *n, *s, &delta)?;
            let (m, n, s, t) = p.as_tuple();
            Ok(Outcome::ok(if json { json_line(&IdRecord::from(&p)) } else { plain_id(m, n, s, t) }))
        }
        Command::Nilpotent(p) => {
            let nilpotent = is_nilpotent(&p.params()?)?;
            Ok(Outcome::ok(if json {
                json_line(&serde_json::json!({ "nilpotent": nilpotent }))
            } else {
                format!("{nilpotent}\n")
            }))
        }
        Command::OracleCheck { order } => {
            let config = match cli.max_order {
                Some(cap) => OracleConfig::with_max_order(cap),
                None => OracleConfig::default(),
            };
            let record = oracle_check(*order, &config)?;
            let stdout = if json {
                json_line(&record)
            } else {
                format!(
                    "brute classes: {}\ninvariant classes: {}\n{}\n",
                    record.brute_classes,
                    record.invariant_classes,
                    if record.agree { "AGREE" } else { "DISAGREE" }
                )
            };
            Ok(Outcome { stdout, stderr: String::new(), code: if record.agree { exit::OK } else { exit::FALSE } })
        }
    }
}

fn oracle_check(order: u64, config: &OracleConfig) -> metacyclic::Result<OracleRecord> {
    if order == 0 {
        return Err(Error::Precondition("order must be positive".into()));
    }
    let classes = brute_classes(order, config)?;
    let mut by_id: BTreeMap<MetacyclicId, BTreeSet<usize>> = BTreeMap::new();
    let mut agree = true;
    for (k, class) in classes.iter().enumerate() {
        let ids: BTreeSet<MetacyclicId> = class.iter().map(metacyclic_id).collect::<Result<_, _>>()?;
        agree &= ids.len() == 1;
        for id in ids {
            by_id.entry(id).or_default().insert(k);
        }
    }
    agree &= by_id.values().all(|ks| ks.len() == 1);
    Ok(OracleRecord { order, brute_classes: classes.len(), invariant_classes: by_id.len(), agree })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("metacyclic").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn commands() {
        assert_eq!(run_args(&["invariants", "20", "4", "8", "11"]).stdout, "4 20 4 3\n");
        assert_eq!(run_args(&["mcinv", "1", "5", "1", "0"]).stdout, "1 5 1 1 0\n");
        assert_eq!(run_args(&["iso", "1", "1", "1", "0", "1", "1", "1", "0"]).code, exit::OK);
        assert_eq!(run_args(&["enumerate", "1"]).stdout, "1 1 1 0\n");
        assert_eq!(run_args(&["construct", "8", "48", "4", "4", "1"]).stdout, "8 48 4 5\n");
        assert_eq!(run_args(&["nilpotent", "3", "2", "3", "2"]).stdout, "false\n");
        assert_eq!(run_args(&["invariants", "2", "2", "2", "0"]).code, exit::INVALID);
        assert_eq!(run_args(&["--max-order", "10", "enumerate", "12"]).code, exit::CAP);
        assert_eq!(run_args(&["oracle-check", "24"]).stdout.lines().last(), Some("AGREE"));
    }

    #[test]
    fn json_records() {
        let out = run_args(&["--json", "mcinv", "20", "4", "8", "11"]).stdout;
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v, serde_json::json!({"m": 4, "n": 20, "s": 4, "m_prime": 4, "t": 3}));
        let out = run_args(&["enumerate", "6", "--json"]).stdout;
        assert_eq!(out.lines().count(), 2);
        for line in out.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v.get("t").is_some());
        }
    }
}
