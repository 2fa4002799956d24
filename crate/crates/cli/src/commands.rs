//! The subcommands, as functions from parsed input to printed output and
//! an exit status.

use std::fmt::Write as _;

use p5free_core::enumerate::{self, MAX_N};
use p5free_core::generate::{generate as generate_member, Kind};
use p5free_core::{
    build_structure_partition, decompose, find_split_divide, graph6, reconstruct, validate_split_divide,
    validate_structure_partition, Error, Graph, RecognitionResult, Side, VertexSet,
};

use crate::cert::{Body, CertificateDoc};
use crate::format::{write_graph, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    /// Member, valid certificate, or successful run.
    Yes = 0,
    /// Non-member, invalid certificate, or a disagreement.
    No = 1,
    /// Usage, I/O or parse error.
    Usage = 2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { status: Status::Yes, stdout: String::new(), stderr: String::new() }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        let mut msg = msg.into();
        msg.push('\n');
        Outcome { status: Status::Usage, stdout: String::new(), stderr: msg }
    }

    fn worst(&mut self, s: Status) {
        self.status = self.status.max(s);
    }
}

/// Output switches shared by the subcommands.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Print {
    pub json: bool,
    pub quiet: bool,
}

impl Print {
    fn emit(self, out: &mut Outcome, doc: Option<&CertificateDoc>, summary: &str) {
        if self.quiet {
            return;
        }
        match (self.json, doc) {
            (true, Some(doc)) => {
                out.stdout.push_str(&doc.to_json());
                out.stdout.push('\n');
            }
            (true, None) => {}
            (false, _) => {
                out.stdout.push_str(summary);
                out.stdout.push('\n');
            }
        }
    }
}

fn list(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn set(s: &VertexSet) -> String {
    format!("{{{}}}", list(&s.to_vec()))
}

pub fn recognize(graphs: &[Graph], print: Print) -> Outcome {
    let mut out = Outcome::new();
    for g in graphs {
        let code = graph6::encode(g);
        let (status, body, summary) = match decompose(g) {
            RecognitionResult::Tree(tree) => {
                let s = format!("{code}: member ({} nodes, depth {})", tree.node_count(), tree.depth());
                (Status::Yes, Body::Tree { tree }, s)
            }
            RecognitionResult::Witness(witness) => {
                let s = format!("{code}: not a member (induced {} on {})", witness.pattern, list(&witness.vertices));
                (Status::No, Body::Witness { witness }, s)
            }
        };
        out.worst(status);
        print.emit(&mut out, Some(&CertificateDoc::new(Some(code), body)), &summary);
    }
    out
}

/// Checks `doc` against `g`: trees must replay to `g`, every other
/// certificate must pass its validator on `g`.
pub fn check_certificate(g: &Graph, doc: &CertificateDoc) -> Result<(), String> {
    if let Some(code) = &doc.graph6 {
        let h = graph6::decode(code).map_err(|e| format!("certificate names an unreadable graph: {e}"))?;
        if h != *g {
            return Err(format!("certificate is for {code}, not {}", graph6::encode(g)));
        }
    }
    fn violations<V: std::fmt::Debug>(v: Result<Vec<V>, Error>, what: &str) -> Result<(), String> {
        match v {
            Ok(v) if v.is_empty() => Ok(()),
            Ok(v) => Err(format!("{what} violates {v:?}")),
            Err(e) => Err(e.to_string()),
        }
    }
    match &doc.body {
        Body::Tree { tree } => match reconstruct(tree) {
            Ok(h) if h == *g => Ok(()),
            Ok(_) => Err("tree replays to a different graph".into()),
            Err(e) => Err(e.to_string()),
        },
        Body::Witness { witness } => witness.validate(g),
        Body::Split { partition } => partition.validate(g),
        Body::Module { module } => module.validate(g).map_err(|e| e.to_string()),
        Body::Divide { divide } => violations(validate_split_divide(g, divide), "divide"),
        Body::Structure { partition } => violations(validate_structure_partition(g, partition), "partition"),
    }
}

pub fn verify(graphs: &[Graph], cert: &str, print: Print) -> Outcome {
    let [g] = graphs else {
        return Outcome::usage(format!("verify takes one graph, input holds {}", graphs.len()));
    };
    let doc = match CertificateDoc::from_json(cert) {
        Ok(doc) => doc,
        Err(e) => return Outcome::usage(e),
    };
    let mut out = Outcome::new();
    match check_certificate(g, &doc) {
        Ok(()) => print.emit(&mut out, None, "valid"),
        Err(e) => {
            out.worst(Status::No);
            print.emit(&mut out, None, &format!("invalid: {e}"));
        }
    }
    out
}

/// The generated graph on stdout (or its certificate with `--json`), plus
/// the certificate document.
pub fn generate(kind: Kind, n: usize, seed: u64, format: Format, print: Print) -> (Outcome, CertificateDoc) {
    let gen = match generate_member(kind, n, seed) {
        Ok(gen) => gen,
        Err(Error::EmptyGraph) => {
            let doc = CertificateDoc::new(None, Body::Tree { tree: decompose(&Graph::new(1)).tree().unwrap().clone() });
            return (Outcome::usage("--n must be at least 1"), doc);
        }
        Err(e) => panic!("generator self-audit failed for {kind} n={n} seed={seed}: {e}"),
    };
    let doc = CertificateDoc::new(Some(graph6::encode(&gen.graph)), Body::Tree { tree: gen.tree });
    let mut out = Outcome::new();
    if !print.quiet {
        if print.json {
            out.stdout = doc.to_json() + "\n";
        } else {
            out.stdout = write_graph(&gen.graph, format);
        }
    }
    (out, doc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Agree,
    Count,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "agree" => Ok(Mode::Agree),
            "count" => Ok(Mode::Count),
            _ => Err(format!("unknown mode `{s}` (expected agree or count)")),
        }
    }
}

pub fn enumerate(n_max: usize, mode: Mode, print: Print) -> Outcome {
    if n_max > MAX_N {
        return Outcome::usage(format!("--n is limited to {MAX_N}"));
    }
    let mut out = Outcome::new();
    for n in 1..=n_max {
        let line = match mode {
            Mode::Count => {
                let c = enumerate::count_members(n);
                if print.json {
                    serde_json::to_string(&c).unwrap()
                } else {
                    format!("n={} graphs={} members={}", c.n, c.graphs, c.members)
                }
            }
            Mode::Agree => {
                let r = enumerate::agree(n);
                for d in &r.disagreements {
                    let _ = writeln!(out.stderr, "disagreement at {}: {}", d.graph6, d.what);
                }
                if !r.disagreements.is_empty() {
                    out.worst(Status::No);
                }
                if print.json {
                    serde_json::to_string(&r).unwrap()
                } else {
                    format!(
                        "n={} graphs={} members={} split={} disagreements={}",
                        r.n,
                        r.graphs,
                        r.members,
                        r.split,
                        r.disagreements.len()
                    )
                }
            }
        };
        if !print.quiet {
            out.stdout.push_str(&line);
            out.stdout.push('\n');
        }
    }
    out
}

// a failed hypothesis as a certificate, where one exists
fn refusal(e: Error) -> Result<(Body, String), String> {
    match e {
        Error::NotPrime(module) => {
            let s = format!("not prime: {} is a proper homogeneous set", set(&module.members));
            Ok((Body::Module { module }, s))
        }
        Error::Contains(witness) => {
            let s = format!("contains an induced {} on {}", witness.pattern, list(&witness.vertices));
            Ok((Body::Witness { witness }, s))
        }
        other => Err(other.to_string()),
    }
}

pub fn divide(graphs: &[Graph], print: Print) -> Outcome {
    let mut out = Outcome::new();
    for g in graphs {
        let code = graph6::encode(g);
        let (status, body, summary) = match find_split_divide(g) {
            Ok(Some(d)) => {
                let side = match d.side {
                    Side::InG => "graph",
                    Side::InComplement => "complement",
                };
                let s = format!(
                    "split divide in the {side}: A={} B={} C={} L={} T={}",
                    set(&d.a),
                    set(&d.b),
                    set(&d.c),
                    set(&d.l),
                    set(&d.t)
                );
                (Status::Yes, Body::Divide { divide: d }, s)
            }
            Ok(None) => {
                let p = p5free_core::detect::split_partition(g).expect("no divide only for split graphs");
                let s = format!("split: clique {} stable {}", set(&p.clique), set(&p.stable));
                (Status::Yes, Body::Split { partition: p }, s)
            }
            Err(e) => match refusal(e) {
                Ok((body, s)) => (Status::No, body, s),
                Err(msg) => {
                    out.worst(Status::No);
                    let _ = writeln!(out.stderr, "{code}: {msg}");
                    continue;
                }
            },
        };
        out.worst(status);
        print.emit(&mut out, Some(&CertificateDoc::new(Some(code.clone()), body)), &format!("{code}: {summary}"));
    }
    out
}

pub fn structure(graphs: &[Graph], print: Print) -> Outcome {
    let mut out = Outcome::new();
    for g in graphs {
        let code = graph6::encode(g);
        let (status, body, summary) = match build_structure_partition(g) {
            Ok(p) => {
                let mut s = format!("m={}", p.m());
                for (i, (x, y)) in p.xs.iter().zip(&p.ys).enumerate() {
                    let _ = write!(s, " X{i}={} Y{i}={}", set(x), set(y));
                }
                (Status::Yes, Body::Structure { partition: p }, s)
            }
            Err(e) => match refusal(e) {
                Ok((body, s)) => (Status::No, body, s),
                Err(msg) => {
                    out.worst(Status::No);
                    if !print.quiet && !print.json {
                        let _ = writeln!(out.stdout, "{code}: {msg}");
                    }
                    continue;
                }
            },
        };
        out.worst(status);
        print.emit(&mut out, Some(&CertificateDoc::new(Some(code.clone()), body)), &format!("{code}: {summary}"));
    }
    out
}
