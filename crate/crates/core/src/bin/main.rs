use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use poset_balance::constructions::{
    boolean_lattice, coordinate_line_label, from_permutation, ideal_lattice, partition_lattice,
    subspace_lattice,
};
use poset_balance::extensions::{
    balance_constant, count_extensions, is_alpha_balanced, pair_matrix, prob_before,
};
use poset_balance::search::{conjecture_scan_resumable, min_delta_by_width_with, MAX_SEARCH_N};
use poset_balance::structure::{certificates, CertificateKind};
use poset_balance::tableaux::{find_almost_twin_in_shape, hook_lengths, shape_to_poset, syt_count};
use poset_balance::{
    figures, repro, Error, ExactRatio, Exec, Permutation, Poset, PosetJson, Result, Shape,
};

#[derive(Parser)]
#[command(
    name = "poset-balance",
    version,
    about = "Exact balance constants of finite posets"
)]
struct Cli {
    /// Machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Evaluate everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Default)]
struct Source {
    /// Poset JSON file: {"n": 3, "covers": [[1,2]]}.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Permutation in one-line notation, e.g. 41325.
    #[arg(long)]
    perm: Option<Permutation>,
    /// Straight diagram, e.g. 4,4,2.
    #[arg(long)]
    shape: Option<String>,
    /// Skew diagram as outer/inner, e.g. 9,7,7,5,5,5,5/6,5,3,3,3,2.
    #[arg(long)]
    skew: Option<String>,
    /// Read --shape or --skew as a shifted diagram.
    #[arg(long)]
    shifted: bool,
    /// A built-in example poset, e.g. fig1 or fig11-A.
    #[arg(long)]
    figure: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of linear extensions.
    Count(Source),
    /// CSV of e(P + xy) for all ordered pairs.
    Matrix(Source),
    /// Balance constant and the pairs attaining it.
    Balance {
        #[command(flatten)]
        source: Source,
        /// Fail unless some pair is α-balanced.
        #[arg(long)]
        alpha: Option<ExactRatio>,
        /// Report P(x before y) for this pair, e.g. 5,6.
        #[arg(long, value_parser = parse_pair)]
        pair: Option<(usize, usize)>,
    },
    /// Structural certificates that force a balanced pair.
    Detect {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = DetectKind::All)]
        kind: DetectKind,
    },
    /// Diagram, hook lengths, tableau count and almost twin pair of a shape.
    Shape(Source),
    /// Classical lattices with their balanced pair.
    Lattice {
        #[arg(value_enum)]
        kind: LatticeKind,
        /// Rank parameter (n for B_n, Π_n, L_n(q)).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Field size for subspace lattices.
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Base poset for `ideals`.
        #[command(flatten)]
        source: Source,
        /// Emit the lattice as DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Exhaustive search over posets up to isomorphism.
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
    /// Recompute a published example and compare with its stated values.
    Repro {
        /// Target name or `all`.
        target: String,
    },
    /// Hasse diagram in Graphviz DOT.
    ExportDot(Source),
}

#[derive(Subcommand)]
enum SearchMode {
    /// Balance constant of every class on n elements.
    Scan {
        #[arg(long)]
        n: usize,
        /// JSON lines, one per class.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Progress file; an interrupted scan resumes from it.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long, default_value_t = MAX_SEARCH_N)]
        max_n: usize,
    },
    /// Smallest δ among classes on n elements with width at least w.
    MinDelta {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        min_width: usize,
        #[arg(long, default_value_t = MAX_SEARCH_N)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DetectKind {
    All,
    Twin,
    AlmostTwin,
    Auto,
    Anti,
    Inversion,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeKind {
    Boolean,
    Partition,
    Subspace,
    Ideals,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected x,y")?;
    let x = a.trim().parse().map_err(|_| format!("bad element {a:?}"))?;
    let y = b.trim().parse().map_err(|_| format!("bad element {b:?}"))?;
    Ok((x, y))
}

/// What a command produced: text, JSON, and whether its checks passed.
struct Outcome {
    text: String,
    json: serde_json::Value,
    pass: bool,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome {
            text,
            json,
            pass: true,
        }
    }
}

impl Source {
    fn shape(&self) -> Result<Option<Shape>> {
        match (&self.shape, &self.skew) {
            (Some(_), Some(_)) => Err(Error::Parse("give --shape or --skew, not both".into())),
            (Some(s), None) | (None, Some(s)) => Shape::parse(s, self.shifted).map(Some),
            (None, None) => Ok(None),
        }
    }

    fn poset(&self) -> Result<Poset> {
        let given = [
            self.input.is_some(),
            self.perm.is_some(),
            self.shape.is_some() || self.skew.is_some(),
            self.figure.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(Error::Parse(
                "give exactly one of --input, --perm, --shape/--skew, --figure".into(),
            ));
        }
        if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path)?;
            let j: PosetJson = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            return Poset::from_json(&j);
        }
        if let Some(pi) = &self.perm {
            return Ok(from_permutation(pi));
        }
        if let Some(key) = &self.figure {
            let f = figures::figure(key).ok_or_else(|| {
                let known: Vec<&str> = figures::FIGURE_POSETS.iter().map(|f| f.key).collect();
                Error::Parse(format!(
                    "unknown figure {key:?}; known: {}",
                    known.join(", ")
                ))
            })?;
            return f.poset();
        }
        shape_to_poset(&self.shape()?.expect("checked above"))
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    match &cli.command {
        Command::Count(src) => {
            let e = count_extensions(&src.poset()?);
            Ok(Outcome::ok(
                e.to_string(),
                json!({ "extensions": e.to_string() }),
            ))
        }
        Command::Matrix(src) => {
            let p = src.poset()?;
            let stats = poset_balance::extensions::pair_matrix_with(&p, exec);
            let rows: Vec<Vec<String>> = stats
                .pair_counts
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect();
            Ok(Outcome::ok(
                stats.to_csv().trim_end().to_string(),
                json!({ "total": stats.total.to_string(), "pair_counts": rows }),
            ))
        }
        Command::Balance {
            source,
            alpha,
            pair,
        } => balance(&source.poset()?, alpha.as_ref(), *pair),
        Command::Detect { source, kind } => detect(source, *kind),
        Command::Shape(src) => shape(src),
        Command::Lattice {
            kind,
            n,
            q,
            source,
            dot,
        } => lattice(*kind, *n, *q, source, *dot),
        Command::Search { mode } => search(mode, exec),
        Command::Repro { target } => {
            let reports = repro::run(target)?;
            let pass = reports.iter().all(|r| r.pass);
            let text = reports.iter().map(|r| r.to_string()).collect::<String>();
            let summary = format!(
                "{} of {} targets pass",
                reports.iter().filter(|r| r.pass).count(),
                reports.len()
            );
            Ok(Outcome {
                text: format!("{text}{summary}"),
                json: json!({ "pass": pass, "targets": reports }),
                pass,
            })
        }
        Command::ExportDot(src) => {
            let dot = src.poset()?.to_dot();
            Ok(Outcome::ok(
                dot.trim_end().to_string(),
                json!({ "dot": dot }),
            ))
        }
    }
}

fn balance(p: &Poset, alpha: Option<&ExactRatio>, pair: Option<(usize, usize)>) -> Result<Outcome> {
    let report = balance_constant(p);
    let mut text = format!("δ = {}", report.delta);
    if let Some((x, y)) = report.witness {
        text.push_str(&format!(
            "\nwitness: ({x},{y}), P({x} before {y}) = {}",
            prob_before(p, x, y)?
        ));
    } else {
        text.push_str("\nno incomparable pair (chain)");
    }
    let mut json = json!({ "delta": report.delta, "witness": report.witness, "balanced_pairs": report.all_balanced_pairs });
    if let Some((x, y)) = pair {
        let pr = prob_before(p, x, y)?;
        text.push_str(&format!("\nP({x} before {y}) = {pr}"));
        json["pair"] = json!({ "pair": [x, y], "prob": pr });
    }
    let mut pass = true;
    if let Some(a) = alpha {
        // Validates α even when P is a chain.
        let witness_ok = match report.witness {
            Some((x, y)) => is_alpha_balanced(p, x, y, a)?,
            None => {
                is_alpha_balanced(&Poset::antichain(2), 1, 2, a)?;
                false
            }
        };
        pass = witness_ok;
        text.push_str(&format!(
            "\n{}-balanced pair: {}",
            a,
            if pass { "yes" } else { "no" }
        ));
        json["alpha"] = json!({ "alpha": a, "balanced": pass });
    }
    Ok(Outcome { text, json, pass })
}

fn detect(src: &Source, kind: DetectKind) -> Result<Outcome> {
    let p = src.poset()?;
    let all = certificates(&p, src.perm.as_ref())?;
    let wanted = |k: CertificateKind| match kind {
        DetectKind::All => true,
        DetectKind::Twin => k == CertificateKind::Twin,
        DetectKind::AlmostTwin => k == CertificateKind::AlmostTwin,
        DetectKind::Auto => k == CertificateKind::Auto2cycle,
        DetectKind::Anti => k == CertificateKind::AntiAutoFixedPair,
        DetectKind::Inversion => k == CertificateKind::InversionPatternPair,
    };
    if kind == DetectKind::Inversion && src.perm.is_none() {
        return Err(Error::Unsupported(
            "inversion-pattern detection needs --perm".into(),
        ));
    }
    let found: Vec<_> = all.into_iter().filter(|c| wanted(c.kind)).collect();
    let text = if found.is_empty() {
        "no certificates".to_string()
    } else {
        found
            .iter()
            .map(|c| {
                let name = serde_json::to_value(c.kind).unwrap();
                format!(
                    "{} ({},{}) bound {}",
                    name.as_str().unwrap(),
                    c.pair.0,
                    c.pair.1,
                    c.bound
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    Ok(Outcome::ok(text, json!({ "certificates": found })))
}

fn shape(src: &Source) -> Result<Outcome> {
    let s = src
        .shape()?
        .ok_or_else(|| Error::Parse("shape needs --shape or --skew".into()))?;
    let mut text = s.diagram();
    let mut json = json!({ "shape": s.to_string(), "shifted": s.is_shifted(), "cells": s.size() });
    if s.is_straight() {
        let hooks = hook_lengths(&s)?;
        let f = syt_count(&s)?;
        for row in &hooks {
            text.push_str(
                &row.iter()
                    .map(|h| h.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            text.push('\n');
        }
        text.push_str(&format!("standard tableaux: {f}\n"));
        json["hooks"] = json!(hooks);
        json["syt"] = json!(f.to_string());
    } else {
        let e = count_extensions(&shape_to_poset(&s)?);
        text.push_str(&format!("standard tableaux: {e}\n"));
        json["syt"] = json!(e.to_string());
    }
    match find_almost_twin_in_shape(&s) {
        Ok(choice) => {
            let (a, b) = choice.pair;
            let p = shape_to_poset(&s)?;
            let pr = prob_before(&p, s.element_of(a).unwrap(), s.element_of(b).unwrap())?;
            text.push_str(&format!(
                "almost twin pair: {a} {b}, P({a} before {b}) = {pr}"
            ));
            json["almost_twin"] =
                json!({ "pair": [a.to_string(), b.to_string()], "case": choice.case, "prob": pr });
        }
        Err(Error::Chain) => text.push_str("diagram poset is a chain"),
        Err(e) => return Err(e),
    }
    Ok(Outcome::ok(text, json))
}

fn lattice(kind: LatticeKind, n: usize, q: u64, src: &Source, dot: bool) -> Result<Outcome> {
    let (l, pair) = match kind {
        LatticeKind::Boolean => (
            boolean_lattice(n)?,
            Some(("{1}".to_string(), "{2}".to_string())),
        ),
        LatticeKind::Partition => {
            let rest: String = (4..=n).map(|k| format!("/{k}")).collect();
            (
                partition_lattice(n)?,
                Some((format!("13/2{rest}"), format!("1/23{rest}"))),
            )
        }
        LatticeKind::Subspace => {
            let pair = (n >= 2).then(|| (coordinate_line_label(n, 1), coordinate_line_label(n, 2)));
            (subspace_lattice(n, q)?, pair)
        }
        LatticeKind::Ideals => (ideal_lattice(&src.poset()?)?, None),
    };
    if dot {
        let d = l.to_dot();
        return Ok(Outcome::ok(d.trim_end().to_string(), json!({ "dot": d })));
    }
    let stats = pair_matrix(&l);
    let mut text = format!(
        "{} elements, {} covers, e = {}",
        l.len(),
        l.covers().len(),
        stats.total
    );
    let mut json = json!({ "elements": l.len(), "covers": l.covers().len(), "extensions": stats.total.to_string() });
    if let Some((a, b)) = pair.filter(|_| l.len() >= 2) {
        if let (Some(x), Some(y)) = (l.element_by_label(&a), l.element_by_label(&b)) {
            let pr = stats.prob(x, y);
            text.push_str(&format!("\nP({a} before {b}) = {pr}"));
            json["pair"] = json!({ "pair": [a, b], "prob": pr });
        }
    }
    let delta = poset_balance::extensions::balance_from_stats(&l, &stats).delta;
    text.push_str(&format!("\nδ = {delta}"));
    json["delta"] = json!(delta);
    Ok(Outcome::ok(text, json))
}

fn search(mode: &SearchMode, exec: Exec) -> Result<Outcome> {
    match mode {
        SearchMode::Scan {
            n,
            out,
            checkpoint,
            max_n,
        } => {
            let mut sink: Box<dyn Write> = match out {
                Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
                None => Box::new(std::io::sink()),
            };
            let report =
                conjecture_scan_resumable(*n, exec, *max_n, checkpoint.as_deref(), &mut *sink)?;
            sink.flush()?;
            let pass =
                report.below_one_third.is_empty() && report.one_third_not_linear_sum.is_empty();
            let mut text = format!(
                "n = {}: {} classes, {} chain",
                report.n, report.total, report.chain_count
            );
            if let Some(m) = &report.min_non_chain {
                text.push_str(&format!(
                    "\nmin δ over non-chains: {} at covers {:?}",
                    m.delta, m.covers
                ));
            }
            if let Some(m) = &report.min_width_at_least_3 {
                text.push_str(&format!(
                    "\nmin δ with width >= 3: {} at covers {:?}",
                    m.delta, m.covers
                ));
            }
            text.push_str(&format!(
                "\nδ = 1/3: {} classes, {} not a linear sum of singletons and T\nδ < 1/3: {}",
                report.exactly_one_third.len(),
                report.one_third_not_linear_sum.len(),
                report.below_one_third.len()
            ));
            Ok(Outcome {
                text,
                json: serde_json::to_value(&report).unwrap(),
                pass,
            })
        }
        SearchMode::MinDelta {
            n,
            min_width,
            max_n,
        } => match min_delta_by_width_with(*n, *min_width, exec, *max_n)? {
            Some((d, c)) => Ok(Outcome::ok(
                format!("min δ = {d} at covers {:?}", c.covers()),
                json!({ "delta": d, "covers": c.covers(), "code": c.code_hex() }),
            )),
            None => Ok(Outcome::ok(
                "no class qualifies".into(),
                json!({ "delta": null }),
            )),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                println!("{}", out.text.trim_end());
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
