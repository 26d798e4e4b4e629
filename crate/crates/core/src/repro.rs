//! Named reproductions of published examples. Each target recomputes its
//! values from scratch and compares them to the table in [`crate::figures`].

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::constructions::{from_permutation, ideal_lattice};
use crate::error::{Error, Result};
use crate::extensions::{
    balance_constant, count_extensions, enumerate_extensions, pair_matrix, prob_before,
};
use crate::figures::{self, FigurePoset};
use crate::par::{self, Exec};
use crate::poset::Permutation;
use crate::ratio::ExactRatio;
use crate::structure::{
    anti_automorphisms, automorphisms, inversion_pattern_pairs, is_almost_twin, twin_pairs,
};
use crate::tableaux::{
    find_almost_twin_in_shape, hook_lengths, lemma_ratio, lemma_shape, rectangle_balance_pair,
    shape_corpus, shape_to_poset, syt_count, Shape,
};

/// One comparison of a computed value against its expectation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

impl Check {
    pub fn eq(label: impl Into<String>, computed: impl ToString, expected: impl ToString) -> Check {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        let pass = computed == expected;
        Check {
            label: label.into(),
            computed,
            expected,
            pass,
        }
    }

    pub fn holds(
        label: impl Into<String>,
        ok: bool,
        computed: impl ToString,
        expected: impl ToString,
    ) -> Check {
        Check {
            label: label.into(),
            computed: computed.to_string(),
            expected: expected.to_string(),
            pass: ok,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TargetReport {
    pub target: &'static str,
    pub description: &'static str,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl std::fmt::Display for TargetReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "[{}] {}: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.target,
            self.description
        )?;
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            if c.computed == c.expected {
                writeln!(f, "  {mark} {}: {}", c.label, c.computed)?;
            } else {
                writeln!(
                    f,
                    "  {mark} {}: computed {}, expected {}",
                    c.label, c.computed, c.expected
                )?;
            }
        }
        Ok(())
    }
}

/// A named reproduction.
#[derive(Clone, Copy)]
pub struct ReproTarget {
    pub name: &'static str,
    pub description: &'static str,
    build: fn() -> Result<Vec<Check>>,
}

impl ReproTarget {
    pub fn run(&self) -> TargetReport {
        let checks = match (self.build)() {
            Ok(c) => c,
            Err(e) => vec![Check::holds(
                "evaluation",
                false,
                format!("error: {e}"),
                "no error",
            )],
        };
        let pass = !checks.is_empty() && checks.iter().all(|c| c.pass);
        TargetReport {
            target: self.name,
            description: self.description,
            pass,
            checks,
        }
    }
}

pub const TARGETS: &[ReproTarget] = &[
    ReproTarget {
        name: "fig1",
        description: "extension count, pair matrix and δ of the six-element poset",
        build: fig1,
    },
    ReproTarget {
        name: "fig2-T",
        description: "T attains δ = 1/3",
        build: fig2_t,
    },
    ReproTarget {
        name: "fig4",
        description: "automorphism certificates for P and Q",
        build: fig4,
    },
    ReproTarget {
        name: "fig5",
        description: "anti-automorphism example",
        build: fig5,
    },
    ReproTarget {
        name: "fig6-jp",
        description: "ideal lattice of 2<3<4 plus a point",
        build: fig6_jp,
    },
    ReproTarget {
        name: "fig7",
        description: "hook lengths of (4,4,2)",
        build: fig7,
    },
    ReproTarget {
        name: "fig8",
        description: "small posets with low balance constant",
        build: fig8,
    },
    ReproTarget {
        name: "fig9",
        description: "permutation poset of 41325 and its twin pair",
        build: fig9,
    },
    ReproTarget {
        name: "fig11",
        description: "balance constants of A, B and C",
        build: fig11,
    },
    ReproTarget {
        name: "lemma37",
        description: "rectangle ratio identities and bounds",
        build: lemma37,
    },
    ReproTarget {
        name: "thm38",
        description: "balanced pair in a product of two chains",
        build: thm38,
    },
    ReproTarget {
        name: "thm41",
        description: "almost twin pairs in every small diagram",
        build: thm41,
    },
];

pub fn target_names() -> Vec<&'static str> {
    TARGETS.iter().map(|t| t.name).collect()
}

/// Runs one target by name, or every target for `"all"`.
pub fn run(name: &str) -> Result<Vec<TargetReport>> {
    if name == "all" {
        return Ok(TARGETS.iter().map(ReproTarget::run).collect());
    }
    TARGETS
        .iter()
        .find(|t| t.name.eq_ignore_ascii_case(name))
        .map(|t| vec![t.run()])
        .ok_or_else(|| {
            Error::Unsupported(format!(
                "unknown target {name:?}; known: all, {}",
                target_names().join(", ")
            ))
        })
}

fn fig(key: &str) -> &'static FigurePoset {
    figures::figure(key).unwrap_or_else(|| panic!("figure table has no {key}"))
}

fn delta_check(f: &FigurePoset) -> Result<Check> {
    let p = f.poset()?;
    let got = balance_constant(&p).delta;
    let want = f.expected_delta().expect("figure has a δ");
    let label = if f.transcribed {
        format!(
            "δ({}) [transcribed diagram; a mismatch means the cover list needs re-reading]",
            f.key
        )
    } else {
        format!("δ({})", f.key)
    };
    // compared as rationals; the stated form is kept for the report
    Ok(Check::holds(label, got == want, &got, f.delta.unwrap()))
}

fn fig1() -> Result<Vec<Check>> {
    let f = fig("fig1");
    let p = f.poset()?;
    let stats = pair_matrix(&p);
    let expected: Vec<Vec<BigUint>> = figures::FIG1_MATRIX
        .iter()
        .map(|r| r.iter().map(|&v| BigUint::from(v)).collect())
        .collect();
    let words: BTreeSet<String> = enumerate_extensions(&p).map(|w| w.to_string()).collect();
    let want_words: BTreeSet<String> = figures::FIG1_WORDS.iter().map(|w| w.to_string()).collect();
    let report = balance_constant(&p);
    Ok(vec![
        Check::eq("e(P)", &stats.total, f.extensions.unwrap()),
        Check::holds(
            "pair matrix",
            stats.pair_counts == expected,
            matrix_text(&stats.pair_counts),
            matrix_text(&expected),
        ),
        Check::holds(
            "extension words",
            words == want_words,
            words.len(),
            want_words.len(),
        ),
        delta_check(f)?,
        Check::eq(
            "witness",
            pair_text(report.witness),
            pair_text(Some(figures::FIG1_WITNESS)),
        ),
    ])
}

fn fig2_t() -> Result<Vec<Check>> {
    let f = fig("fig2-T");
    let p = f.poset()?;
    let report = balance_constant(&p);
    let third = ExactRatio::third();
    // Pairs achieving δ; any α above 1/3 leaves none balanced.
    let tight = report
        .all_balanced_pairs
        .iter()
        .all(|&(x, y)| prob_before(&p, x, y).is_ok_and(|r| r.min_with_complement() == third));
    Ok(vec![
        Check::eq("e(T)", count_extensions(&p), f.extensions.unwrap()),
        delta_check(f)?,
        Check::holds(
            "no pair beats 1/3",
            tight,
            pairs_text(&report.all_balanced_pairs),
            "every pair at 1/3",
        ),
    ])
}

fn fig4() -> Result<Vec<Check>> {
    let fp = fig("fig4-P");
    let fq = fig("fig4-Q");
    let p = fp.poset()?;
    let q = fq.poset()?;
    let p_cycles: Vec<(usize, usize)> = automorphisms(&p)?
        .iter()
        .flat_map(|m| m.two_cycles())
        .collect();
    let q_auts = automorphisms(&q)?;
    let (x, y, want) = figures::FIG4_Q_PLUS_34;
    let q34 = q
        .with_relation(x, y)
        .map(|r| count_extensions(&r))
        .unwrap_or_default();
    Ok(vec![
        Check::holds(
            "P has a 2-cycle automorphism",
            !p_cycles.is_empty(),
            pairs_text(&p_cycles),
            "non-empty",
        ),
        delta_check(fp)?,
        Check::eq("|Aut(Q)|", q_auts.len(), 1),
        Check::eq("e(Q)", count_extensions(&q), fq.extensions.unwrap()),
        Check::eq(format!("e(Q+{x}{y})"), q34, want),
        delta_check(fq)?,
    ])
}

fn fig5() -> Result<Vec<Check>> {
    let f = fig("fig5");
    let p = f.poset()?;
    let antis = anti_automorphisms(&p)?;
    let fixed: Vec<usize> = antis.iter().map(|m| m.fixed_points().len()).collect();
    Ok(vec![
        delta_check(f)?,
        Check::holds(
            "has an anti-automorphism",
            !antis.is_empty(),
            antis.len(),
            ">= 1",
        ),
        Check::holds(
            "fixed points per anti-automorphism",
            fixed.iter().all(|&k| k == 1),
            format!("{fixed:?}"),
            "all 1",
        ),
    ])
}

fn fig6_jp() -> Result<Vec<Check>> {
    let base = fig("fig6-P").poset()?;
    let j = ideal_lattice(&base)?;
    let stats = pair_matrix(&j);
    let mut checks = vec![Check::eq(
        "e(J(P))",
        &stats.total,
        figures::FIG6_JP_EXTENSIONS,
    )];
    for (a, b, want) in figures::FIG6_JP_CHART {
        let label = format!("e(J(P) + {a}{b})");
        match (j.element_by_label(a), j.element_by_label(b)) {
            (Some(x), Some(y)) => checks.push(Check::eq(label, stats.count(x, y), want)),
            _ => checks.push(Check::holds(label, false, "missing ideal", want)),
        }
    }
    let delta = balance_constant(&j).delta;
    checks.push(Check::holds(
        "no 1/2-balanced pair",
        delta < ExactRatio::half(),
        &delta,
        "δ < 1/2",
    ));
    Ok(checks)
}

fn fig7() -> Result<Vec<Check>> {
    let s = Shape::straight(&figures::FIG7_SHAPE)?;
    let hooks = hook_lengths(&s)?;
    let want: Vec<Vec<usize>> = figures::FIG7_HOOKS.iter().map(|r| r.to_vec()).collect();
    let brute = count_extensions(&shape_to_poset(&s)?);
    Ok(vec![
        Check::eq("hook grid", format!("{hooks:?}"), format!("{want:?}")),
        Check::eq("f^(4,4,2)", syt_count(&s)?, figures::FIG7_SYT),
        Check::eq("e(P_(4,4,2))", brute, figures::FIG7_SYT),
    ])
}

fn fig8() -> Result<Vec<Check>> {
    let left = fig("fig8-left");
    let right = fig("fig8-right");
    Ok(vec![
        delta_check(left)?,
        Check::eq("width(fig8-left)", left.poset()?.width(), 2),
        delta_check(right)?,
        Check::eq("width(fig8-right)", right.poset()?.width(), 3),
    ])
}

fn fig9() -> Result<Vec<Check>> {
    let pi: Permutation = figures::FIG9_PERMUTATION.parse()?;
    let p = from_permutation(&pi);
    let pairs = inversion_pattern_pairs(&pi);
    let mut want_covers = figures::FIG9_COVERS.to_vec();
    want_covers.sort();
    let twins = twin_pairs(&p);
    let all_twin = pairs
        .iter()
        .all(|&(a, b)| twins.contains(&(a.min(b), a.max(b))));
    let all_half = pairs
        .iter()
        .all(|&(a, b)| prob_before(&p, a, b).is_ok_and(|r| r == ExactRatio::half()));
    Ok(vec![
        Check::eq("covers", pairs_text(&p.covers()), pairs_text(&want_covers)),
        Check::eq(
            "inversion-pattern pairs",
            pairs_text(&pairs),
            pairs_text(&figures::FIG9_INVERSION_PAIRS),
        ),
        Check::holds(
            "pairs are twins at 1/2",
            all_twin && all_half,
            all_twin && all_half,
            true,
        ),
    ])
}

fn fig11() -> Result<Vec<Check>> {
    ["fig11-A", "fig11-B", "fig11-C"]
        .iter()
        .map(|k| delta_check(fig(k)))
        .collect()
}

fn lemma37() -> Result<Vec<Check>> {
    let ((m0, m1), (n0, n1)) = figures::LEMMA_IDENTITY_RANGE;
    let mut bad = Vec::new();
    let mut count = 0;
    for m in m0..=m1 {
        for n in n0..=n1 {
            let quotient = ExactRatio::from_counts(
                &syt_count(&lemma_shape(m, n)?)?,
                &syt_count(&Shape::straight(&vec![n; m])?)?,
            );
            count += 1;
            if quotient != lemma_ratio(m, n)? {
                bad.push(format!("({m},{n})"));
            }
        }
    }
    let ((b0, b1), (c0, c1)) = figures::LEMMA_BOUNDS_RANGE;
    let (third, two_thirds) = (ExactRatio::third(), ExactRatio::third().complement());
    let mut out_of_bounds = Vec::new();
    for m in b0..=b1 {
        for n in c0..=c1 {
            let r = lemma_ratio(m, n)?;
            if r < third || r > two_thirds {
                out_of_bounds.push(format!("({m},{n})={r}"));
            }
        }
    }
    Ok(vec![
        Check::holds(
            format!("ratio equals SYT quotient for {m0}<=m<={m1}, {n0}<=n<={n1}"),
            bad.is_empty(),
            format!("{} of {count} agree", count - bad.len()),
            format!("{count} of {count} agree"),
        ),
        Check::holds(
            format!("1/3 <= ratio <= 2/3 for {b0}<=m<={b1}, {c0}<=n<={c1}"),
            out_of_bounds.is_empty(),
            if out_of_bounds.is_empty() {
                "all within".to_string()
            } else {
                out_of_bounds.join(" ")
            },
            "all within",
        ),
    ])
}

fn thm38() -> Result<Vec<Check>> {
    let ((m0, m1), (n0, n1)) = figures::RECTANGLE_RANGE;
    let (third, two_thirds) = (ExactRatio::third(), ExactRatio::third().complement());
    let mut checks = Vec::new();
    for m in m0..=m1 {
        for n in n0..=n1 {
            let ((a, b), pr) = rectangle_balance_pair(m, n)?;
            let want = lemma_ratio(m, n)?;
            let ok = pr == want && third <= pr && pr <= two_thirds;
            checks.push(Check::holds(
                format!("P({a} before {b}) in C_{m} x C_{n}"),
                ok,
                &pr,
                &want,
            ));
        }
    }
    Ok(checks)
}

/// Outcome of running the diagram case analysis over a corpus.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ShapeSweep {
    pub shapes: usize,
    pub chains: usize,
    pub checked: usize,
    pub by_case: BTreeMap<String, usize>,
    /// Shapes where no case applied or the pair was not almost twin.
    pub failures: Vec<String>,
    /// Shapes whose δ fell below 1/3.
    pub below_one_third: Vec<String>,
}

pub fn shape_sweep(max_cells: usize) -> Result<ShapeSweep> {
    shape_sweep_with(max_cells, Exec::default())
}

/// What the sweep learns about one diagram.
enum Verdict {
    Chain,
    Checked {
        case: Option<String>,
        failure: Option<String>,
        below: bool,
    },
}

pub fn shape_sweep_with(max_cells: usize, exec: Exec) -> Result<ShapeSweep> {
    let corpus = shape_corpus(max_cells);
    let third = ExactRatio::third();
    let verdicts = par::map_collect(exec, &corpus, |s| -> Result<Verdict> {
        let p = shape_to_poset(s)?;
        if p.is_chain() {
            return Ok(Verdict::Chain);
        }
        let (case, failure) = match find_almost_twin_in_shape(s) {
            Ok(choice) => {
                let case = serde_json::to_value(choice.case)
                    .ok()
                    .and_then(|v| v.as_str().map(String::from));
                let (a, b) = choice.pair;
                let ok = match (s.element_of(a), s.element_of(b)) {
                    (Some(x), Some(y)) => is_almost_twin(&p, x, y),
                    _ => false,
                };
                (
                    case,
                    (!ok).then(|| format!("{} [{}]: {a},{b} not almost twin", s, shape_kind(s))),
                )
            }
            Err(e) => (None, Some(format!("{} [{}]: {e}", s, shape_kind(s)))),
        };
        Ok(Verdict::Checked {
            case,
            failure,
            below: balance_constant(&p).delta < third,
        })
    });
    let mut sweep = ShapeSweep {
        shapes: corpus.len(),
        ..ShapeSweep::default()
    };
    for (s, v) in corpus.iter().zip(verdicts) {
        match v? {
            Verdict::Chain => sweep.chains += 1,
            Verdict::Checked {
                case,
                failure,
                below,
            } => {
                sweep.checked += 1;
                if let Some(c) = case {
                    *sweep.by_case.entry(c).or_default() += 1;
                }
                sweep.failures.extend(failure);
                if below {
                    sweep.below_one_third.push(s.to_string());
                }
            }
        }
    }
    Ok(sweep)
}

fn shape_kind(s: &Shape) -> &'static str {
    match (s.is_shifted(), s.is_skew()) {
        (false, false) => "straight",
        (false, true) => "skew",
        (true, false) => "shifted",
        (true, true) => "shifted skew",
    }
}

fn thm41() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for f in figures::FIGURE_SHAPES {
        let s = f.shape()?;
        let want = f.expected_pair();
        let got = find_almost_twin_in_shape(&s)?.pair;
        checks.push(Check::eq(
            format!("{} pair", f.key),
            format!("{},{}", got.0, got.1),
            format!("{},{}", want.0, want.1),
        ));
    }
    let sweep = shape_sweep(figures::SHAPE_SWEEP_CELLS)?;
    checks.push(Check::holds(
        format!(
            "almost twin pair found in all {} non-chain diagrams",
            sweep.checked
        ),
        sweep.failures.is_empty() && sweep.checked > 0,
        if sweep.failures.is_empty() {
            "no failures".to_string()
        } else {
            sweep.failures.join("; ")
        },
        "no failures",
    ));
    let cases: Vec<String> = sweep
        .by_case
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect();
    let fallback = sweep.by_case.get("exhaustive").copied().unwrap_or(0);
    checks.push(Check::holds(
        format!("pairs by case ({fallback} outside the case analysis)"),
        true,
        cases.join(" "),
        "informational",
    ));
    checks.push(Check::holds(
        "δ >= 1/3 for every non-chain diagram",
        sweep.below_one_third.is_empty(),
        if sweep.below_one_third.is_empty() {
            "none below".to_string()
        } else {
            sweep.below_one_third.join("; ")
        },
        "none below",
    ));
    Ok(checks)
}

fn matrix_text(m: &[Vec<BigUint>]) -> String {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(" | ")
}

fn pair_text(p: Option<(usize, usize)>) -> String {
    p.map_or_else(|| "none".to_string(), |(x, y)| format!("({x},{y})"))
}

fn pairs_text(ps: &[(usize, usize)]) -> String {
    ps.iter()
        .map(|&(x, y)| format!("({x},{y})"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_targets_pass() {
        for name in [
            "fig1", "fig2-T", "fig4", "fig6-jp", "fig7", "fig9", "lemma37",
        ] {
            let r = &run(name).unwrap()[0];
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn unknown_target() {
        assert!(run("fig99").is_err());
        assert_eq!(target_names().len(), TARGETS.len());
    }

    #[test]
    fn failing_check_is_reported() {
        let c = Check::eq("x", 1, 2);
        assert!(!c.pass);
        let r = TargetReport {
            target: "t",
            description: "d",
            pass: false,
            checks: vec![c],
        };
        assert!(r.to_string().contains("computed 1, expected 2"));
    }
}
