//! Named verification suites over one lattice instance. Each suite runs a
//! handful of exhaustive checks at the given parameters and reports one
//! outcome per check, so a runner can shard or gate on them.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::affine::{cores_by_size, word_to_core};
use crate::cores::Core;
use crate::error::{Error, Result};
use crate::geometry::{alcove_of_word, dominant_weights};
use crate::lattice::{member_by_alcove, member_by_rectangles, LatticeGraph};
use crate::nilcoxeter::{apply_word, h_op, rect_schur_op, CoreSum};
use crate::partition::{k_bounded_partitions, rectangle_unions, rectangles, Partition};
use crate::symmetry::verify_symmetry;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Suite {
    Counts,
    Bijection,
    NilCoxeter,
    Pieri,
    Symmetry,
}

impl Suite {
    pub fn all() -> [Suite; 5] {
        [
            Suite::Counts,
            Suite::Bijection,
            Suite::NilCoxeter,
            Suite::Pieri,
            Suite::Symmetry,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Bijection => "bijection",
            Suite::NilCoxeter => "nilcoxeter",
            Suite::Pieri => "pieri",
            Suite::Symmetry => "symmetry",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::all()
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(suite: Suite, name: &str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        suite: suite.name().to_string(),
        name: name.to_string(),
        passed,
        detail,
    }
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Multisets of rectangle indices with their unions and the residue the
/// union's core must expose.
fn union_data(k: usize, m: usize) -> Vec<(Vec<usize>, Partition, usize)> {
    let rects = rectangles(k);
    (1..=k)
        .combinations_with_replacement(m - 1)
        .map(|indices| {
            let union = indices
                .iter()
                .fold(Partition::empty(), |acc, &i| acc.union(&rects[i - 1]));
            let residue = indices.iter().sum::<usize>() % (k + 1);
            (indices, union, residue)
        })
        .collect()
}

fn run_counts(g: &LatticeGraph) -> Vec<CheckOutcome> {
    let (k, m) = (g.k(), g.m());
    let suite = Suite::Counts;
    let mut out = Vec::new();

    let expected = (m as u128).pow(k as u32);
    out.push(outcome(
        suite,
        "node count",
        g.node_count() as u128 == expected,
        format!("{} nodes, expected {expected}", g.node_count()),
    ));

    let unions: std::collections::BTreeSet<Partition> =
        rectangle_unions(k, m).into_iter().collect();
    let maximal = g.maximal_nodes();
    let want = binomial(m + k - 2, k - 1);
    out.push(outcome(
        suite,
        "maximal nodes",
        maximal == unions && maximal.len() == want,
        format!("{} maximal nodes, expected {want} rectangle stacks", maximal.len()),
    ));

    let dominant = dominant_weights(k, m - 1).len();
    out.push(outcome(
        suite,
        "dominant weights",
        dominant == want,
        format!("{dominant} dominant weights at level {}, expected {want}", m - 1),
    ));

    let facet_ok = unions.iter().all(|u| {
        let core = Core::from_bounded(u, k).expect("unions are bounded");
        let alcove = alcove_of_word(&core.to_word(), k);
        alcove.in_dilation(m)
            && alcove
                .vertices()
                .iter()
                .filter(|v| v.level() == m as i64)
                .count()
                == k
    });
    out.push(outcome(
        suite,
        "facet contact",
        facet_ok,
        format!("each of {} stack alcoves meets the level-{m} wall in a facet", unions.len()),
    ));

    let mut residue_ok = true;
    let mut residue_detail = String::from("every stack core has one addable residue, the index sum");
    for (indices, union, residue) in union_data(k, m) {
        let addable = Core::from_bounded(&union, k)
            .expect("unions are bounded")
            .addable_residues();
        if addable.len() != 1 || !addable.contains(&residue) {
            residue_ok = false;
            residue_detail =
                format!("stack {indices:?} exposes residues {addable:?}, expected {{{residue}}}");
            break;
        }
    }
    out.push(outcome(suite, "addable residue", residue_ok, residue_detail));
    out
}

fn run_bijection(g: &LatticeGraph) -> Vec<CheckOutcome> {
    let k = g.k();
    let suite = Suite::Bijection;
    let mut out = Vec::new();

    let mut round_ok = true;
    let mut detail = format!("all {} members round-trip through cores", g.node_count());
    for node in g.nodes() {
        if &node.core().to_bounded() != node.kbounded() {
            round_ok = false;
            detail = format!("[{}] fails the bounded round trip", node.kbounded());
            break;
        }
    }
    out.push(outcome(suite, "bounded through core", round_ok, detail));

    let mut core_ok = true;
    let mut count = 0usize;
    let mut detail = String::new();
    for layer in cores_by_size(k, 8) {
        for core in layer {
            count += 1;
            if Core::from_bounded(&core.to_bounded(), k).ok().as_ref() != Some(&core) {
                core_ok = false;
                detail = format!("core [{}] fails the round trip", core.shape());
            }
        }
    }
    if core_ok {
        detail = format!("all {count} cores of size at most 8 round-trip");
    }
    out.push(outcome(suite, "core through bounded", core_ok, detail));

    let mut word_ok = true;
    let mut detail = format!("stored words rebuild all {} member cores", g.node_count());
    for node in g.nodes() {
        if word_to_core(node.word(), k).as_ref() != Some(node.core()) {
            word_ok = false;
            detail = format!("word {:?} fails to rebuild its core", node.word());
            break;
        }
    }
    out.push(outcome(suite, "word through core", word_ok, detail));

    let mut member_ok = true;
    let mut detail = String::from("rectangle and alcove membership agree, sizes up to 8");
    for n in 0..=8usize {
        for lam in k_bounded_partitions(n, k) {
            if member_by_rectangles(&lam, k, g.m()) != member_by_alcove(&lam, k, g.m()) {
                member_ok = false;
                detail = format!("criteria disagree on [{lam}]");
            }
        }
    }
    out.push(outcome(suite, "membership criteria", member_ok, detail));
    out
}

fn run_nilcoxeter(g: &LatticeGraph) -> Vec<CheckOutcome> {
    let k = g.k();
    let suite = Suite::NilCoxeter;
    let n = k + 1;
    let cores: Vec<Core> = cores_by_size(k, 6).into_iter().flatten().collect();
    let mut out = Vec::new();

    let squares = cores.iter().all(|c| {
        let s = CoreSum::singleton(c.clone());
        (0..=k).all(|i| apply_word(&[i, i], &s).is_zero())
    });
    out.push(outcome(
        suite,
        "squares vanish",
        squares,
        format!("checked {} cores of size at most 6", cores.len()),
    ));

    let distant: Vec<(usize, usize)> = (0..=k)
        .flat_map(|i| (0..=k).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let d = (i + n - j) % n;
            i < j && d != 1 && d != k
        })
        .collect();
    let commute = cores.iter().all(|c| {
        let s = CoreSum::singleton(c.clone());
        distant
            .iter()
            .all(|&(i, j)| apply_word(&[i, j], &s) == apply_word(&[j, i], &s))
    });
    out.push(outcome(
        suite,
        "distant commutation",
        commute,
        format!("{} distant generator pairs", distant.len()),
    ));

    let braid_detail;
    let braid_ok;
    if k == 1 {
        braid_ok = true;
        braid_detail = String::from("rank one has no braid relation to check");
    } else {
        braid_ok = cores.iter().all(|c| {
            let s = CoreSum::singleton(c.clone());
            (0..=k).all(|i| {
                let j = (i + 1) % n;
                apply_word(&[i, j, i], &s) == apply_word(&[j, i, j], &s)
            })
        });
        braid_detail = format!("{} adjacent generator pairs", n);
    }
    out.push(outcome(suite, "adjacent braid", braid_ok, braid_detail));

    let commuting_ops = cores.iter().all(|c| {
        let s = CoreSum::singleton(c.clone());
        (0..=k).all(|i| {
            (0..=k).all(|j| {
                h_op(i, &h_op(j, &s, k).unwrap(), k).unwrap()
                    == h_op(j, &h_op(i, &s, k).unwrap(), k).unwrap()
            })
        })
    });
    out.push(outcome(
        suite,
        "degree operators commute",
        commuting_ops,
        format!("all pairs up to degree {k}"),
    ));
    out
}

fn run_pieri(g: &LatticeGraph) -> Vec<CheckOutcome> {
    let k = g.k();
    let suite = Suite::Pieri;
    let rects = rectangles(k);
    let mut out = Vec::new();

    let mut rect_ok = true;
    let mut detail = format!(
        "each rectangle operator adjoins its rectangle on all {} members",
        g.node_count()
    );
    'rect: for node in g.nodes() {
        let s = CoreSum::singleton(node.core().clone());
        for i in 1..=k {
            let expect = Core::from_bounded(&node.kbounded().union(&rects[i - 1]), k)
                .expect("bounded unions convert");
            if rect_schur_op(i, &s, k).expect("degree in range")
                != CoreSum::singleton(expect)
            {
                rect_ok = false;
                detail = format!("operator {i} misses on [{}]", node.kbounded());
                break 'rect;
            }
        }
    }
    out.push(outcome(suite, "rectangle operators", rect_ok, detail));

    let mut unit_ok = true;
    let mut detail = String::from("all degree-operator coefficients are 1 on members");
    'unit: for node in g.nodes() {
        let s = CoreSum::singleton(node.core().clone());
        for i in 0..=k {
            let image = h_op(i, &s, k).expect("degree in range");
            if image.terms().values().any(|&c| c != 1) {
                unit_ok = false;
                detail = format!("degree {i} on [{}] has a non-unit coefficient", node.kbounded());
                break 'unit;
            }
            if image.terms().keys().any(|c| c.size() != node.grade() + i) {
                unit_ok = false;
                detail = format!("degree {i} on [{}] breaks the grading", node.kbounded());
                break 'unit;
            }
        }
    }
    out.push(outcome(suite, "unit coefficients", unit_ok, detail));
    out
}

fn run_symmetry(g: &LatticeGraph) -> Result<Vec<CheckOutcome>> {
    let suite = Suite::Symmetry;
    let report = verify_symmetry(g)?;
    let context = |flag: bool, ok_text: String| {
        if flag {
            ok_text
        } else {
            report.failures.first().cloned().unwrap_or_default()
        }
    };
    Ok(vec![
        outcome(
            suite,
            "action bijects",
            report.is_bijection,
            context(
                report.is_bijection,
                format!("permutes all {} members", g.node_count()),
            ),
        ),
        outcome(
            suite,
            "cyclic order",
            (g.k() + 1).is_multiple_of(report.order),
            format!("order {} divides {}", report.order, g.k() + 1),
        ),
        outcome(
            suite,
            "edges preserved",
            report.undirected_edge_preserving,
            context(
                report.undirected_edge_preserving,
                format!("all {} covers map to covers", g.edge_count()),
            ),
        ),
        outcome(
            suite,
            "uniform residue shift",
            report.residue_shift_consistent,
            context(
                report.residue_shift_consistent,
                match report.residue_shift {
                    Some(1) => String::from("every cover label advances by one"),
                    Some(s) => format!("every cover label advances by {s}"),
                    None => String::from("no covers to label"),
                },
            ),
        ),
        outcome(
            suite,
            "conjugation automorphism",
            report.tau_automorphism,
            context(
                report.tau_automorphism,
                String::from("conjugation is an involutive graph automorphism"),
            ),
        ),
        outcome(
            suite,
            "dihedral relation",
            report.tau_sigma_conjugation,
            context(
                report.tau_sigma_conjugation,
                String::from("conjugating the action inverts it"),
            ),
        ),
    ])
}

/// Run several suites against an already built lattice.
pub fn run_suites_on(g: &LatticeGraph, suites: &[Suite]) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for suite in suites {
        out.extend(match suite {
            Suite::Counts => run_counts(g),
            Suite::Bijection => run_bijection(g),
            Suite::NilCoxeter => run_nilcoxeter(g),
            Suite::Pieri => run_pieri(g),
            Suite::Symmetry => run_symmetry(g)?,
        });
    }
    Ok(out)
}

/// Run one suite against Y^k_m built fresh with the given cap.
pub fn run_suite(suite: Suite, k: usize, m: usize, node_cap: usize) -> Result<Vec<CheckOutcome>> {
    let g = crate::lattice::build_with_cap(k, m, node_cap)?;
    run_suites_on(&g, &[suite])
}

/// Run several suites against one shared build.
pub fn run_suites(
    suites: &[Suite],
    k: usize,
    m: usize,
    node_cap: usize,
) -> Result<Vec<CheckOutcome>> {
    let g = crate::lattice::build_with_cap(k, m, node_cap)?;
    run_suites_on(&g, suites)
}
