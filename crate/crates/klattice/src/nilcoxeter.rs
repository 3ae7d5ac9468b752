//! Operators on the free abelian group with basis the cores of one modulus:
//! single generators u_i, cyclically decreasing products u_D, the degree
//! operators h_i summing u_D over size-i subsets, and rectangle operators
//! built from pseudo-translations. The h_i act by adding horizontal strips
//! in the bounded world, which is the Pieri rule this module exposes.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::cores::Core;
use crate::error::{Error, Result};
use crate::geometry::{pseudo_translation_word, weyl_orbit};

/// Integer combination of cores, all of one modulus. Zero coefficients are
/// never stored; the empty sum is zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CoreSum {
    terms: BTreeMap<Core, i64>,
}

impl CoreSum {
    pub fn zero() -> Self {
        CoreSum::default()
    }

    pub fn singleton(core: Core) -> Self {
        CoreSum {
            terms: BTreeMap::from([(core, 1)]),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Core, i64)>) -> Self {
        let mut sum = CoreSum::zero();
        for (core, coeff) in terms {
            sum.add_term(core, coeff);
        }
        sum
    }

    pub fn terms(&self) -> &BTreeMap<Core, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &CoreSum) -> CoreSum {
        let mut sum = self.clone();
        for (core, coeff) in &other.terms {
            sum.add_term(core.clone(), *coeff);
        }
        sum
    }

    fn add_term(&mut self, core: Core, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(core) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }
}

impl Serialize for CoreSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (core, coeff) in &self.terms {
            let mut obj = serde_json::Map::new();
            obj.insert("coeff".into(), (*coeff).into());
            obj.insert(
                "core".into(),
                serde_json::to_value(core.shape()).expect("a partition serializes"),
            );
            seq.serialize_element(&serde_json::Value::Object(obj))?;
        }
        seq.end()
    }
}

/// Linear extension of the single-generator action; terms killed by the
/// generator drop out.
pub fn apply_u(i: usize, s: &CoreSum) -> CoreSum {
    CoreSum::from_terms(
        s.terms()
            .iter()
            .filter_map(|(core, &coeff)| core.apply_u(i).map(|image| (image, coeff))),
    )
}

/// Apply a word of generators, rightmost letter first.
pub fn apply_word(word: &[usize], s: &CoreSum) -> CoreSum {
    word.iter().rev().fold(s.clone(), |acc, &i| apply_u(i, &acc))
}

/// The unique ordering of a strict subset of the generators in which j+1
/// precedes j whenever both lie in the subset, indices mod k+1. The full set
/// admits no such ordering.
pub fn cyclically_decreasing_word(d: &BTreeSet<usize>, k: usize) -> Result<Vec<usize>> {
    let n = k + 1;
    if let Some(&bad) = d.iter().find(|&&i| i > k) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            min: 0,
            max: k,
        });
    }
    if d.len() == n {
        return Err(Error::FullGeneratorSet(k));
    }
    // maximal cyclic runs, each emitted from its top letter down to its start
    let mut word = Vec::with_capacity(d.len());
    for &start in d {
        if d.contains(&((start + k) % n)) {
            continue;
        }
        let mut len = 1;
        while d.contains(&((start + len) % n)) {
            len += 1;
        }
        for off in (0..len).rev() {
            word.push((start + off) % n);
        }
    }
    debug_assert_eq!(word.len(), d.len());
    Ok(word)
}

/// Sum of the cyclically decreasing products over all size-i generator
/// subsets. Degree zero is the identity.
pub fn h_op(i: usize, s: &CoreSum, k: usize) -> Result<CoreSum> {
    if i > k {
        return Err(Error::IndexOutOfRange {
            index: i,
            min: 0,
            max: k,
        });
    }
    let mut acc = CoreSum::zero();
    for combo in (0..=k).combinations(i) {
        let d: BTreeSet<usize> = combo.into_iter().collect();
        let word = cyclically_decreasing_word(&d, k)?;
        acc = acc.plus(&apply_word(&word, s));
    }
    Ok(acc)
}

/// Rectangle operator: the sum of pseudo-translations over the Weyl orbit of
/// the i-th fundamental weight. On the core of a bounded partition that
/// stays bounded after adjoining the i-th rectangle, exactly one orbit term
/// survives and the result is the core of the union.
pub fn rect_schur_op(i: usize, s: &CoreSum, k: usize) -> Result<CoreSum> {
    let mut acc = CoreSum::zero();
    for gamma in weyl_orbit(k, i)? {
        let word = pseudo_translation_word(&gamma)?;
        acc = acc.plus(&apply_word(&word, s));
    }
    Ok(acc)
}

/// The distinct cores reached from c by the degree-i operator.
pub fn k_pieri_terms(i: usize, c: &Core) -> Result<BTreeSet<Core>> {
    let image = h_op(i, &CoreSum::singleton(c.clone()), c.k())?;
    Ok(image.terms().keys().cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::cores_by_size;
    use crate::partition::{rectangle_unions, rectangles, Partition};

    fn core(rows: &[usize], k: usize) -> Core {
        Core::new(Partition::new(rows.to_vec()).unwrap(), k).unwrap()
    }

    fn empty_sum(k: usize) -> CoreSum {
        CoreSum::singleton(Core::empty(k))
    }

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    #[test]
    fn sums_drop_zero_coefficients() {
        let a = CoreSum::from_terms([(Core::empty(2), 3), (core(&[1], 2), 1)]);
        let b = CoreSum::from_terms([(core(&[1], 2), -1)]);
        let s = a.plus(&b);
        assert_eq!(s.terms().len(), 1);
        assert_eq!(s.terms()[&Core::empty(2)], 3);
        assert!(CoreSum::from_terms([(Core::empty(2), 0)]).is_zero());
    }

    #[test]
    fn apply_word_examples() {
        let s = empty_sum(2);
        assert_eq!(apply_word(&[], &s), s);
        assert_eq!(apply_word(&[1, 0], &s), CoreSum::singleton(core(&[2], 2)));
        assert_eq!(apply_word(&[2, 0], &s), CoreSum::singleton(core(&[1, 1], 2)));
        assert!(apply_word(&[1], &s).is_zero());
    }

    #[test]
    fn squares_vanish() {
        for k in 1..=3usize {
            for layer in cores_by_size(k, 8) {
                for c in layer {
                    let s = CoreSum::singleton(c);
                    for i in 0..=k {
                        assert!(apply_word(&[i, i], &s).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn distant_generators_commute() {
        // the affine diagram is a cycle; distance means neither i-j nor j-i
        // is 1 mod k+1, which first happens at k=3
        let k = 3;
        for layer in cores_by_size(k, 8) {
            for c in layer {
                let s = CoreSum::singleton(c);
                for (i, j) in [(0usize, 2usize), (1, 3)] {
                    assert_eq!(
                        apply_word(&[i, j], &s),
                        apply_word(&[j, i], &s),
                        "i={i} j={j} on {:?}",
                        s
                    );
                }
            }
        }
    }

    #[test]
    fn adjacent_generators_braid() {
        // rank one is genuinely exceptional: its two generators satisfy no
        // braid relation, so the check starts at k=2
        for k in 2..=3usize {
            for layer in cores_by_size(k, 8) {
                for c in layer {
                    let s = CoreSum::singleton(c);
                    for i in 0..=k {
                        let j = (i + 1) % (k + 1);
                        assert_eq!(
                            apply_word(&[i, j, i], &s),
                            apply_word(&[j, i, j], &s),
                            "k={k} i={i} j={j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn cyclically_decreasing_examples() {
        assert_eq!(cyclically_decreasing_word(&set(&[0, 1]), 2).unwrap(), [1, 0]);
        assert_eq!(cyclically_decreasing_word(&set(&[2]), 2).unwrap(), [2]);
        assert_eq!(cyclically_decreasing_word(&set(&[2]), 5).unwrap(), [2]);
        assert_eq!(cyclically_decreasing_word(&set(&[0, 2]), 2).unwrap(), [0, 2]);
        assert_eq!(
            cyclically_decreasing_word(&set(&[0, 1, 3]), 3).unwrap(),
            [1, 0, 3]
        );
        assert_eq!(
            cyclically_decreasing_word(&set(&[]), 2).unwrap(),
            Vec::<usize>::new()
        );
        assert_eq!(
            cyclically_decreasing_word(&set(&[0, 1, 2]), 2),
            Err(Error::FullGeneratorSet(2))
        );
        assert_eq!(
            cyclically_decreasing_word(&set(&[5]), 3),
            Err(Error::IndexOutOfRange {
                index: 5,
                min: 0,
                max: 3
            })
        );
    }

    #[test]
    fn cyclically_decreasing_order_property() {
        for k in 1..=4usize {
            for bits in 0..(1u32 << (k + 1)) - 1 {
                let d: BTreeSet<usize> = (0..=k).filter(|&i| bits >> i & 1 == 1).collect();
                let word = cyclically_decreasing_word(&d, k).unwrap();
                assert_eq!(word.len(), d.len());
                assert_eq!(word.iter().copied().collect::<BTreeSet<_>>(), d);
                let pos = |v: usize| word.iter().position(|&w| w == v).unwrap();
                for &j in &d {
                    let succ = (j + 1) % (k + 1);
                    if d.contains(&succ) {
                        assert!(pos(succ) < pos(j), "k={k} d={d:?} word={word:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn h_op_examples() {
        for k in 1..=4usize {
            assert_eq!(
                h_op(1, &empty_sum(k), k).unwrap(),
                CoreSum::singleton(core(&[1], k))
            );
        }
        assert_eq!(
            h_op(2, &empty_sum(2), 2).unwrap(),
            CoreSum::singleton(core(&[2], 2))
        );
        let s = CoreSum::singleton(core(&[3, 1], 2));
        assert_eq!(h_op(0, &s, 2).unwrap(), s);
        assert_eq!(
            h_op(3, &empty_sum(2), 2),
            Err(Error::IndexOutOfRange {
                index: 3,
                min: 0,
                max: 2
            })
        );
    }

    #[test]
    fn h_ops_commute() {
        for k in 1..=3usize {
            for layer in cores_by_size(k, 6) {
                for c in layer {
                    let s = CoreSum::singleton(c);
                    for i in 0..=k {
                        for j in 0..=k {
                            let ij = h_op(i, &h_op(j, &s, k).unwrap(), k).unwrap();
                            let ji = h_op(j, &h_op(i, &s, k).unwrap(), k).unwrap();
                            assert_eq!(ij, ji, "k={k} i={i} j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn h_op_coefficients_are_unit() {
        for k in 1..=3usize {
            for layer in cores_by_size(k, 6) {
                for c in layer {
                    let s = CoreSum::singleton(c);
                    for i in 0..=k {
                        for coeff in h_op(i, &s, k).unwrap().terms().values() {
                            assert_eq!(*coeff, 1, "k={k} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            k_pieri_terms(1, &Core::empty(2)).unwrap(),
            BTreeSet::from([core(&[1], 2)])
        );
        assert_eq!(
            k_pieri_terms(1, &core(&[1], 2)).unwrap(),
            BTreeSet::from([core(&[2], 2), core(&[1, 1], 2)])
        );
    }

    /// Partitions obtained by adding a horizontal i-strip.
    fn horizontal_strips(lam: &Partition, i: usize) -> BTreeSet<Partition> {
        let rows = lam.len() + 1;
        let mut out = BTreeSet::new();
        let mut adds = vec![0usize; rows];
        fn rec(
            lam: &Partition,
            adds: &mut Vec<usize>,
            at: usize,
            left: usize,
            out: &mut BTreeSet<Partition>,
        ) {
            if at == adds.len() {
                if left == 0 {
                    let rows: Vec<usize> = (0..adds.len())
                        .map(|r| lam.row(r) + adds[r])
                        .filter(|&len| len > 0)
                        .collect();
                    if let Ok(p) = Partition::new(rows) {
                        out.insert(p);
                    }
                }
                return;
            }
            // strip condition: row at most the previous row's old length
            let cap = if at == 0 {
                left
            } else {
                lam.row(at - 1).saturating_sub(lam.row(at)).min(left)
            };
            for a in 0..=cap {
                adds[at] = a;
                rec(lam, adds, at + 1, left - a, out);
                adds[at] = 0;
            }
        }
        rec(lam, &mut adds, 0, i, &mut out);
        out
    }

    #[test]
    fn large_modulus_pieri_is_classical() {
        for n in 0..=5usize {
            for lam in crate::partition::k_bounded_partitions(n, n.max(1)) {
                for i in 1..=3usize {
                    let k = n + i;
                    let c = Core::from_bounded(&lam, k).unwrap();
                    let got: BTreeSet<Partition> = k_pieri_terms(i, &c)
                        .unwrap()
                        .into_iter()
                        .map(|c| c.to_bounded())
                        .collect();
                    assert_eq!(got, horizontal_strips(&lam, i), "n={n} i={i} lam={lam}");
                }
            }
        }
    }

    #[test]
    fn rect_schur_examples() {
        assert_eq!(
            rect_schur_op(1, &empty_sum(2), 2).unwrap(),
            CoreSum::singleton(core(&[1, 1], 2))
        );
        assert_eq!(
            rect_schur_op(2, &empty_sum(2), 2).unwrap(),
            CoreSum::singleton(core(&[2], 2))
        );
        assert!(rect_schur_op(0, &empty_sum(2), 2).is_err());
        assert!(rect_schur_op(3, &empty_sum(2), 2).is_err());
    }

    #[test]
    fn rect_schur_adjoins_the_rectangle() {
        for k in 1..=3usize {
            let rects = rectangles(k);
            let mut members: BTreeSet<Partition> = BTreeSet::new();
            for union in rectangle_unions(k, 3) {
                for n in 0..=union.size() {
                    for lam in crate::partition::k_bounded_partitions(n, k) {
                        if union.contains(&lam) {
                            members.insert(lam);
                        }
                    }
                }
            }
            for lam in members {
                let s = CoreSum::singleton(Core::from_bounded(&lam, k).unwrap());
                for i in 1..=k {
                    let expect = Core::from_bounded(&lam.union(&rects[i - 1]), k).unwrap();
                    assert_eq!(
                        rect_schur_op(i, &s, k).unwrap(),
                        CoreSum::singleton(expect),
                        "k={k} i={i} lam={lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn core_sum_json_shape() {
        let s = CoreSum::from_terms([(core(&[2], 2), 1), (core(&[1, 1], 2), 2)]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"[{"coeff":2,"core":[1,1]},{"coeff":1,"core":[2]}]"#
        );
    }
}
