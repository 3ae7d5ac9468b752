//! The bounded-partition lattice truncated to stacks of rectangles: nodes
//! are k-bounded partitions fitting inside some union of m-1 rectangles,
//! edges are residue-labeled covers, built breadth-first from the empty
//! partition. Rectangle containment is the production membership filter; the
//! alcove bound is an independent criterion kept for cross-checking.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Map, Value};

use crate::cores::Core;
use crate::error::{Error, Result};
use crate::geometry::{alcove_of_word, Alcove, Weight};
use crate::partition::{rectangle_unions, Partition};

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// One member partition with its derived views, all cached at build time.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeNode {
    kbounded: Partition,
    core: Core,
    word: Vec<usize>,
    alcove: Alcove,
    grade: usize,
}

impl LatticeNode {
    fn derive(kbounded: Partition, k: usize) -> Result<Self> {
        let core = Core::from_bounded(&kbounded, k)?;
        let word = core.to_word();
        let alcove = alcove_of_word(&word, k);
        let grade = kbounded.size();
        debug_assert_eq!(core.size(), grade);
        debug_assert_eq!(word.len(), grade);
        Ok(LatticeNode {
            kbounded,
            core,
            word,
            alcove,
            grade,
        })
    }

    pub fn kbounded(&self) -> &Partition {
        &self.kbounded
    }

    pub fn core(&self) -> &Core {
        &self.core
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn alcove(&self) -> &Alcove {
        &self.alcove
    }

    pub fn grade(&self) -> usize {
        self.grade
    }
}

/// Cover from a smaller member to a larger one, labeled by the residue
/// whose generator realizes it on cores.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Edge {
    lower: Partition,
    upper: Partition,
    residue: usize,
}

impl Edge {
    pub fn lower(&self) -> &Partition {
        &self.lower
    }

    pub fn upper(&self) -> &Partition {
        &self.upper
    }

    pub fn residue(&self) -> usize {
        self.residue
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeGraph {
    k: usize,
    m: usize,
    nodes: BTreeMap<Partition, LatticeNode>,
    edges: BTreeSet<Edge>,
}

/// Membership by containment in a union of m-1 rectangles. Total on all
/// partitions; anything not k-bounded is simply out.
pub fn member_by_rectangles(lam: &Partition, k: usize, m: usize) -> bool {
    lam.is_k_bounded(k) && rectangle_unions(k, m).iter().any(|u| u.contains(lam))
}

/// Membership by geometry: the partition's alcove lies in the m-fold
/// dilation of the fundamental alcove. Agrees with the rectangle criterion.
pub fn member_by_alcove(lam: &Partition, k: usize, m: usize) -> bool {
    if !lam.is_k_bounded(k) {
        return false;
    }
    let core = Core::from_bounded(lam, k).expect("bounded input converts");
    alcove_of_word(&core.to_word(), k).in_dilation(m)
}

/// Breadth-first closure from the empty partition under single-residue
/// additions, filtered by rectangle containment.
pub fn build(k: usize, m: usize) -> Result<LatticeGraph> {
    build_with_cap(k, m, DEFAULT_NODE_CAP)
}

pub fn build_with_cap(k: usize, m: usize, node_cap: usize) -> Result<LatticeGraph> {
    assert!(k >= 1 && m >= 1, "parameters start at 1");
    let needed = (m as u128).checked_pow(k as u32);
    if needed.is_none_or(|n| n > node_cap as u128) {
        return Err(Error::NodeCapExceeded {
            cap: node_cap,
            needed: needed
                .and_then(|n| usize::try_from(n).ok())
                .unwrap_or(usize::MAX),
        });
    }
    let unions = rectangle_unions(k, m);
    let is_member = |lam: &Partition| unions.iter().any(|u| u.contains(lam));

    let mut nodes = BTreeMap::new();
    let mut edges = BTreeSet::new();
    let root = LatticeNode::derive(Partition::empty(), k)?;
    let mut frontier = vec![root.kbounded.clone()];
    nodes.insert(root.kbounded.clone(), root);
    while let Some(lam) = frontier.pop() {
        let core = nodes[&lam].core.clone();
        for i in 0..=k {
            let Some(bigger) = core.apply_u(i) else {
                continue;
            };
            let mu = bigger.to_bounded();
            if !is_member(&mu) {
                continue;
            }
            edges.insert(Edge {
                lower: lam.clone(),
                upper: mu.clone(),
                residue: i,
            });
            if !nodes.contains_key(&mu) {
                if nodes.len() >= node_cap {
                    return Err(Error::NodeCapExceeded {
                        cap: node_cap,
                        needed: nodes.len() + 1,
                    });
                }
                nodes.insert(mu.clone(), LatticeNode::derive(mu.clone(), k)?);
                frontier.push(mu);
            }
        }
    }
    Ok(LatticeGraph { k, m, nodes, edges })
}

impl LatticeGraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        self.nodes.contains_key(lam)
    }

    pub fn node(&self, lam: &Partition) -> Option<&LatticeNode> {
        self.nodes.get(lam)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &LatticeNode> {
        self.nodes.values()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    /// Nodes with no cover above them; these are exactly the unions of m-1
    /// rectangles.
    pub fn maximal_nodes(&self) -> BTreeSet<Partition> {
        let lowers: BTreeSet<&Partition> = self.edges.iter().map(|e| &e.lower).collect();
        self.nodes
            .keys()
            .filter(|p| !lowers.contains(p))
            .cloned()
            .collect()
    }

    fn sorted_nodes(&self) -> Vec<&LatticeNode> {
        let mut out: Vec<&LatticeNode> = self.nodes.values().collect();
        out.sort_by_key(|n| (n.grade, n.kbounded.clone()));
        out
    }

    fn sorted_edges(&self) -> Vec<&Edge> {
        let mut out: Vec<&Edge> = self.edges.iter().collect();
        out.sort_by_key(|e| (e.lower.size(), e.lower.clone(), e.upper.clone(), e.residue));
        out
    }

    /// DOT digraph, bottom to top, one fixed color per residue.
    pub fn export_dot(&self) -> String {
        const PALETTE: [&str; 10] = [
            "red", "blue", "gold", "green", "purple", "orange", "cyan", "magenta", "brown",
            "gray",
        ];
        let name = |p: &Partition| {
            if p.is_empty() {
                "\u{2205}".to_string()
            } else {
                p.to_string()
            }
        };
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
        for node in self.sorted_nodes() {
            out.push_str(&format!("  \"{}\";\n", name(&node.kbounded)));
        }
        for edge in self.sorted_edges() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\" color=\"{}\"];\n",
                name(&edge.lower),
                name(&edge.upper),
                edge.residue,
                PALETTE[edge.residue % PALETTE.len()]
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Compact JSON with sorted keys and sorted arrays, byte-deterministic.
    pub fn export_json(&self) -> String {
        let nodes: Vec<Value> = self
            .sorted_nodes()
            .iter()
            .map(|n| {
                let alcove: Vec<Value> = n
                    .alcove
                    .vertices()
                    .iter()
                    .map(|v| json!(v.coords()))
                    .collect();
                let mut obj = Map::new();
                obj.insert("alcove".into(), Value::Array(alcove));
                obj.insert("core".into(), json!(n.core.shape().rows()));
                obj.insert("partition".into(), json!(n.kbounded.rows()));
                obj.insert("word".into(), json!(n.word));
                Value::Object(obj)
            })
            .collect();
        let edges: Vec<Value> = self
            .sorted_edges()
            .iter()
            .map(|e| {
                let mut obj = Map::new();
                obj.insert("from".into(), json!(e.lower.rows()));
                obj.insert("residue".into(), json!(e.residue));
                obj.insert("to".into(), json!(e.upper.rows()));
                Value::Object(obj)
            })
            .collect();
        let mut root = Map::new();
        root.insert("edges".into(), Value::Array(edges));
        root.insert("k".into(), json!(self.k));
        root.insert("m".into(), json!(self.m));
        root.insert("nodes".into(), Value::Array(nodes));
        serde_json::to_string(&Value::Object(root)).expect("json value serializes")
    }

    /// Parse a graph back from its JSON export, revalidating every derived
    /// field against a fresh computation.
    pub fn import_json(text: &str) -> Result<LatticeGraph> {
        let bad = |msg: &str| Error::MalformedJson(msg.to_string());
        let root: Value =
            serde_json::from_str(text).map_err(|e| Error::MalformedJson(e.to_string()))?;
        let k = usize_field(&root, "k")?;
        let m = usize_field(&root, "m")?;
        let mut nodes = BTreeMap::new();
        for entry in array_field(&root, "nodes")? {
            let lam = partition_field(entry, "partition")?;
            let node = LatticeNode::derive(lam.clone(), k)?;
            if partition_field(entry, "core")? != *node.core.shape() {
                return Err(bad("stored core disagrees with the partition"));
            }
            if usize_array_field(entry, "word")? != node.word {
                return Err(bad("stored word disagrees with the partition"));
            }
            let vertices = entry
                .get("alcove")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("node is missing its alcove"))?;
            let parsed: Vec<Weight> = vertices
                .iter()
                .map(|v| {
                    let coords: Vec<i64> = v
                        .as_array()
                        .map(|a| a.iter().filter_map(Value::as_i64).collect())
                        .unwrap_or_default();
                    if coords.len() == k {
                        Ok(Weight::new(coords))
                    } else {
                        Err(bad("alcove vertex has the wrong rank"))
                    }
                })
                .collect::<Result<_>>()?;
            if parsed != node.alcove.vertices() {
                return Err(bad("stored alcove disagrees with the word"));
            }
            nodes.insert(lam, node);
        }
        let mut edges = BTreeSet::new();
        for entry in array_field(&root, "edges")? {
            edges.insert(Edge {
                lower: partition_field(entry, "from")?,
                upper: partition_field(entry, "to")?,
                residue: usize_field(entry, "residue")?,
            });
        }
        Ok(LatticeGraph { k, m, nodes, edges })
    }
}

fn usize_field(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .and_then(|n| usize::try_from(n).ok())
        .ok_or_else(|| Error::MalformedJson(format!("missing integer field {key:?}")))
}

fn array_field<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::MalformedJson(format!("missing array field {key:?}")))
}

fn usize_array_field(v: &Value, key: &str) -> Result<Vec<usize>> {
    array_field(v, key)?
        .iter()
        .map(|x| {
            x.as_u64()
                .and_then(|n| usize::try_from(n).ok())
                .ok_or_else(|| Error::MalformedJson(format!("non-integer entry in {key:?}")))
        })
        .collect()
}

fn partition_field(v: &Value, key: &str) -> Result<Partition> {
    let rows = usize_array_field(v, key)?;
    if rows.is_empty() {
        return Ok(Partition::empty());
    }
    Partition::new(rows).map_err(|_| {
        Error::MalformedJson(format!("field {key:?} is not a partition"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{k_bounded_partitions, rectangles};

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(member_by_rectangles(&Partition::empty(), 2, 1));
        assert!(member_by_rectangles(&Partition::empty(), 4, 3));
        assert!(!member_by_rectangles(&p(&[2, 1]), 2, 2));
        assert!(member_by_rectangles(&p(&[2, 1]), 2, 3));
        assert!(!member_by_rectangles(&p(&[3]), 2, 4));
        assert!(!member_by_alcove(&p(&[3]), 2, 4));
        assert!(member_by_alcove(&p(&[1]), 2, 2));
        assert!(member_by_alcove(&Partition::empty(), 1, 1));
    }

    #[test]
    fn membership_criteria_agree() {
        for k in 1..=3usize {
            for m in 1..=4usize {
                for n in 0..=10usize {
                    for lam in k_bounded_partitions(n, k) {
                        assert_eq!(
                            member_by_rectangles(&lam, k, m),
                            member_by_alcove(&lam, k, m),
                            "k={k} m={m} lam={lam}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn smallest_lattices() {
        let g = build(2, 2).unwrap();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 3);
        let names: Vec<&Partition> = g.nodes.keys().collect();
        assert_eq!(
            names,
            [&Partition::empty(), &p(&[1]), &p(&[1, 1]), &p(&[2])]
        );
        let edges: Vec<(&Partition, &Partition, usize)> = g
            .edges()
            .map(|e| (e.lower(), e.upper(), e.residue()))
            .collect();
        assert!(edges.contains(&(&Partition::empty(), &p(&[1]), 0)));
        assert!(edges.contains(&(&p(&[1]), &p(&[2]), 1)));
        assert!(edges.contains(&(&p(&[1]), &p(&[1, 1]), 2)));

        for k in 1..=4 {
            let trivial = build(k, 1).unwrap();
            assert_eq!(trivial.node_count(), 1);
            assert_eq!(trivial.edge_count(), 0);
            assert_eq!(trivial.maximal_nodes(), BTreeSet::from([Partition::empty()]));
        }
    }

    #[test]
    fn node_counts_are_powers() {
        for k in 1..=4usize {
            for m in 1..=4usize {
                let g = build(k, m).unwrap();
                assert_eq!(g.node_count(), m.pow(k as u32), "k={k} m={m}");
            }
        }
        assert_eq!(build(2, 6).unwrap().node_count(), 36);
    }

    #[test]
    fn stacking_two_rectangles_recovers_single_containment() {
        for k in 1..=4usize {
            let g = build(k, 2).unwrap();
            let mut expected = BTreeSet::new();
            for r in rectangles(k) {
                for n in 0..=r.size() {
                    for lam in k_bounded_partitions(n, k) {
                        if r.contains(&lam) {
                            expected.insert(lam);
                        }
                    }
                }
            }
            let got: BTreeSet<Partition> = g.nodes.keys().cloned().collect();
            assert_eq!(got, expected, "k={k}");
            assert_eq!(got.len(), 1 << k);
        }
    }

    #[test]
    fn maximal_nodes_are_rectangle_unions() {
        assert_eq!(
            build(2, 3).unwrap().maximal_nodes(),
            BTreeSet::from([p(&[1, 1, 1, 1]), p(&[2, 1, 1]), p(&[2, 2])])
        );
        assert_eq!(
            build(3, 2).unwrap().maximal_nodes(),
            BTreeSet::from([p(&[1, 1, 1]), p(&[2, 2]), p(&[3])])
        );
        for k in 1..=4usize {
            for m in 1..=4usize {
                let g = build(k, m).unwrap();
                let unions: BTreeSet<Partition> =
                    rectangle_unions(k, m).into_iter().collect();
                assert_eq!(g.maximal_nodes(), unions, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            build_with_cap(3, 3, 10),
            Err(Error::NodeCapExceeded {
                cap: 10,
                needed: 27
            })
        );
        assert!(build_with_cap(3, 3, 27).is_ok());
    }

    #[test]
    fn downward_closure_and_edge_completeness() {
        for k in 1..=3usize {
            for m in 1..=3usize {
                let g = build(k, m).unwrap();
                for node in g.nodes() {
                    for i in node.core().removable_residues() {
                        let smaller = node.core().apply_s(i);
                        let nu = smaller.to_bounded();
                        assert!(g.contains(&nu), "k={k} m={m} below {}", node.kbounded());
                        assert!(
                            g.edges.contains(&Edge {
                                lower: nu,
                                upper: node.kbounded().clone(),
                                residue: i
                            }),
                            "missing cover into {}",
                            node.kbounded()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn edges_step_one_grade_by_the_stated_residue() {
        for (k, m) in [(2, 3), (3, 2), (2, 4)] {
            let g = build(k, m).unwrap();
            for e in g.edges() {
                let lower = g.node(e.lower()).unwrap();
                let upper = g.node(e.upper()).unwrap();
                assert_eq!(lower.grade() + 1, upper.grade());
                assert_eq!(
                    lower.core().apply_u(e.residue()).as_ref(),
                    Some(upper.core())
                );
            }
        }
    }

    #[test]
    fn dot_export() {
        let g = build(2, 2).unwrap();
        let dot = g.export_dot();
        assert_eq!(dot, build(2, 2).unwrap().export_dot());
        assert!(dot.starts_with("digraph lattice {\n  rankdir=BT;\n"));
        let nodes = dot.lines().filter(|l| l.contains(';') && !l.contains("->")).count();
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        assert_eq!(nodes - 1, 4); // rankdir line also ends with ;
        assert_eq!(edges, g.edge_count());
        assert!(dot.contains("\"\u{2205}\" -> \"1\" [label=\"0\" color=\"red\"]"));
        assert!(dot.contains("\"1\" -> \"2\" [label=\"1\" color=\"blue\"]"));
        assert!(dot.contains("\"1\" -> \"1,1\" [label=\"2\" color=\"gold\"]"));
    }

    #[test]
    fn json_roundtrip() {
        for (k, m) in [(1, 1), (2, 2), (2, 4), (3, 3)] {
            let g = build(k, m).unwrap();
            let text = g.export_json();
            assert_eq!(text, build(k, m).unwrap().export_json());
            let back = LatticeGraph::import_json(&text).unwrap();
            assert_eq!(back, g, "k={k} m={m}");
        }
    }

    #[test]
    fn json_shape() {
        let g = build(2, 2).unwrap();
        let v: Value = serde_json::from_str(&g.export_json()).unwrap();
        assert_eq!(v["k"], 2);
        assert_eq!(v["m"], 2);
        assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
        assert_eq!(v["edges"].as_array().unwrap().len(), 3);
        assert_eq!(v["nodes"][0]["partition"].as_array().unwrap().len(), 0);
        assert_eq!(v["nodes"][0]["alcove"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn import_rejects_corrupted_text() {
        let g = build(2, 2).unwrap();
        let text = g.export_json();
        assert!(LatticeGraph::import_json("{").is_err());
        assert!(LatticeGraph::import_json("{}").is_err());
        let tampered = text.replace("\"word\":[0]", "\"word\":[1]");
        assert_ne!(tampered, text);
        assert!(LatticeGraph::import_json(&tampered).is_err());
    }

    #[test]
    fn grade_histogram() {
        let g = build(2, 4).unwrap();
        let mut hist = BTreeMap::new();
        for n in g.nodes() {
            *hist.entry(n.grade()).or_insert(0usize) += 1;
        }
        assert_eq!(hist.values().sum::<usize>(), 16);
        assert_eq!(hist[&0], 1);
        assert_eq!(hist[&1], 1);
    }
}
