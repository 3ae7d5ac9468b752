//! Exact affine alcove geometry for type A.
//!
//! Points live in the weight space of rank k and are stored in the
//! fundamental-weight basis, so the pairing of the i-th simple root with a
//! point is just its i-th coordinate, and the pairing with the highest root
//! (the level) is the coordinate sum. Generator i >= 1 reflects in the wall
//! where coordinate i vanishes; generator 0 reflects in the wall where the
//! level equals 1. The closed fundamental alcove is the simplex spanned by
//! the origin and the fundamental weights.
//!
//! Words act on the left of the fundamental alcove's preimage: the alcove of
//! a word is the image of the fundamental alcove under the inverse group
//! element, so each vertex is folded through the word's letters first to
//! last. With this orientation the alcove of the peel word of a rectangle
//! union's core is a pure translate of the fundamental alcove.

use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer vector in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(Vec<i64>);

/// Exact rational vector in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point(Vec<Rational64>);

/// Coordinates of the highest root in the fundamental-weight basis: the
/// Cartan row sums. Rank one is the doubled first weight.
fn highest_root_weight(k: usize) -> Vec<i64> {
    if k == 1 {
        return vec![2];
    }
    let mut phi = vec![0; k];
    phi[0] = 1;
    phi[k - 1] = 1;
    phi
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "rank must be at least 1");
        Weight(coords)
    }

    pub fn zero(k: usize) -> Self {
        Weight::new(vec![0; k])
    }

    /// The i-th fundamental weight, 1-indexed.
    pub fn fundamental(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i > k {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: k,
            });
        }
        let mut coords = vec![0; k];
        coords[i - 1] = 1;
        Ok(Weight(coords))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scaled(&self, t: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * t).collect())
    }

    pub fn to_point(&self) -> Point {
        Point(self.0.iter().map(|&c| Rational64::from_integer(c)).collect())
    }

    /// Reflection in the wall of generator i (0 is the affine wall).
    pub fn reflect(&self, i: usize) -> Weight {
        let k = self.rank();
        assert!(i <= k, "generator out of range");
        let mut c = self.0.clone();
        if i == 0 {
            let t = self.level() - 1;
            for (cj, fj) in c.iter_mut().zip(highest_root_weight(k)) {
                *cj -= t * fj;
            }
        } else {
            let t = c[i - 1];
            if i >= 2 {
                c[i - 2] += t;
            }
            c[i - 1] -= 2 * t;
            if i < k {
                c[i] += t;
            }
        }
        Weight(c)
    }
}

impl Point {
    pub fn new(coords: Vec<Rational64>) -> Self {
        assert!(!coords.is_empty(), "rank must be at least 1");
        Point(coords)
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn level(&self) -> Rational64 {
        self.0.iter().sum()
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn translate(&self, w: &Weight) -> Point {
        Point(
            self.0
                .iter()
                .zip(w.coords())
                .map(|(a, &b)| a + Rational64::from_integer(b))
                .collect(),
        )
    }

    pub fn reflect(&self, i: usize) -> Point {
        let k = self.rank();
        assert!(i <= k, "generator out of range");
        let mut c = self.0.clone();
        if i == 0 {
            let t = self.level() - Rational64::one();
            for (cj, fj) in c.iter_mut().zip(highest_root_weight(k)) {
                *cj -= t * Rational64::from_integer(fj);
            }
        } else {
            let t = c[i - 1];
            if i >= 2 {
                c[i - 2] += t;
            }
            c[i - 1] -= t + t;
            if i < k {
                c[i] += t;
            }
        }
        Point(c)
    }
}

/// Positive roots as coefficient vectors over the simple roots: the interval
/// sums. There are k(k+1)/2 of them and the all-ones vector is the highest.
pub fn positive_roots(k: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::with_capacity(k * (k + 1) / 2);
    for a in 0..k {
        for b in a..k {
            let mut c = vec![0; k];
            c[a..=b].iter_mut().for_each(|x| *x = 1);
            roots.push(c);
        }
    }
    roots
}

/// Pairing of a root (given by simple-root coefficients) with a point.
pub fn pairing(root: &[i64], p: &Point) -> Rational64 {
    root.iter()
        .zip(p.coords())
        .map(|(&c, x)| Rational64::from_integer(c) * x)
        .sum()
}

/// The invariant symmetric form on two weight-basis points, through the
/// inverse Cartan matrix: min(i,j) - ij/(k+1) at 1-indexed (i,j).
pub fn form(x: &Point, y: &Point) -> Rational64 {
    let k = x.rank();
    assert_eq!(k, y.rank());
    let n = Rational64::from_integer(k as i64 + 1);
    let mut acc = Rational64::zero();
    for (i, xi) in x.coords().iter().enumerate() {
        for (j, yj) in y.coords().iter().enumerate() {
            let (a, b) = ((i + 1) as i64, (j + 1) as i64);
            let gram = Rational64::from_integer(a.min(b)) - Rational64::from_integer(a * b) / n;
            acc += gram * xi * yj;
        }
    }
    acc
}

/// A closed alcove of the affine arrangement: k+1 integral vertices, kept
/// sorted, plus one word whose group element carried the fundamental alcove
/// here. Equality ignores the word, since many words land on one alcove.
#[derive(Clone, Debug)]
pub struct Alcove {
    vertices: Vec<Weight>,
    word: Vec<usize>,
}

impl PartialEq for Alcove {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for Alcove {}

impl Alcove {
    fn from_vertices(mut vertices: Vec<Weight>, word: Vec<usize>) -> Self {
        vertices.sort();
        let levels: Vec<i64> = vertices.iter().map(Weight::level).collect();
        let min = levels.iter().min().expect("an alcove has vertices");
        debug_assert!(
            levels.iter().all(|l| l == min || *l == min + 1),
            "alcove vertices must sit on two adjacent levels"
        );
        Alcove { vertices, word }
    }

    /// Simplex on the origin and the fundamental weights.
    pub fn fundamental(k: usize) -> Self {
        let mut vertices = vec![Weight::zero(k)];
        for i in 1..=k {
            vertices.push(Weight::fundamental(k, i).unwrap());
        }
        Alcove::from_vertices(vertices, Vec::new())
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.vertices
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn rank(&self) -> usize {
        self.vertices[0].rank()
    }

    pub fn centroid(&self) -> Point {
        let k = self.rank();
        let n = Rational64::from_integer(k as i64 + 1);
        let coords = (0..k)
            .map(|j| {
                self.vertices
                    .iter()
                    .map(|v| Rational64::from_integer(v.coords()[j]))
                    .sum::<Rational64>()
                    / n
            })
            .collect();
        Point::new(coords)
    }

    /// Translating by a weight carries alcoves to alcoves; the word is
    /// recovered by walking to the translated centroid.
    pub fn translate(&self, gamma: &Weight) -> Result<Alcove> {
        let word = alcove_containing(&self.centroid().translate(gamma))?;
        let image = alcove_of_word(&word, self.rank());
        debug_assert_eq!(
            image.vertices,
            {
                let mut vs: Vec<Weight> =
                    self.vertices.iter().map(|v| v.add(gamma)).collect();
                vs.sort();
                vs
            },
            "translate must agree with vertexwise translation"
        );
        Ok(image)
    }

    /// Inside the m-fold dilation of the fundamental alcove: every vertex
    /// dominant with level at most m.
    pub fn in_dilation(&self, m: usize) -> bool {
        self.vertices
            .iter()
            .all(|v| v.is_dominant() && v.level() <= m as i64)
    }
}

/// The alcove reached from the fundamental one by the word's group element,
/// pulled back: vertices fold through the letters first to last.
pub fn alcove_of_word(word: &[usize], k: usize) -> Alcove {
    let vertices = Alcove::fundamental(k)
        .vertices()
        .iter()
        .map(|v| word.iter().fold(v.clone(), |w, &i| w.reflect(i)))
        .collect();
    Alcove::from_vertices(vertices, word.to_vec())
}

/// Word of the open alcove containing a generic point, by walking the point
/// into the fundamental alcove one violated wall at a time, preferring the
/// smallest generator. Points on a wall are rejected.
pub fn alcove_containing(p: &Point) -> Result<Vec<usize>> {
    let k = p.rank();
    for root in positive_roots(k) {
        if pairing(&root, p).is_integer() {
            return Err(Error::NonGenericPoint);
        }
    }
    let mut q = p.clone();
    let mut letters = Vec::new();
    loop {
        let wall = if q.level() > Rational64::one() {
            Some(0)
        } else {
            q.coords().iter().position(|c| c.is_negative()).map(|j| j + 1)
        };
        match wall {
            Some(i) => {
                q = q.reflect(i);
                letters.push(i);
            }
            None => break,
        }
        assert!(
            letters.len() <= 1_000_000,
            "walk failed to terminate; the point must be non-generic"
        );
    }
    letters.reverse();
    Ok(letters)
}

/// Orbit of the i-th fundamental weight under the finite Weyl group
/// (generators 1..=k). Its size is the binomial coefficient C(k+1, i).
pub fn weyl_orbit(k: usize, i: usize) -> Result<BTreeSet<Weight>> {
    let start = Weight::fundamental(k, i)?;
    let mut orbit = BTreeSet::from([start.clone()]);
    let mut frontier = vec![start];
    while let Some(w) = frontier.pop() {
        for j in 1..=k {
            let image = w.reflect(j);
            if orbit.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    Ok(orbit)
}

/// All dominant weights of a given level, in coordinate order.
pub fn dominant_weights(k: usize, level: usize) -> Vec<Weight> {
    fn rec(coords: &mut Vec<i64>, at: usize, left: i64, out: &mut Vec<Weight>) {
        if at == coords.len() - 1 {
            coords[at] = left;
            out.push(Weight::new(coords.clone()));
            return;
        }
        for v in 0..=left {
            coords[at] = v;
            rec(coords, at + 1, left - v, out);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0i64; k], 0, level as i64, &mut out);
    out
}

fn dominant_representative(gamma: &Weight) -> Weight {
    let mut w = gamma.clone();
    let mut steps = 0usize;
    while let Some(j) = w.coords().iter().position(|&c| c < 0) {
        w = w.reflect(j + 1);
        steps += 1;
        assert!(steps <= 1_000_000, "orbit walk failed to terminate");
    }
    w
}

/// Word of the alcove obtained by translating the fundamental alcove by
/// gamma, for gamma in the Weyl orbit of a fundamental weight. The group
/// element acts on the weight space as a rotation about the alcove's center
/// rather than a genuine translation, but it carries the fundamental alcove
/// exactly onto its translate.
pub fn pseudo_translation_word(gamma: &Weight) -> Result<Vec<usize>> {
    let k = gamma.rank();
    let rep = dominant_representative(gamma);
    let fundamental = (1..=k).any(|i| rep == Weight::fundamental(k, i).unwrap());
    if !fundamental {
        return Err(Error::NotAnOrbitWeight);
    }
    Ok(Alcove::fundamental(k).translate(gamma)?.word)
}

/// Rotation of the m-fold dilated simplex taking the origin to m times the
/// first fundamental weight and each m*w_i to m*w_{i+1}, the last to the
/// origin. An affine isometry of order k+1.
pub fn rotate_dilation(p: &Point, m: usize) -> Point {
    let k = p.rank();
    let mut coords = Vec::with_capacity(k);
    coords.push(Rational64::from_integer(m as i64) - p.level());
    coords.extend_from_slice(&p.coords()[..k - 1]);
    Point::new(coords)
}

/// Inverse rotation: the origin goes to m times the last fundamental weight.
pub fn rotate_dilation_inv(p: &Point, m: usize) -> Point {
    let k = p.rank();
    let mut coords = Vec::with_capacity(k);
    coords.extend_from_slice(&p.coords()[1..]);
    coords.push(Rational64::from_integer(m as i64) - p.level());
    Point::new(coords)
}
