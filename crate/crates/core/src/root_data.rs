//! Finite root systems in simple-root coordinates.
//!
//! Positive roots are generated as the closure of the simple roots under the
//! simple reflections and then sorted into the regular ordering: by height,
//! and within one height by descending lexicographic order of coordinates.
//! Long simple roots have squared length 2; short ones have 1 (B, C, F) or
//! 2/3 (G).

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::A,
        Kind::B,
        Kind::C,
        Kind::D,
        Kind::E,
        Kind::F,
        Kind::G,
    ];

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Kind::A | Kind::D | Kind::E)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::E => "E",
            Kind::F => "F",
            Kind::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            "E" => Ok(Kind::E),
            "F" => Ok(Kind::F),
            "G" => Ok(Kind::G),
            _ => Err(Error::UnknownKind(s.to_string())),
        }
    }
}

/// A Dynkin diagram: kind plus rank, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    kind: Kind,
    rank: usize,
}

impl Diagram {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidRank { kind, rank, reason });
        match kind {
            Kind::A if rank < 1 => bad("A requires rank >= 1"),
            Kind::B if rank < 2 => bad("B requires rank >= 2"),
            Kind::C if rank < 2 => bad("C requires rank >= 2"),
            Kind::D if rank < 4 => bad("D requires rank >= 4"),
            Kind::E if !(6..=8).contains(&rank) => bad("E requires rank 6, 7 or 8"),
            Kind::F if rank != 4 => bad("F requires rank 4"),
            Kind::G if rank != 2 => bad("G requires rank 2"),
            _ => Ok(Diagram { kind, rank }),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.kind {
            Kind::A => n * (n + 1) / 2,
            Kind::B | Kind::C => n * n,
            Kind::D => n * (n - 1),
            Kind::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Kind::F => 24,
            Kind::G => 6,
        }
    }

    /// Squared lengths of the simple roots and the edges of the diagram.
    fn simple_data(&self) -> (Vec<Rational>, Vec<(usize, usize)>) {
        let n = self.rank;
        let two = rational::int(2);
        let one = rational::one();
        let chain: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        match self.kind {
            Kind::A => (vec![two; n], chain),
            Kind::B => {
                let mut lens = vec![two; n];
                lens[n - 1] = one;
                (lens, chain)
            }
            Kind::C => {
                let mut lens = vec![one; n];
                lens[n - 1] = two;
                (lens, chain)
            }
            Kind::D => {
                let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                edges.push((n - 3, n - 1));
                (vec![two; n], edges)
            }
            Kind::E => {
                // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((3..n).map(|i| (i - 1, i)));
                (vec![two; n], edges)
            }
            Kind::F => (vec![two, two, one, one], chain),
            Kind::G => (vec![Rational::new(2, 3), two], chain),
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl FromStr for Diagram {
    type Err = Error;

    /// Parses names such as `B6` or `f4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.len().min(1));
        let kind: Kind = head.parse()?;
        let rank = tail
            .parse()
            .map_err(|_| Error::UnknownKind(s.to_string()))?;
        Diagram::new(kind, rank)
    }
}

/// Integer coordinates of a root over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&c| c <= 0) && self.0.iter().any(|&c| c < 0)
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }

    /// `self - k * other`
    pub fn sub_scaled(&self, k: i64, other: &Root) -> Root {
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - k * b)
                .collect(),
        )
    }
}

impl Deref for Root {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Regular-order comparison: height first, then the root with the larger
/// value at the first differing coordinate comes first.
pub fn regular_cmp(a: &Root, b: &Root) -> std::cmp::Ordering {
    a.height().cmp(&b.height()).then_with(|| b.0.cmp(&a.0))
}

/// The symmetric bilinear form on the simple roots.
///
/// Stored both as exact rationals and, for the hot path, as integers scaled
/// by the common denominator of all entries.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm {
    matrix: Vec<Vec<Rational>>,
    scaled: Vec<i64>,
    denom: i64,
}

impl BilinearForm {
    pub fn for_diagram(diagram: &Diagram) -> Self {
        let n = diagram.rank();
        let (lens, edges) = diagram.simple_data();
        let mut matrix = vec![vec![rational::zero(); n]; n];
        for i in 0..n {
            matrix[i][i] = lens[i];
        }
        for &(i, j) in &edges {
            let v = -lens[i].max(lens[j]) / 2;
            matrix[i][j] = v;
            matrix[j][i] = v;
        }
        Self::from_matrix(matrix)
    }

    pub fn from_matrix(matrix: Vec<Vec<Rational>>) -> Self {
        let n = matrix.len();
        let denom = matrix
            .iter()
            .flatten()
            .fold(1i64, |acc, q| lcm(acc, *q.denom()));
        let scaled = matrix
            .iter()
            .flatten()
            .map(|q| (q * denom).to_integer())
            .collect();
        debug_assert!(matrix.iter().all(|row| row.len() == n));
        BilinearForm {
            matrix,
            scaled,
            denom,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    /// `a^T B b`, exactly.
    pub fn eval(&self, a: &[i64], b: &[i64]) -> Rational {
        Rational::new(self.eval_scaled(a, b), self.denom)
    }

    fn eval_scaled(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.scaled[i * n..(i + 1) * n];
            acc += ai * row.iter().zip(b).map(|(m, bj)| m * bj).sum::<i64>();
        }
        acc
    }

    /// Leading principal minors all positive (Sylvester), in exact arithmetic.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.rank();
        let mut m = self.matrix.clone();
        for k in 0..n {
            if m[k][k] <= rational::zero() {
                return false;
            }
            for i in k + 1..n {
                let f = m[i][k] / m[k][k];
                for j in k..n {
                    let d = f * m[k][j];
                    m[i][j] -= d;
                }
            }
        }
        true
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// An immutable positive root system in regular ordering.
#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: Diagram,
    form: BilinearForm,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    lengths: Vec<Rational>,
    // n x n tables: index of roots[i] + roots[j] / roots[i] - roots[j] when
    // that vector is a positive root.
    sums: Vec<Option<u32>>,
    diffs: Vec<Option<u32>>,
}

impl RootSystem {
    pub fn build(diagram: Diagram) -> Self {
        let form = BilinearForm::for_diagram(&diagram);
        let rank = diagram.rank();
        let mut roots = reflection_closure(&form, rank);
        roots.sort_by(regular_cmp);
        let index: HashMap<Root, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let lengths = roots.iter().map(|r| form.eval(r, r)).collect();
        let n = roots.len();
        let mut sums = vec![None; n * n];
        let mut diffs = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                sums[i * n + j] = index.get(&roots[i].add(&roots[j])).map(|&k| k as u32);
                diffs[i * n + j] = index.get(&roots[i].sub(&roots[j])).map(|&k| k as u32);
            }
        }
        RootSystem {
            diagram,
            form,
            roots,
            index,
            lengths,
            sums,
            diffs,
        }
    }

    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        Ok(Self::build(Diagram::new(kind, rank)?))
    }

    pub fn diagram(&self) -> Diagram {
        self.diagram
    }

    pub fn kind(&self) -> Kind {
        self.diagram.kind()
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn is_simple(&self, i: usize) -> bool {
        i < self.rank()
    }

    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> Rational {
        self.form.eval(a, b)
    }

    /// Inner product of two positive roots given by index.
    pub fn inner(&self, i: usize, j: usize) -> Rational {
        self.form.eval(&self.roots[i], &self.roots[j])
    }

    pub fn squared_length(&self, i: usize) -> Rational {
        self.lengths[i]
    }

    pub fn squared_length_of(&self, coords: &[i64]) -> Rational {
        self.form.eval(coords, coords)
    }

    pub fn index_of_root(&self, coords: &[i64]) -> Option<usize> {
        // A HashMap<Root, _> can't be queried by &[i64] without allocating.
        if coords.len() != self.rank() || coords.iter().any(|&c| c < 0) {
            return None;
        }
        self.index.get(&Root::new(coords.to_vec())).copied()
    }

    /// Whether `coords` is a root of either sign.
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if coords.iter().all(|&c| c <= 0) {
            let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
            self.index_of_root(&neg).is_some()
        } else {
            self.index_of_root(coords).is_some()
        }
    }

    pub fn index_of_sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i * self.len() + j].map(|k| k as usize)
    }

    /// Index of `roots[i] - roots[j]` when that is a positive root.
    pub fn index_of_difference(&self, i: usize, j: usize) -> Option<usize> {
        self.diffs[i * self.len() + j].map(|k| k as usize)
    }

    /// Index of the highest root.
    pub fn highest_root(&self) -> usize {
        self.len() - 1
    }
}

fn reflection_closure(form: &BilinearForm, rank: usize) -> Vec<Root> {
    let simple: Vec<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
    let mut seen: std::collections::HashSet<Root> = simple.iter().cloned().collect();
    let mut out = simple.clone();
    let mut queue: VecDeque<Root> = simple.iter().cloned().collect();
    while let Some(beta) = queue.pop_front() {
        for (i, alpha) in simple.iter().enumerate() {
            let c = form.eval(&beta, alpha) * 2 / form.entry(i, i);
            assert!(c.is_integer(), "non-integral Cartan number");
            let c = c.to_integer();
            if c == 0 {
                continue;
            }
            let image = beta.sub_scaled(c, alpha);
            if image.is_positive() && seen.insert(image.clone()) {
                out.push(image.clone());
                queue.push_back(image);
            }
        }
    }
    out
}
