//! Structure constants `N(a, b)` with `[e_a, e_b] = N(a, b) e_{a+b}`.
//!
//! Constants on extraspecial pairs are seeded with `+(p + 1)`. Every other
//! positive pair `(r, s)` belongs to a quartet `(r1, r, s, s1)` and is
//! obtained recursively from four constants whose sums have strictly smaller
//! height:
//!
//! ```text
//! N(r, s) = |r+s|^2 / N(r1, s1) * ( N(s-r1, r1) N(s1-r, r) |s-r1|^2 / (|s|^2 |s1|^2)
//!                                 + N(r1, r-r1) N(s1-s, s) |r-r1|^2 / (|r|^2 |s1|^2) )
//! ```
//!
//! When every quartet is simple (types A, B, C, D, E) the length factors
//! collapse to `phi = |r1+s1|^2 / |s1|^2`, and for A, B, D, E to 1.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pairs::{ExtraspecialAssignment, Seed, SumDictionary};
use crate::quartets::Quartet;
use crate::rational::{self, Rational};
use crate::root_data::{Kind, Root, RootSystem};

/// Which quartet formula the recursive fill uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuartetFormula {
    /// `(N1 N2 + N3 N4) / N(r1, s1)`: simply-laced and B.
    Unweighted,
    /// The unweighted value times `phi`: C.
    Phi,
    /// Full length-weighted formula, valid for every diagram.
    General,
}

impl QuartetFormula {
    /// The specialized formula for a diagram: F and G have non-simple quartets
    /// (or no theorem saying otherwise) and always get the general one.
    pub fn specialized_for(kind: Kind) -> Self {
        match kind {
            Kind::A | Kind::B | Kind::D | Kind::E => QuartetFormula::Unweighted,
            Kind::C => QuartetFormula::Phi,
            Kind::F | Kind::G => QuartetFormula::General,
        }
    }

    pub fn for_kind(kind: Kind, force_general: bool) -> Self {
        if force_general {
            QuartetFormula::General
        } else {
            Self::specialized_for(kind)
        }
    }
}

impl fmt::Display for QuartetFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuartetFormula::Unweighted => "unweighted",
            QuartetFormula::Phi => "phi-weighted",
            QuartetFormula::General => "general",
        };
        f.write_str(s)
    }
}

/// Antisymmetric table of `N(roots[i], roots[j])` over positive roots.
/// `None` marks a slot that has not been computed yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantMatrix {
    n: usize,
    table: Vec<Option<i64>>,
}

impl ConstantMatrix {
    pub fn unknown(n: usize) -> Self {
        ConstantMatrix {
            n,
            table: vec![None; n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.table[i * self.n + j]
    }

    /// Entry of a completed matrix.
    pub fn value(&self, i: usize, j: usize) -> Result<i64> {
        self.get(i, j)
            .ok_or_else(|| Error::Inconsistent(format!("entry ({i}, {j}) not computed")))
    }

    /// Sets `(i, j)` to `v` and `(j, i)` to `-v`.
    pub fn fill(&mut self, i: usize, j: usize, v: i64) {
        self.table[i * self.n + j] = Some(v);
        self.table[j * self.n + i] = Some(-v);
    }

    /// Raw single-slot write, for fault injection in tests and for import.
    pub fn set_entry(&mut self, i: usize, j: usize, v: Option<i64>) {
        self.table[i * self.n + j] = v;
    }

    pub fn is_complete(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    /// Nonzero entries with `i < j`.
    pub fn upper_nonzero(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if let Some(v) = self.get(i, j).filter(|&v| v != 0) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Builds a complete matrix from its `i < j` nonzero entries.
    pub fn from_upper(n: usize, entries: &[(usize, usize, i64)]) -> Result<Self> {
        let mut m = ConstantMatrix::unknown(n);
        for i in 0..n {
            for j in 0..n {
                m.set_entry(i, j, Some(0));
            }
        }
        for &(i, j, v) in entries {
            if i >= n || j >= n || i >= j {
                return Err(Error::Import(format!("bad entry index ({i}, {j})")));
            }
            m.fill(i, j, v);
        }
        Ok(m)
    }
}

/// The four constants feeding a quartet, `0` where the difference root is absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuartetInputs {
    /// N(s - r1, r1)
    pub n1: i64,
    /// N(s1 - r, r)
    pub n2: i64,
    /// N(r1, r - r1)
    pub n3: i64,
    /// N(s1 - s, s)
    pub n4: i64,
}

/// Evaluates one quartet formula exactly. The result is not yet checked for
/// integrality.
pub fn evaluate_quartet(
    formula: QuartetFormula,
    system: &RootSystem,
    q: &Quartet,
    seed: &Seed,
    inputs: QuartetInputs,
) -> Rational {
    let n_r1s1 = seed.value;
    match formula {
        QuartetFormula::Unweighted => {
            Rational::new(inputs.n1 * inputs.n2 + inputs.n3 * inputs.n4, n_r1s1)
        }
        QuartetFormula::Phi => {
            Rational::new(inputs.n1 * inputs.n2 + inputs.n3 * inputs.n4, n_r1s1) * seed.phi
        }
        QuartetFormula::General => {
            let len = |i: usize| system.squared_length(i);
            let gamma = system.index_of_sum(q.r, q.s).expect("quartet sum");
            let mut bracket = rational::zero();
            if let Some(d) = system.index_of_difference(q.s, q.r1) {
                // s1 - r is the same vector as s - r1
                bracket += rational::int(inputs.n1 * inputs.n2) * len(d) / (len(q.s) * len(q.s1));
            }
            if let Some(d) = system.index_of_difference(q.r, q.r1) {
                bracket += rational::int(inputs.n3 * inputs.n4) * len(d) / (len(q.r) * len(q.s1));
            }
            len(gamma) / rational::int(n_r1s1) * bracket
        }
    }
}

/// Counters gathered during a fill.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FillStats {
    /// Deepest nesting of recursive quartet evaluations.
    pub max_depth: usize,
    /// Quartet formula evaluations performed.
    pub quartet_evaluations: usize,
}

/// Recursive, memoized computation of constants on positive roots.
pub struct Filler<'a> {
    system: &'a RootSystem,
    seeds: &'a ExtraspecialAssignment,
    formula: QuartetFormula,
    matrix: ConstantMatrix,
    stats: FillStats,
}

impl<'a> Filler<'a> {
    /// Starts a fill with every extraspecial slot already seeded.
    pub fn new(
        system: &'a RootSystem,
        seeds: &'a ExtraspecialAssignment,
        formula: QuartetFormula,
    ) -> Self {
        let mut matrix = ConstantMatrix::unknown(system.len());
        for i in 0..system.len() {
            matrix.fill(i, i, 0);
        }
        for (_, seed) in seeds.iter() {
            matrix.fill(seed.pair.i, seed.pair.j, seed.value);
        }
        Filler {
            system,
            seeds,
            formula,
            matrix,
            stats: FillStats::default(),
        }
    }

    pub fn matrix(&self) -> &ConstantMatrix {
        &self.matrix
    }

    pub fn stats(&self) -> FillStats {
        self.stats
    }

    pub fn into_matrix(self) -> ConstantMatrix {
        self.matrix
    }

    /// `N(roots[r], roots[s])`, memoized together with its transpose.
    pub fn n_positive(&mut self, r: usize, s: usize) -> Result<i64> {
        self.n_positive_at(r, s, 0)
    }

    fn n_positive_at(&mut self, r: usize, s: usize, depth: usize) -> Result<i64> {
        if let Some(v) = self.matrix.get(r, s) {
            return Ok(v);
        }
        if r > s {
            return Ok(-self.n_positive_at(s, r, depth)?);
        }
        let Some(gamma) = self.system.index_of_sum(r, s) else {
            self.matrix.fill(r, s, 0);
            return Ok(0);
        };
        // Every summable pair has an extraspecial pair, and extraspecial slots
        // are pre-seeded, so (r, s) here is the non-extraspecial member of a quartet.
        let seed = *self.seeds.seed(gamma).ok_or_else(|| {
            Error::Inconsistent(format!(
                "sum {gamma} of ({r}, {s}) has no extraspecial pair"
            ))
        })?;
        let q = Quartet {
            r1: seed.pair.i,
            r,
            s,
            s1: seed.pair.j,
        };
        debug_assert!(q.r1 < q.r && q.s < q.s1);
        let depth = depth + 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        self.stats.quartet_evaluations += 1;

        let mut inputs = QuartetInputs::default();
        if let Some(d) = self.system.index_of_difference(s, q.r1) {
            inputs.n1 = self.n_positive_at(d, q.r1, depth)?;
            inputs.n2 = self.n_positive_at(d, r, depth)?;
        }
        if let Some(d) = self.system.index_of_difference(r, q.r1) {
            inputs.n3 = self.n_positive_at(q.r1, d, depth)?;
            inputs.n4 = self.n_positive_at(d, s, depth)?;
        }
        let value = evaluate_quartet(self.formula, self.system, &q, &seed, inputs);
        let v = integral(value, r, s)?;
        if v == 0 {
            return Err(Error::Inconsistent(format!(
                "quartet formula gave 0 for the summable pair ({r}, {s})"
            )));
        }
        self.matrix.fill(r, s, v);
        Ok(v)
    }

    /// Fills every slot, in ascending `(i, j)` order.
    pub fn fill_all(&mut self) -> Result<()> {
        let n = self.system.len();
        for i in 0..n {
            for j in 0..n {
                self.n_positive(i, j)?;
            }
        }
        Ok(())
    }
}

/// All positive constants with the diagram's specialized formula.
pub fn compute_all_positive(system: &RootSystem) -> Result<ConstantMatrix> {
    compute_all_positive_with(system, QuartetFormula::specialized_for(system.kind()))
}

pub fn compute_all_positive_with(
    system: &RootSystem,
    formula: QuartetFormula,
) -> Result<ConstantMatrix> {
    let dict = SumDictionary::build(system);
    let seeds = ExtraspecialAssignment::build(system, &dict)?;
    let mut filler = Filler::new(system, &seeds, formula);
    filler.fill_all()?;
    Ok(filler.into_matrix())
}

/// A root of either sign, by positive-root index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedRoot {
    pub index: usize,
    pub negative: bool,
}

impl SignedRoot {
    pub fn pos(index: usize) -> Self {
        SignedRoot {
            index,
            negative: false,
        }
    }

    pub fn neg(index: usize) -> Self {
        SignedRoot {
            index,
            negative: true,
        }
    }

    pub fn opposite(self) -> Self {
        SignedRoot {
            index: self.index,
            negative: !self.negative,
        }
    }

    pub fn coords(&self, system: &RootSystem) -> Root {
        let r = system.root(self.index);
        if self.negative {
            r.neg()
        } else {
            r.clone()
        }
    }

    /// Every signed root of a system: positives first, then negatives.
    pub fn all(system: &RootSystem) -> Vec<SignedRoot> {
        let n = system.len();
        (0..n)
            .map(SignedRoot::pos)
            .chain((0..n).map(SignedRoot::neg))
            .collect()
    }
}

fn integral(value: Rational, a: usize, b: usize) -> Result<i64> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral {
            r: a,
            s: b,
            value: rational::render(&value),
        })
    }
}

/// `N(roots[a], -roots[b_opposite])` from a completed positive matrix.
///
/// With `c = a + b`: if `c > 0`, `N(a, b) = N(c, -b) |c|^2 / |a|^2`; if `c < 0`,
/// `N(a, b) = N(-c, a) |c|^2 / |b|^2`. Returns 0 when `c` is not a root and
/// [`Error::CartanBracket`] when `a = -b`.
pub fn n_pos_neg(
    system: &RootSystem,
    matrix: &ConstantMatrix,
    a: usize,
    b_opposite: usize,
) -> Result<i64> {
    if a == b_opposite {
        return Err(Error::CartanBracket(a));
    }
    if let Some(c) = system.index_of_difference(a, b_opposite) {
        let inner = matrix.value(c, b_opposite)?;
        let v = rational::int(inner) * system.squared_length(c) / system.squared_length(a);
        return integral(v, a, b_opposite);
    }
    if let Some(c) = system.index_of_difference(b_opposite, a) {
        let inner = matrix.value(c, a)?;
        let v = rational::int(inner) * system.squared_length(c) / system.squared_length(b_opposite);
        return integral(v, a, b_opposite);
    }
    Ok(0)
}

/// `N(a, b)` for roots of any sign.
pub fn n_any(
    system: &RootSystem,
    matrix: &ConstantMatrix,
    a: SignedRoot,
    b: SignedRoot,
) -> Result<i64> {
    if a.index == b.index && a.negative != b.negative {
        return Err(Error::CartanBracket(a.index));
    }
    match (a.negative, b.negative) {
        (false, false) => matrix.value(a.index, b.index),
        (false, true) => n_pos_neg(system, matrix, a.index, b.index),
        (true, false) => Ok(-n_pos_neg(system, matrix, b.index, a.index)?),
        (true, true) => Ok(-matrix.value(a.index, b.index)?),
    }
}
