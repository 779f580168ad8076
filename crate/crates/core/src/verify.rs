//! Independent certification of a constant matrix.
//!
//! Every check is a pure function of the system and the matrix and lists
//! witnesses for each failing case. None of them reuses the quartet recursion:
//! they only read matrix entries (extended to negative roots by [`n_any`]) and
//! test the Chevalley, Tits, Carter and Jacobi relations directly.

use std::collections::BTreeMap;

use crate::constants::{
    compute_all_positive_with, evaluate_quartet, n_any, ConstantMatrix, QuartetFormula,
    QuartetInputs, SignedRoot,
};
use crate::error::{Error, Result};
use crate::pairs::{ExtraspecialAssignment, SumDictionary};
use crate::quartets::enumerate_quartets;
use crate::rational::{self, Rational};
use crate::report::{Check, VerificationReport, Witness};
use crate::root_data::{Kind, RootSystem};

/// Signed roots indexed `0..n` (positive) and `n..2n` (negative), with sums
/// and constants tabulated once.
struct SignedTable<'a> {
    system: &'a RootSystem,
    n: usize,
    /// `sum[a * 2n + b]`: signed index of `a + b` when it is a root.
    sum: Vec<Option<usize>>,
    /// `N(a, b)`, `None` when the entry is unavailable or `a = -b`.
    value: Vec<Option<i64>>,
}

impl<'a> SignedTable<'a> {
    fn new(system: &'a RootSystem, matrix: &ConstantMatrix) -> Self {
        let n = system.len();
        let m = 2 * n;
        let mut sum = vec![None; m * m];
        let mut value = vec![None; m * m];
        for a in 0..m {
            for b in 0..m {
                let (sa, sb) = (Self::signed_of(n, a), Self::signed_of(n, b));
                sum[a * m + b] = Self::signed_sum(system, sa, sb).map(|s| Self::ordinal(n, s));
                value[a * m + b] = n_any(system, matrix, sa, sb).ok();
            }
        }
        SignedTable {
            system,
            n,
            sum,
            value,
        }
    }

    fn signed_of(n: usize, k: usize) -> SignedRoot {
        if k < n {
            SignedRoot::pos(k)
        } else {
            SignedRoot::neg(k - n)
        }
    }

    fn ordinal(n: usize, s: SignedRoot) -> usize {
        if s.negative {
            s.index + n
        } else {
            s.index
        }
    }

    fn signed_sum(system: &RootSystem, a: SignedRoot, b: SignedRoot) -> Option<SignedRoot> {
        match (a.negative, b.negative) {
            (false, false) => system.index_of_sum(a.index, b.index).map(SignedRoot::pos),
            (true, true) => system.index_of_sum(a.index, b.index).map(SignedRoot::neg),
            (false, true) => Self::difference(system, a.index, b.index),
            (true, false) => Self::difference(system, b.index, a.index),
        }
    }

    /// `roots[i] - roots[j]` as a signed root.
    fn difference(system: &RootSystem, i: usize, j: usize) -> Option<SignedRoot> {
        system
            .index_of_difference(i, j)
            .map(SignedRoot::pos)
            .or_else(|| system.index_of_difference(j, i).map(SignedRoot::neg))
    }

    fn size(&self) -> usize {
        2 * self.n
    }

    fn opposite(&self, a: usize) -> usize {
        if a < self.n {
            a + self.n
        } else {
            a - self.n
        }
    }

    fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sum[a * self.size() + b]
    }

    fn n(&self, a: usize, b: usize) -> Option<i64> {
        self.value[a * self.size() + b]
    }

    fn len(&self, a: usize) -> Rational {
        self.system.squared_length(a % self.n)
    }

    fn coords(&self, a: usize) -> Vec<i64> {
        Self::signed_of(self.n, a).coords(self.system).into_coords()
    }

    fn witness(&self, roots: &[usize], detail: impl Into<String>) -> Witness {
        Witness::new(roots.iter().map(|&a| self.coords(a)).collect(), detail)
    }
}

fn report(system: &RootSystem, checks: Vec<Check>) -> VerificationReport {
    VerificationReport::new(system.diagram().to_string(), checks)
}

/// `table[i][j] = -table[j][i]` for every ordered pair, with no missing entry.
pub fn check_antisymmetry(matrix: &ConstantMatrix) -> VerificationReport {
    let n = matrix.size();
    let mut check = Check::new("antisymmetry");
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (matrix.get(i, j), matrix.get(j, i));
            let ok = matches!((a, b), (Some(x), Some(y)) if x == -y);
            check.record(ok, || {
                Witness::new(vec![], format!("N[{i}][{j}] = {a:?}, N[{j}][{i}] = {b:?}"))
            });
        }
    }
    VerificationReport::new(format!("{n}x{n} matrix"), vec![check])
}

/// Entries are present, and nonzero exactly on summable positive pairs.
pub fn check_support(system: &RootSystem, matrix: &ConstantMatrix) -> VerificationReport {
    let n = system.len();
    let mut check = Check::new("support");
    if matrix.size() != n {
        check.record(false, || {
            Witness::new(
                vec![],
                format!("matrix size {} for {n} roots", matrix.size()),
            )
        });
        return report(system, vec![check]);
    }
    for i in 0..n {
        for j in 0..n {
            let summable = system.index_of_sum(i, j).is_some();
            let v = matrix.get(i, j);
            check.record(matches!(v, Some(x) if (x != 0) == summable), || {
                Witness::new(
                    vec![system.root(i).to_vec(), system.root(j).to_vec()],
                    format!("entry {v:?}, summable {summable}"),
                )
            });
        }
    }
    report(system, vec![check])
}

/// `|N(a, b)| = p + 1` for every signed pair with `a + b` a root, where `p`
/// is the largest `k` with `b - k a` a root.
pub fn check_chevalley_magnitude(
    system: &RootSystem,
    matrix: &ConstantMatrix,
) -> VerificationReport {
    let t = SignedTable::new(system, matrix);
    let mut check = Check::new("chevalley magnitude");
    for a in 0..t.size() {
        let alpha = t.coords(a);
        for b in 0..t.size() {
            if t.sum(a, b).is_none() {
                continue;
            }
            let beta = t.coords(b);
            let mut p = 0i64;
            loop {
                let v: Vec<i64> = beta
                    .iter()
                    .zip(&alpha)
                    .map(|(y, x)| y - (p + 1) * x)
                    .collect();
                if !system.is_root(&v) {
                    break;
                }
                p += 1;
            }
            let got = t.n(a, b);
            check.record(got.map(i64::abs) == Some(p + 1), || {
                t.witness(&[a, b], format!("N = {got:?}, p = {p}"))
            });
        }
    }
    report(system, vec![check])
}

/// Multiplicity of each `|N|` over all signed summable pairs.
pub fn magnitude_histogram(system: &RootSystem, matrix: &ConstantMatrix) -> BTreeMap<i64, usize> {
    let t = SignedTable::new(system, matrix);
    let mut out = BTreeMap::new();
    for a in 0..t.size() {
        for b in 0..t.size() {
            if t.sum(a, b).is_some() {
                if let Some(v) = t.n(a, b) {
                    *out.entry(v.abs()).or_insert(0) += 1;
                }
            }
        }
    }
    out
}

/// For `a + b + c = 0`: `N(a,b)/|c|^2 = N(b,c)/|a|^2 = N(c,a)/|b|^2`.
pub fn check_tits_triples(system: &RootSystem, matrix: &ConstantMatrix) -> VerificationReport {
    let t = SignedTable::new(system, matrix);
    let mut check = Check::new("tits triples");
    for a in 0..t.size() {
        for b in 0..t.size() {
            let Some(s) = t.sum(a, b) else { continue };
            let c = t.opposite(s);
            let ratios = [(a, b, c), (b, c, a), (c, a, b)]
                .map(|(x, y, z)| t.n(x, y).map(|v| rational::int(v) / t.len(z)));
            let ok = ratios.iter().all(Option::is_some)
                && ratios[0] == ratios[1]
                && ratios[1] == ratios[2];
            check.record(ok, || {
                let shown: Vec<String> = ratios
                    .iter()
                    .map(|r| r.map_or("?".into(), |q| rational::render(&q)))
                    .collect();
                t.witness(&[a, b, c], format!("ratios {}", shown.join(", ")))
            });
        }
    }
    report(system, vec![check])
}

/// For `a + b + c + d = 0` with no two opposite:
/// `N(a,b)N(c,d)/|a+b|^2 + N(b,c)N(a,d)/|b+c|^2 + N(c,a)N(b,d)/|c+a|^2 = 0`.
///
/// Quadruples are visited once per multiset.
pub fn check_carter_quadruples(system: &RootSystem, matrix: &ConstantMatrix) -> VerificationReport {
    let t = SignedTable::new(system, matrix);
    let m = t.size();
    let mut index: std::collections::HashMap<Vec<i64>, usize> = std::collections::HashMap::new();
    for a in 0..m {
        index.insert(t.coords(a), a);
    }
    let coords: Vec<Vec<i64>> = (0..m).map(|a| t.coords(a)).collect();
    let term = |x: usize, y: usize, z: usize, w: usize| -> Option<Rational> {
        match t.sum(x, y) {
            None => Some(rational::zero()),
            Some(s) => {
                let p = t.n(x, y)? * t.n(z, w)?;
                Some(rational::int(p) / t.len(s))
            }
        }
    };
    let mut check = Check::new("carter quadruples");
    for i in 0..m {
        for j in i..m {
            if t.opposite(i) == j {
                continue;
            }
            for k in j..m {
                if t.opposite(i) == k || t.opposite(j) == k {
                    continue;
                }
                let neg: Vec<i64> = (0..system.rank())
                    .map(|r| -(coords[i][r] + coords[j][r] + coords[k][r]))
                    .collect();
                let Some(&l) = index.get(&neg) else { continue };
                if l < k || [i, j, k].iter().any(|&x| t.opposite(x) == l) {
                    continue;
                }
                let terms = [term(i, j, k, l), term(j, k, i, l), term(k, i, j, l)];
                let total: Option<Rational> = terms
                    .iter()
                    .try_fold(rational::zero(), |acc, x| Some(acc + (*x)?));
                check.record(total == Some(rational::zero()), || {
                    let shown = total.map_or("?".into(), |q| rational::render(&q));
                    t.witness(&[i, j, k, l], format!("sum = {shown}"))
                });
            }
        }
    }
    report(system, vec![check])
}

/// Solves `A x = b` over the rationals for a nonsingular square `A`.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != rational::zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && a[r][col] != rational::zero() {
                let f = a[r][col] / a[col][col];
                for c in col..n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
                let v = b[col];
                b[r] -= f * v;
            }
        }
    }
    Some((0..n).map(|i| b[i] / a[i][i]).collect())
}

/// Sparse element of the Lie algebra over the Chevalley basis.
type Element = Vec<(usize, Rational)>;

/// Structure table of the full Lie algebra on `{h_i} ∪ {e_a}`.
///
/// Basis index `k < rank` is `h_k`; `rank + a` is `e_a` for signed ordinal `a`.
struct LieAlgebra {
    dim: usize,
    table: Vec<Element>,
    /// Basis pairs whose bracket needed an unavailable constant.
    missing: Vec<(usize, usize)>,
}

impl LieAlgebra {
    fn new(t: &SignedTable) -> Self {
        let system = t.system;
        let rank = system.rank();
        let dim = rank + t.size();
        let simple_len: Vec<Rational> = (0..rank).map(|i| system.squared_length(i)).collect();
        // <a, h_i> = 2 (a, alpha_i) / (alpha_i, alpha_i)
        let pairing = |a: &[i64], i: usize| -> Rational {
            let mut alpha_i = vec![0; rank];
            alpha_i[i] = 1;
            rational::int(2) * system.inner_product(a, &alpha_i) / simple_len[i]
        };
        let cartan: Vec<Vec<Rational>> = (0..rank)
            .map(|k| {
                let mut ak = vec![0; rank];
                ak[k] = 1;
                (0..rank).map(|i| pairing(&ak, i)).collect()
            })
            .collect();
        // h_a for each positive root, from <alpha_k, h_a> = 2 (alpha_k, a) / (a, a).
        let coroots: Vec<Vec<Rational>> = (0..t.n)
            .map(|a| {
                let root = system.root(a);
                let rhs: Vec<Rational> = (0..rank)
                    .map(|k| {
                        let mut ak = vec![0; rank];
                        ak[k] = 1;
                        rational::int(2) * system.inner_product(&ak, root)
                            / system.squared_length(a)
                    })
                    .collect();
                solve(cartan.clone(), rhs).expect("Cartan matrix is nonsingular")
            })
            .collect();

        let mut table = vec![Vec::new(); dim * dim];
        let mut missing = Vec::new();
        for x in 0..dim {
            for y in 0..dim {
                let v: Element = match (x < rank, y < rank) {
                    (true, true) => Vec::new(),
                    (true, false) => {
                        let c = pairing(&t.coords(y - rank), x);
                        vec![(y, c)]
                    }
                    (false, true) => {
                        let c = pairing(&t.coords(x - rank), y);
                        vec![(x, -c)]
                    }
                    (false, false) => {
                        let (a, b) = (x - rank, y - rank);
                        if t.opposite(a) == b {
                            let sign = if a < t.n { 1 } else { -1 };
                            coroots[a % t.n]
                                .iter()
                                .enumerate()
                                .map(|(i, &c)| (i, c * rational::int(sign)))
                                .collect()
                        } else if let Some(s) = t.sum(a, b) {
                            match t.n(a, b) {
                                Some(v) => vec![(rank + s, rational::int(v))],
                                None => {
                                    missing.push((x, y));
                                    Vec::new()
                                }
                            }
                        } else {
                            Vec::new()
                        }
                    }
                };
                table[x * dim + y] = v
                    .into_iter()
                    .filter(|(_, c)| *c != rational::zero())
                    .collect();
            }
        }
        LieAlgebra {
            dim,
            table,
            missing,
        }
    }

    fn bracket(&self, x: usize, y: usize) -> &Element {
        &self.table[x * self.dim + y]
    }

    /// `[[x, y], z]` accumulated into `acc`.
    fn add_nested(&self, x: usize, y: usize, z: usize, acc: &mut BTreeMap<usize, Rational>) {
        for &(b, c) in self.bracket(x, y) {
            for &(d, e) in self.bracket(b, z) {
                *acc.entry(d).or_insert_with(rational::zero) += c * e;
            }
        }
    }
}

/// The Jacobi identity on every triple of basis elements `x < y < z` of the
/// full algebra `{h_i} ∪ {e_a}`.
pub fn check_jacobi(system: &RootSystem, matrix: &ConstantMatrix) -> VerificationReport {
    let t = SignedTable::new(system, matrix);
    let lie = LieAlgebra::new(&t);
    let rank = system.rank();
    let name = |k: usize| -> String {
        if k < rank {
            format!("h{k}")
        } else {
            format!("e{:?}", t.coords(k - rank))
        }
    };
    let mut defined = Check::new("bracket defined");
    for &(x, y) in &lie.missing {
        defined.record(false, || {
            Witness::new(vec![], format!("[{}, {}]", name(x), name(y)))
        });
    }
    let mut check = Check::new("jacobi");
    let mut acc = BTreeMap::new();
    for x in 0..lie.dim {
        for y in x + 1..lie.dim {
            for z in y + 1..lie.dim {
                acc.clear();
                lie.add_nested(x, y, z, &mut acc);
                lie.add_nested(y, z, x, &mut acc);
                lie.add_nested(z, x, y, &mut acc);
                let ok = acc.values().all(|c| *c == rational::zero());
                check.record(ok, || {
                    let roots = [x, y, z]
                        .iter()
                        .filter(|&&k| k >= rank)
                        .map(|&k| t.coords(k - rank))
                        .collect();
                    let nonzero: Vec<String> = acc
                        .iter()
                        .filter(|(_, c)| **c != rational::zero())
                        .map(|(&k, c)| format!("{} {}", rational::render(c), name(k)))
                        .collect();
                    Witness::new(
                        roots,
                        format!(
                            "[{}, {}, {}] -> {}",
                            name(x),
                            name(y),
                            name(z),
                            nonzero.join(" + ")
                        ),
                    )
                });
            }
        }
    }
    report(system, vec![defined, check])
}

/// Recomputes every non-extraspecial constant with the diagram's specialized
/// formula and with the general one, per quartet and as whole matrices.
pub fn cross_check_formulas(system: &RootSystem) -> Result<VerificationReport> {
    let specialized = QuartetFormula::specialized_for(system.kind());
    if matches!(system.kind(), Kind::F | Kind::G) {
        return Err(Error::Unsupported(format!(
            "formula cross-check needs a diagram of type A-E, got {}",
            system.diagram()
        )));
    }
    let dict = SumDictionary::build(system);
    let seeds = ExtraspecialAssignment::build(system, &dict)?;
    let general = compute_all_positive_with(system, QuartetFormula::General)?;

    let mut per_quartet = Check::new(format!("{specialized} = general per quartet"));
    for q in enumerate_quartets(system, &dict) {
        let gamma = system.index_of_sum(q.r1, q.s1).expect("sum");
        let seed = seeds.seed(gamma).expect("seed");
        let mut inputs = QuartetInputs::default();
        if let Some(d) = system.index_of_difference(q.s, q.r1) {
            inputs.n1 = general.value(d, q.r1)?;
            inputs.n2 = general.value(d, q.r)?;
        }
        if let Some(d) = system.index_of_difference(q.r, q.r1) {
            inputs.n3 = general.value(q.r1, d)?;
            inputs.n4 = general.value(d, q.s)?;
        }
        let a = evaluate_quartet(specialized, system, &q, seed, inputs);
        let b = evaluate_quartet(QuartetFormula::General, system, &q, seed, inputs);
        let expected = rational::int(general.value(q.r, q.s)?);
        per_quartet.record(a == b && b == expected, || {
            let roots = q
                .as_tuple()
                .iter()
                .map(|&i| system.root(i).to_vec())
                .collect();
            Witness::new(
                roots,
                format!(
                    "{specialized} {}, general {}, stored {}",
                    rational::render(&a),
                    rational::render(&b),
                    rational::render(&expected)
                ),
            )
        });
    }

    let mut whole = Check::new(format!("{specialized} = general matrix"));
    match compute_all_positive_with(system, specialized) {
        Ok(m) => {
            for i in 0..system.len() {
                for j in i + 1..system.len() {
                    let (a, b) = (m.get(i, j), general.get(i, j));
                    whole.record(a == b, || {
                        Witness::new(
                            vec![system.root(i).to_vec(), system.root(j).to_vec()],
                            format!("{specialized} {a:?}, general {b:?}"),
                        )
                    });
                }
            }
        }
        Err(e) => whole.record(false, || Witness::new(vec![], e.to_string())),
    }
    Ok(report(system, vec![per_quartet, whole]))
}

/// All matrix oracles: support, antisymmetry, magnitude, Tits, Carter, Jacobi.
pub fn verify_all(system: &RootSystem, matrix: &ConstantMatrix) -> VerificationReport {
    let mut out = check_support(system, matrix);
    let mut anti = check_antisymmetry(matrix);
    anti.diagram = out.diagram.clone();
    out = out
        .merge(anti)
        .merge(check_chevalley_magnitude(system, matrix))
        .merge(check_tits_triples(system, matrix))
        .merge(check_carter_quadruples(system, matrix))
        .merge(check_jacobi(system, matrix));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::compute_all_positive;

    fn computed(kind: Kind, n: usize) -> (RootSystem, ConstantMatrix) {
        let s = RootSystem::new(kind, n).unwrap();
        let m = compute_all_positive(&s).unwrap();
        (s, m)
    }

    #[test]
    fn a1_vacuous() {
        let (s, m) = computed(Kind::A, 1);
        let r = verify_all(&s, &m);
        assert!(r.passed, "{r}");
        assert_eq!(r.check("tits triples").unwrap().population, 0);
        assert_eq!(r.check("carter quadruples").unwrap().population, 0);
    }

    #[test]
    fn small_systems_pass() {
        for (k, n) in [
            (Kind::A, 3),
            (Kind::B, 2),
            (Kind::B, 3),
            (Kind::C, 3),
            (Kind::G, 2),
            (Kind::D, 4),
        ] {
            let (s, m) = computed(k, n);
            let r = verify_all(&s, &m);
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn flipped_sign_gives_two_antisymmetry_failures() {
        let (_, mut m) = computed(Kind::B, 3);
        let v = m.get(0, 1).unwrap();
        m.set_entry(0, 1, Some(-v));
        let r = check_antisymmetry(&m);
        assert_eq!(r.failure_count(), 2);
    }

    #[test]
    fn wrong_magnitude_is_caught() {
        let (s, mut m) = computed(Kind::B, 2);
        // B2: N([0,1],[1,1]) = 2, corrupt to 1
        m.fill(1, 2, 1);
        assert!(!check_tits_triples(&s, &m).passed);
        assert!(!check_chevalley_magnitude(&s, &m).passed);
        assert!(!check_jacobi(&s, &m).passed);
    }

    #[test]
    fn single_sign_flip_breaks_jacobi_and_carter() {
        let (s, mut m) = computed(Kind::B, 3);
        let (i, j, v) = m.upper_nonzero()[3];
        m.fill(i, j, -v);
        assert!(check_antisymmetry(&m).passed);
        assert!(check_chevalley_magnitude(&s, &m).passed);
        assert!(!check_jacobi(&s, &m).passed);
        assert!(!check_carter_quadruples(&s, &m).passed);
    }

    #[test]
    fn b2_tits_triple() {
        let (s, m) = computed(Kind::B, 2);
        // ([1,0], [0,1], -[1,1])
        let a = SignedRoot::pos(0);
        let b = SignedRoot::pos(1);
        let c = SignedRoot::neg(2);
        let n_ab = n_any(&s, &m, a, b).unwrap();
        let n_bc = n_any(&s, &m, b, c).unwrap();
        let n_ca = n_any(&s, &m, c, a).unwrap();
        let r1 = Rational::new(n_ab, 1) / s.squared_length(2);
        let r2 = Rational::new(n_bc, 1) / s.squared_length(0);
        let r3 = Rational::new(n_ca, 1) / s.squared_length(1);
        assert_eq!(r1, r2);
        assert_eq!(r2, r3);
    }

    #[test]
    fn magnitudes() {
        let (s, m) = computed(Kind::G, 2);
        assert!(magnitude_histogram(&s, &m).contains_key(&3));
        let (s, m) = computed(Kind::A, 3);
        assert_eq!(
            magnitude_histogram(&s, &m)
                .keys()
                .copied()
                .collect::<Vec<_>>(),
            vec![1]
        );
        let (s, m) = computed(Kind::F, 4);
        assert_eq!(
            magnitude_histogram(&s, &m)
                .keys()
                .copied()
                .collect::<Vec<_>>(),
            vec![1, 2]
        );
    }

    #[test]
    fn coroots_match_direct_expansion() {
        // h_a = sum m_i |alpha_i|^2 / |a|^2 h_i
        for (k, n) in [(Kind::B, 3), (Kind::C, 3), (Kind::G, 2), (Kind::F, 4)] {
            let (s, m) = computed(k, n);
            let t = SignedTable::new(&s, &m);
            let lie = LieAlgebra::new(&t);
            let rank = s.rank();
            for a in 0..s.len() {
                let got = lie.bracket(rank + a, rank + a + s.len());
                let expected: Element = s
                    .root(a)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| {
                        (
                            i,
                            rational::int(c) * s.squared_length(i) / s.squared_length(a),
                        )
                    })
                    .collect();
                assert_eq!(got, &expected);
            }
        }
    }

    #[test]
    fn cross_check() {
        for (k, n) in [(Kind::A, 4), (Kind::B, 4), (Kind::C, 4), (Kind::D, 4)] {
            let s = RootSystem::new(k, n).unwrap();
            let r = cross_check_formulas(&s).unwrap();
            assert!(r.passed, "{r}");
        }
        let f4 = RootSystem::new(Kind::F, 4).unwrap();
        assert!(matches!(
            cross_check_formulas(&f4),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn support_flags_incomplete_import() {
        let (s, mut m) = computed(Kind::A, 2);
        m.set_entry(0, 1, None);
        assert!(!check_support(&s, &m).passed);
        assert!(!verify_all(&s, &m).passed);
    }
}
