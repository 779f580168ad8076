//! Carter quartets `(r1, r, s, s1)`: an extraspecial pair `(r1, s1)` together
//! with another special pair `(r, s)` of the same sum.

pub mod theorems;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::pairs::{ExtraspecialAssignment, SumDictionary};
use crate::rational::{self, Rational};
use crate::root_data::{Diagram, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Quartet {
    pub r1: usize,
    pub r: usize,
    pub s: usize,
    pub s1: usize,
}

impl Quartet {
    pub fn as_tuple(&self) -> [usize; 4] {
        [self.r1, self.r, self.s, self.s1]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuartetClass {
    pub mono: bool,
    pub simple: bool,
    pub s_minus_r1_is_root: bool,
    pub r_minus_r1_is_root: bool,
    #[serde(serialize_with = "ser_rational")]
    pub phi: Rational,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational::render(q))
}

/// All quartets, one per non-extraspecial special pair, sorted by `(s1, r, r1)`.
pub fn enumerate_quartets(system: &RootSystem, dict: &SumDictionary) -> Vec<Quartet> {
    debug_assert_eq!(dict.len() + system.rank(), system.len());
    let mut out: Vec<Quartet> = dict
        .iter()
        .flat_map(|(_, pairs)| {
            let head = pairs[0];
            pairs[1..].iter().map(move |p| Quartet {
                r1: head.i,
                r: p.i,
                s: p.j,
                s1: head.j,
            })
        })
        .collect();
    out.sort_by_key(|q| (q.s1, q.r, q.r1));
    out
}

/// Quartets in table order: grouped by extraspecial pair `(r1, s1)` ascending,
/// then by `r`. This is the order in which a single ascending scan over
/// special pairs discovers the sums. Ordinals count rows of this order from 1.
pub fn table_order(quartets: &[Quartet]) -> Vec<Quartet> {
    let mut out = quartets.to_vec();
    out.sort_by_key(|q| (q.r1, q.s1, q.r));
    out
}

pub fn classify_quartet(system: &RootSystem, q: &Quartet) -> QuartetClass {
    let s_r1 = system.index_of_difference(q.s, q.r1);
    let r_r1 = system.index_of_difference(q.r, q.r1);
    let simple = s_r1.is_none_or(|d| system.squared_length(d) == system.squared_length(q.s))
        && r_r1.is_none_or(|d| system.squared_length(d) == system.squared_length(q.r));
    let gamma = system
        .index_of_sum(q.r1, q.s1)
        .expect("quartet sum is a root");
    QuartetClass {
        mono: !(s_r1.is_some() && r_r1.is_some()),
        simple,
        s_minus_r1_is_root: s_r1.is_some(),
        r_minus_r1_is_root: r_r1.is_some(),
        phi: system.squared_length(gamma) / system.squared_length(q.s1),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuartetReport {
    pub diagram: String,
    pub total: usize,
    pub mono: usize,
    pub simple: usize,
    /// Histogram of phi over quartets, keyed by rendered value.
    pub phi_quartets: BTreeMap<String, usize>,
    /// Histogram of phi over all extraspecial pairs, with or without quartets.
    pub phi_pairs: BTreeMap<String, usize>,
    /// 1-based positions of the non-simple quartets in [`table_order`].
    pub non_simple_ordinals: Vec<usize>,
}

pub fn quartet_report(system: &RootSystem) -> QuartetReport {
    let dict = SumDictionary::build(system);
    let quartets = table_order(&enumerate_quartets(system, &dict));
    let classes: Vec<QuartetClass> = quartets
        .iter()
        .map(|q| classify_quartet(system, q))
        .collect();
    let mut phi_quartets = BTreeMap::new();
    for c in &classes {
        *phi_quartets.entry(rational::render(&c.phi)).or_insert(0) += 1;
    }
    let mut phi_pairs = BTreeMap::new();
    for gamma in dict.keys() {
        let head = dict.extraspecial_pair_of(gamma).expect("key");
        let phi = system.squared_length(gamma) / system.squared_length(head.j);
        *phi_pairs.entry(rational::render(&phi)).or_insert(0) += 1;
    }
    QuartetReport {
        diagram: system.diagram().to_string(),
        total: quartets.len(),
        mono: classes.iter().filter(|c| c.mono).count(),
        simple: classes.iter().filter(|c| c.simple).count(),
        phi_quartets,
        phi_pairs,
        non_simple_ordinals: classes
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.simple)
            .map(|(k, _)| k + 1)
            .collect(),
    }
}

/// Quartets and their classes for one diagram, in table order.
pub struct QuartetTable {
    pub diagram: Diagram,
    pub rows: Vec<(Quartet, QuartetClass)>,
}

impl QuartetTable {
    pub fn build(system: &RootSystem) -> Self {
        let dict = SumDictionary::build(system);
        let rows = table_order(&enumerate_quartets(system, &dict))
            .into_iter()
            .map(|q| (q, classify_quartet(system, &q)))
            .collect();
        QuartetTable {
            diagram: system.diagram(),
            rows,
        }
    }
}

/// Extraspecial value for the sum of a quartet.
pub fn seed_of(system: &RootSystem, seeds: &ExtraspecialAssignment, q: &Quartet) -> Option<i64> {
    system
        .index_of_sum(q.r1, q.s1)
        .and_then(|g| seeds.seed(g))
        .map(|s| s.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Kind;

    fn quartets(kind: Kind, n: usize) -> (RootSystem, Vec<Quartet>) {
        let s = RootSystem::new(kind, n).unwrap();
        let d = SumDictionary::build(&s);
        let q = enumerate_quartets(&s, &d);
        (s, q)
    }

    #[test]
    fn a2_has_none() {
        assert!(quartets(Kind::A, 2).1.is_empty());
    }

    #[test]
    fn counts_for_b6_c6_f4() {
        assert_eq!(quartets(Kind::B, 6).1.len(), 80);
        assert_eq!(quartets(Kind::C, 6).1.len(), 80);
        assert_eq!(quartets(Kind::F, 4).1.len(), 48);
    }

    #[test]
    fn quartet_shape() {
        let (s, qs) = quartets(Kind::F, 4);
        for q in &qs {
            assert!(q.r1 < q.r && q.r < q.s && q.s < q.s1, "{q:?}");
            assert_eq!(s.root(q.r1).add(s.root(q.s1)), s.root(q.r).add(s.root(q.s)));
        }
        assert!(qs
            .windows(2)
            .all(|w| (w[0].s1, w[0].r) <= (w[1].s1, w[1].r)));
    }

    #[test]
    fn f4_first_listed_quartet() {
        let (s, _) = quartets(Kind::F, 4);
        let c = classify_quartet(
            &s,
            &Quartet {
                r1: 2,
                r: 6,
                s: 13,
                s1: 16,
            },
        );
        assert!(c.simple);
        assert!(c.r_minus_r1_is_root);
        assert!(!c.s_minus_r1_is_root);
    }

    #[test]
    fn c6_orthogonal_pairs_not_mono() {
        let (s, qs) = quartets(Kind::C, 6);
        let mut seen = 0;
        for q in &qs {
            if s.inner(q.r1, q.s1) == rational::zero() {
                let c = classify_quartet(&s, q);
                assert!(!c.mono);
                assert_eq!(c.phi, rational::int(2));
                seen += 1;
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn f4_report() {
        let s = RootSystem::new(Kind::F, 4).unwrap();
        let r = quartet_report(&s);
        assert_eq!(r.total, 48);
        assert_eq!(r.simple, 38);
        assert_eq!(
            r.non_simple_ordinals,
            vec![31, 32, 33, 35, 36, 37, 39, 41, 45, 46]
        );
    }
}
