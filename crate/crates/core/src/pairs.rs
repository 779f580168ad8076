//! Special and extraspecial pairs.
//!
//! A special pair `(i, j)` has `i < j` in the regular ordering and
//! `roots[i] + roots[j]` a positive root. Scanning pairs in ascending
//! `(i, j)` order makes the first pair found for every sum the extraspecial
//! one.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::root_data::RootSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SpecialPair {
    pub i: usize,
    pub j: usize,
}

/// Map from each non-simple positive root (by index) to all of its special
/// pairs, ascending by `(i, j)`. The head of each list is extraspecial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumDictionary {
    entries: BTreeMap<usize, Vec<SpecialPair>>,
}

impl SumDictionary {
    pub fn build(system: &RootSystem) -> Self {
        let n = system.len();
        let mut entries: BTreeMap<usize, Vec<SpecialPair>> = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                if let Some(sum) = system.index_of_sum(i, j) {
                    entries.entry(sum).or_default().push(SpecialPair { i, j });
                }
            }
        }
        SumDictionary { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn pairs(&self, gamma: usize) -> Option<&[SpecialPair]> {
        self.entries.get(&gamma).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[SpecialPair])> {
        self.entries.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    pub fn extraspecial_pair_of(&self, gamma: usize) -> Result<SpecialPair> {
        self.entries
            .get(&gamma)
            .and_then(|v| v.first().copied())
            .ok_or(Error::NotASumKey(gamma))
    }

    /// Whether `(i, j)` is the extraspecial pair of its sum.
    pub fn is_extraspecial(&self, system: &RootSystem, pair: SpecialPair) -> bool {
        system
            .index_of_sum(pair.i, pair.j)
            .and_then(|g| self.extraspecial_pair_of(g).ok())
            == Some(pair)
    }
}

/// `p + 1` where `p` is the largest `k` with `s1 - k r1` a root.
///
/// Every root on that string is positive; a negative one would mean the
/// ordering or the dictionary is broken, which is reported as an error.
pub fn extraspecial_constant(system: &RootSystem, pair: SpecialPair) -> Result<i64> {
    if system.index_of_sum(pair.i, pair.j).is_none() {
        return Err(Error::NotSummable(pair.i, pair.j));
    }
    let r1 = system.root(pair.i);
    let s1 = system.root(pair.j);
    let mut p = 0;
    loop {
        let v = s1.sub_scaled(p + 1, r1);
        if system.index_of_root(&v).is_some() {
            p += 1;
        } else if system.is_root(&v) {
            return Err(Error::Inconsistent(format!(
                "root string of ({}, {}) reaches the negative root {v}",
                pair.i, pair.j
            )));
        } else {
            break;
        }
    }
    Ok(p + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seed {
    pub pair: SpecialPair,
    pub value: i64,
    /// `|r1 + s1|^2 / |s1|^2`
    pub phi: Rational,
}

/// Structure constants fixed on extraspecial pairs, all with sign `+`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraspecialAssignment {
    seeds: BTreeMap<usize, Seed>,
}

impl ExtraspecialAssignment {
    pub fn build(system: &RootSystem, dict: &SumDictionary) -> Result<Self> {
        let mut seeds = BTreeMap::new();
        for gamma in dict.keys() {
            let pair = dict.extraspecial_pair_of(gamma)?;
            let value = extraspecial_constant(system, pair)?;
            let phi = system.squared_length(gamma) / system.squared_length(pair.j);
            seeds.insert(gamma, Seed { pair, value, phi });
        }
        Ok(ExtraspecialAssignment { seeds })
    }

    pub fn seed(&self, gamma: usize) -> Option<&Seed> {
        self.seeds.get(&gamma)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Seed)> {
        self.seeds.iter().map(|(&k, v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::Kind;

    /// All `(i, j)` with `i < j` and a root sum, grouped by sum, by brute force
    /// over coordinate vectors.
    fn brute_pairs(system: &RootSystem) -> BTreeMap<Vec<i64>, Vec<(usize, usize)>> {
        let mut out: BTreeMap<Vec<i64>, Vec<(usize, usize)>> = BTreeMap::new();
        let roots = system.roots();
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let s = roots[i].add(&roots[j]);
                if roots.contains(&s) {
                    out.entry(s.into_coords()).or_default().push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn b2_dictionary() {
        let b2 = RootSystem::new(Kind::B, 2).unwrap();
        let dict = SumDictionary::build(&b2);
        assert_eq!(dict.len(), 2);
        assert_eq!(dict.pairs(2).unwrap(), &[SpecialPair { i: 0, j: 1 }]);
        assert_eq!(dict.pairs(3).unwrap(), &[SpecialPair { i: 1, j: 2 }]);
        assert_eq!(
            dict.extraspecial_pair_of(3).unwrap(),
            SpecialPair { i: 1, j: 2 }
        );
        let brute = brute_pairs(&b2);
        assert_eq!(brute.len(), 2);
        assert_eq!(brute[&vec![1, 2]], vec![(1, 2)]);
    }

    #[test]
    fn dictionary_matches_brute_force() {
        for (k, n) in [
            (Kind::B, 4),
            (Kind::C, 4),
            (Kind::F, 4),
            (Kind::G, 2),
            (Kind::D, 5),
        ] {
            let s = RootSystem::new(k, n).unwrap();
            let dict = SumDictionary::build(&s);
            let brute = brute_pairs(&s);
            assert_eq!(dict.len(), brute.len());
            for (coords, pairs) in brute {
                let gamma = s.index_of_root(&coords).unwrap();
                let got: Vec<_> = dict
                    .pairs(gamma)
                    .unwrap()
                    .iter()
                    .map(|p| (p.i, p.j))
                    .collect();
                assert_eq!(got, pairs);
            }
        }
    }

    #[test]
    fn simple_root_is_not_a_key() {
        let f4 = RootSystem::new(Kind::F, 4).unwrap();
        let dict = SumDictionary::build(&f4);
        for i in 0..4 {
            assert!(matches!(
                dict.extraspecial_pair_of(i),
                Err(Error::NotASumKey(_))
            ));
        }
        assert_eq!(dict.len(), 20);
    }

    #[test]
    fn extraspecial_constants_small() {
        let b2 = RootSystem::new(Kind::B, 2).unwrap();
        assert_eq!(
            extraspecial_constant(&b2, SpecialPair { i: 0, j: 1 }).unwrap(),
            1
        );
        assert_eq!(
            extraspecial_constant(&b2, SpecialPair { i: 1, j: 2 }).unwrap(),
            2
        );
        assert!(matches!(
            extraspecial_constant(&b2, SpecialPair { i: 0, j: 3 }),
            Err(Error::NotSummable(0, 3))
        ));
        let f4 = RootSystem::new(Kind::F, 4).unwrap();
        assert_eq!(
            extraspecial_constant(&f4, SpecialPair { i: 2, j: 3 }).unwrap(),
            1
        );
    }

    #[test]
    fn g2_seeds_reach_three() {
        let g2 = RootSystem::new(Kind::G, 2).unwrap();
        let dict = SumDictionary::build(&g2);
        let seeds = ExtraspecialAssignment::build(&g2, &dict).unwrap();
        let values: Vec<i64> = seeds.iter().map(|(_, s)| s.value).collect();
        // sums [1,1], [2,1], [3,1], [3,2]
        assert_eq!(values, vec![1, 2, 3, 1]);
    }

    #[test]
    fn extraspecial_head_is_simple_and_minimal() {
        for (k, n) in [(Kind::B, 6), (Kind::C, 6), (Kind::F, 4), (Kind::E, 6)] {
            let s = RootSystem::new(k, n).unwrap();
            let dict = SumDictionary::build(&s);
            assert_eq!(dict.len(), s.len() - s.rank());
            for (_, pairs) in dict.iter() {
                assert!(pairs[0].i < s.rank());
                assert!(pairs.iter().all(|p| p.i >= pairs[0].i && p.i < p.j));
            }
        }
    }
}
