//! Structural facts about extraspecial pairs and quartets in B_n, C_n and F4,
//! checked exhaustively for a concrete system.
//!
//! C_n root families, 1-based, for `n` the rank:
//! - `delta_i` (1 <= i <= n): 0 before i, 2 from i to n-1, 1 at n (long)
//! - `delta_{i,j}` (1 <= i <= j <= n-1): 1 on [i, j] (short)
//! - `gamma_{i,j}` (1 <= i < j <= n): 1 on [i, j-1], 2 on [j, n-1], 1 at n (short)

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pairs::{SpecialPair, SumDictionary};
use crate::quartets::{classify_quartet, enumerate_quartets, table_order, Quartet};
use crate::rational::{self, Rational};
use crate::report::{Check, VerificationReport, Witness};
use crate::root_data::{Kind, RootSystem};

fn coords(system: &RootSystem, idx: &[usize]) -> Vec<Vec<i64>> {
    idx.iter()
        .map(|&i| system.root(i).coords().to_vec())
        .collect()
}

fn qwit(system: &RootSystem, q: &Quartet, detail: impl Into<String>) -> Witness {
    Witness::new(coords(system, &q.as_tuple()), detail)
}

fn pair_wit(system: &RootSystem, p: SpecialPair, detail: impl Into<String>) -> Witness {
    Witness::new(coords(system, &[p.i, p.j]), detail)
}

fn extraspecial_pairs(dict: &SumDictionary) -> Vec<(usize, SpecialPair)> {
    dict.keys()
        .map(|g| (g, dict.extraspecial_pair_of(g).expect("key")))
        .collect()
}

fn require(system: &RootSystem, kind: Kind) -> Result<()> {
    if system.kind() == kind {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{kind} theorem suite applied to {}",
            system.diagram()
        )))
    }
}

/// `delta_i` of C_n.
pub fn c_delta(n: usize, i: usize) -> Vec<i64> {
    (1..=n)
        .map(|k| match k {
            k if k < i => 0,
            k if k == n => 1,
            _ => 2,
        })
        .collect()
}

/// `delta_{i,j}` of C_n.
pub fn c_delta_ij(n: usize, i: usize, j: usize) -> Vec<i64> {
    (1..=n).map(|k| i64::from(i <= k && k <= j)).collect()
}

/// `gamma_{i,j}` of C_n.
pub fn c_gamma(n: usize, i: usize, j: usize) -> Vec<i64> {
    (1..=n)
        .map(|k| match k {
            k if k < i => 0,
            k if k == n => 1,
            k if k < j => 1,
            _ => 2,
        })
        .collect()
}

pub fn b_theorems(system: &RootSystem) -> Result<VerificationReport> {
    require(system, Kind::B)?;
    let n = system.rank();
    let dict = SumDictionary::build(system);
    let quartets = enumerate_quartets(system, &dict);
    let beta_n = n - 1;

    let mut count = Check::new("B extraspecial count n^2-n");
    let pairs = extraspecial_pairs(&dict);
    count.record(pairs.len() == n * n - n, || {
        Witness::new(vec![], format!("{} extraspecial pairs", pairs.len()))
    });

    let mut mono_simple = Check::new("B quartets mono and simple");
    let mut same_len = Check::new("B |r1+s1| = |s1|");
    let mut no_beta_n = Check::new("B no quartet with r1 = beta_n");
    for q in &quartets {
        let c = classify_quartet(system, q);
        mono_simple.record(c.mono && c.simple, || qwit(system, q, format!("{c:?}")));
        same_len.record(c.phi == rational::one(), || {
            qwit(system, q, format!("phi = {}", rational::render(&c.phi)))
        });
        no_beta_n.record(q.r1 != beta_n, || qwit(system, q, "r1 = beta_n"));
    }

    let mut long_r1 = Check::new("B (r1,s1) = -1 for |r1|^2 = 2");
    for &(_, p) in &pairs {
        if system.squared_length(p.i) == rational::int(2) {
            let ip = system.inner(p.i, p.j);
            long_r1.record(ip == rational::int(-1), || {
                pair_wit(system, p, format!("(r1,s1) = {}", rational::render(&ip)))
            });
        }
    }

    let mut two_pairs = Check::new("B two extraspecial pairs contain beta_n");
    let with_beta_n: BTreeSet<(usize, usize)> = pairs
        .iter()
        .filter(|(_, p)| p.i == beta_n || p.j == beta_n)
        .map(|(_, p)| (p.i, p.j))
        .collect();
    let mut beta_n_minus_1 = vec![0; n];
    beta_n_minus_1[n - 2] = 1;
    beta_n_minus_1[n - 1] = 1;
    let expected: BTreeSet<(usize, usize)> = [
        (beta_n, system.index_of_root(&beta_n_minus_1).expect("root")),
        (n - 2, beta_n),
    ]
    .into_iter()
    .collect();
    two_pairs.record(with_beta_n == expected, || {
        Witness::new(
            vec![],
            format!("found {with_beta_n:?}, expected {expected:?}"),
        )
    });

    Ok(VerificationReport::new(
        system.diagram().to_string(),
        vec![count, mono_simple, same_len, no_beta_n, long_r1, two_pairs],
    ))
}

pub fn c_theorems(system: &RootSystem) -> Result<VerificationReport> {
    require(system, Kind::C)?;
    let n = system.rank();
    let dict = SumDictionary::build(system);
    let quartets = enumerate_quartets(system, &dict);
    let pairs = extraspecial_pairs(&dict);
    let idx = |v: &[i64]| {
        system
            .index_of_root(v)
            .expect("C_n family member is a root")
    };
    let delta_n = idx(&c_delta(n, n));
    let one = rational::one();
    let two = rational::int(2);
    let half = Rational::new(1, 2);

    let mut simple = Check::new("C quartets simple");
    let mut mono_iff = Check::new("C mono <=> (r1,s1) != 0");
    let mut no_delta_n = Check::new("C no quartet with r1 or s1 = delta_n");
    for q in &quartets {
        let c = classify_quartet(system, q);
        simple.record(c.simple, || qwit(system, q, format!("{c:?}")));
        let orth = system.inner(q.r1, q.s1) == rational::zero();
        mono_iff.record(c.mono != orth, || {
            qwit(system, q, format!("mono {} orth {orth}", c.mono))
        });
        no_delta_n.record(q.r1 != delta_n && q.s1 != delta_n, || {
            qwit(system, q, "delta_n")
        });
    }

    let mut count = Check::new("C n-1 orthogonal of n^2-n pairs");
    let orth = pairs
        .iter()
        .filter(|(_, p)| system.inner(p.i, p.j) == rational::zero())
        .count();
    count.record(orth == n - 1 && pairs.len() == n * n - n, || {
        Witness::new(vec![], format!("{orth} orthogonal of {}", pairs.len()))
    });

    // phi cases over every extraspecial pair.
    let mut phi_cases = Check::new("C phi cases");
    let delta_targets: Vec<usize> = (1..n).map(|i| idx(&c_delta(n, i))).collect();
    let half_pairs: BTreeSet<(usize, usize)> = (2..=n)
        .map(|i| (idx(&c_delta_ij(n, i - 1, i - 1)), idx(&c_delta(n, i))))
        .collect();
    for &(gamma, p) in &pairs {
        let phi = system.squared_length(gamma) / system.squared_length(p.j);
        let orth = system.inner(p.i, p.j) == rational::zero();
        let len_s1 = system.squared_length(p.j);
        let len_g = system.squared_length(gamma);
        let ok = (phi == one || phi == two || phi == half)
            && ((phi == two) == orth)
            && ((phi == two) == (delta_targets.contains(&gamma) && len_s1 == one))
            && ((phi == half) == half_pairs.contains(&(p.i, p.j)))
            && ((phi == one) == (len_g == one && len_s1 == one));
        phi_cases.record(ok, || {
            pair_wit(
                system,
                p,
                format!("phi = {}, orth = {orth}", rational::render(&phi)),
            )
        });
    }

    // phi = 1/2 among pairs that actually have quartets: s1 = delta_i, 2 <= i <= n-1.
    let mut half_with_quartets = Check::new("C phi=1/2 quartet pairs");
    let quartet_pairs: BTreeSet<(usize, usize)> = quartets.iter().map(|q| (q.r1, q.s1)).collect();
    let expected: BTreeSet<(usize, usize)> = (2..n)
        .map(|i| (idx(&c_delta_ij(n, i - 1, i - 1)), idx(&c_delta(n, i))))
        .collect();
    let got: BTreeSet<(usize, usize)> = quartet_pairs
        .iter()
        .filter(|&&(r1, s1)| {
            let g = system.index_of_sum(r1, s1).expect("sum");
            system.squared_length(g) / system.squared_length(s1) == half
        })
        .copied()
        .collect();
    half_with_quartets.record(got == expected, || {
        Witness::new(vec![], format!("got {got:?}, expected {expected:?}"))
    });

    // Quartets over {delta_{i-1,i-1}, delta_i}: {r, s} is one of
    // {delta_{i-1,m}, gamma_{i,m+1}} or {delta_{i,m}, gamma_{i-1,m+1}}, i <= m <= n-1.
    let mut shapes = Check::new("C long-s1 quartet shapes");
    for i in 2..n {
        let r1 = idx(&c_delta_ij(n, i - 1, i - 1));
        let s1 = idx(&c_delta(n, i));
        let mut expected: BTreeSet<(usize, usize)> = BTreeSet::new();
        for m in i..n {
            for (a, b) in [(i - 1, i), (i, i - 1)] {
                let x = idx(&c_delta_ij(n, a, m));
                let y = idx(&c_gamma(n, b, m + 1));
                expected.insert((x.min(y), x.max(y)));
            }
        }
        let got: BTreeSet<(usize, usize)> = quartets
            .iter()
            .filter(|q| q.r1 == r1 && q.s1 == s1)
            .map(|q| (q.r, q.s))
            .collect();
        let lengths_ok = got
            .iter()
            .all(|&(r, s)| system.squared_length(r) == one && system.squared_length(s) == one);
        shapes.record(got == expected && lengths_ok, || {
            pair_wit(
                system,
                SpecialPair { i: r1, j: s1 },
                format!("got {got:?}, expected {expected:?}"),
            )
        });
    }

    // Short quartets: both differences roots => lengths 1, products 1/2, r1 _|_ s1;
    // with |r| = |s| = 1 too: (r1,s1) = 0 <=> both differences roots <=> |r1+s1|^2 = 2.
    let mut short = Check::new("C short quartet relations");
    for q in &quartets {
        let l = |i: usize| system.squared_length(i);
        if l(q.r1) != one || l(q.s1) != one {
            continue;
        }
        let c = classify_quartet(system, q);
        let both = c.s_minus_r1_is_root && c.r_minus_r1_is_root;
        let mut ok = true;
        if both {
            let sd = system.index_of_difference(q.s, q.r1).expect("root");
            let rd = system.index_of_difference(q.r, q.r1).expect("root");
            ok &= l(sd) == one && l(rd) == one;
            ok &= system.inner(q.s, q.r1) == half && system.inner(q.r, q.r1) == half;
            ok &= system.inner(q.r1, q.s1) == rational::zero();
        }
        if l(q.r) == one && l(q.s) == one {
            let orth = system.inner(q.r1, q.s1) == rational::zero();
            let g = system.index_of_sum(q.r1, q.s1).expect("sum");
            ok &= orth == both && both == (l(g) == two);
        }
        short.record(ok, || qwit(system, q, format!("{c:?}")));
    }

    Ok(VerificationReport::new(
        system.diagram().to_string(),
        vec![
            simple,
            mono_iff,
            no_delta_n,
            count,
            phi_cases,
            half_with_quartets,
            shapes,
            short,
        ],
    ))
}

/// The eight simple F4 quartets whose `r1` is short.
pub const F4_SHORT_SIMPLE_QUARTETS: [[usize; 4]; 8] = [
    [2, 6, 13, 16],
    [2, 3, 18, 19],
    [2, 6, 16, 19],
    [2, 9, 14, 19],
    [2, 11, 12, 19],
    [2, 6, 18, 20],
    [2, 12, 14, 20],
    [3, 6, 9, 12],
];

/// Table-order ordinals (1-based) of the ten non-simple F4 quartets.
pub const F4_NON_SIMPLE_ORDINALS: [usize; 10] = [31, 32, 33, 35, 36, 37, 39, 41, 45, 46];

pub fn f4_theorems(system: &RootSystem) -> Result<VerificationReport> {
    require(system, Kind::F)?;
    let dict = SumDictionary::build(system);
    let quartets = table_order(&enumerate_quartets(system, &dict));
    let two = rational::int(2);
    let l = |i: usize| system.squared_length(i);

    let mut integral = Check::new("F4 (theta, long simple) integral");
    for t in 0..system.len() {
        for a in [0, 1] {
            let ip = system.inner(t, a);
            integral.record(ip.is_integer(), || {
                Witness::new(coords(system, &[t, a]), rational::render(&ip))
            });
        }
    }

    let mut long_r1 = Check::new("F4 (r1,s1) = -1 for |r1|^2 = 2");
    for (_, p) in extraspecial_pairs(&dict) {
        if l(p.i) == two {
            let ip = system.inner(p.i, p.j);
            long_r1.record(ip == rational::int(-1), || {
                pair_wit(system, p, rational::render(&ip))
            });
        }
    }

    let mut long = Check::new("F4 30 long-r1 quartets simple+mono");
    let mut short = Check::new("F4 8 short-r1 simple quartets");
    let mut non_simple = Check::new("F4 10 non-simple quartets");
    let mut long_count = 0;
    let mut short_simple = BTreeSet::new();
    let mut non_simple_ordinals = Vec::new();
    for (k, q) in quartets.iter().enumerate() {
        let c = classify_quartet(system, q);
        let gamma = system.index_of_sum(q.r, q.s).expect("sum");
        if l(q.r1) == two {
            long_count += 1;
            long.record(c.simple && c.mono && l(gamma) == l(q.s1), || {
                qwit(system, q, format!("{c:?}"))
            });
        } else if c.simple {
            short_simple.insert(q.as_tuple());
        }
        if !c.simple {
            non_simple_ordinals.push(k + 1);
        }
    }
    long.record(long_count == 30, || {
        Witness::new(vec![], format!("{long_count} quartets with long r1"))
    });
    let expected: BTreeSet<[usize; 4]> = F4_SHORT_SIMPLE_QUARTETS.into_iter().collect();
    short.record(short_simple == expected, || {
        Witness::new(vec![], format!("got {short_simple:?}"))
    });
    non_simple.record(non_simple_ordinals == F4_NON_SIMPLE_ORDINALS, || {
        Witness::new(vec![], format!("ordinals {non_simple_ordinals:?}"))
    });

    // Short roots r with (r, alpha_2) = 1/2 written in coordinates: c4 = 1, c3 = c2 + 1.
    let mut cond = Check::new("F4 coordinate condition roots");
    let satisfying: Vec<usize> = (0..system.len())
        .filter(|&i| {
            let c = system.root(i).coords();
            c[3] == 1 && c[2] == c[1] + 1
        })
        .collect();
    cond.record(satisfying == [6, 12, 14, 18], || {
        Witness::new(vec![], format!("{satisfying:?}"))
    });

    Ok(VerificationReport::new(
        system.diagram().to_string(),
        vec![integral, long_r1, long, short, non_simple, cond],
    ))
}

/// The suite matching the system's kind, if it has one.
pub fn theorem_suite(system: &RootSystem) -> Option<Result<VerificationReport>> {
    match system.kind() {
        Kind::B => Some(b_theorems(system)),
        Kind::C => Some(c_theorems(system)),
        Kind::F => Some(f4_theorems(system)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_families_match_table() {
        // C6 rows 33, 10 and 24 of the regular ordering.
        assert_eq!(c_delta(6, 2), vec![0, 2, 2, 2, 2, 1]);
        assert_eq!(c_delta(6, 6), vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(c_gamma(6, 5, 6), vec![0, 0, 0, 0, 1, 1]);
        assert_eq!(c_gamma(6, 1, 6), vec![1, 1, 1, 1, 1, 1]);
        assert_eq!(c_delta_ij(6, 2, 4), vec![0, 1, 1, 1, 0, 0]);
    }

    #[test]
    fn suites_pass_small() {
        for n in 2..=5 {
            let b = RootSystem::new(Kind::B, n).unwrap();
            let r = b_theorems(&b).unwrap();
            assert!(r.passed, "{r}");
            let c = RootSystem::new(Kind::C, n).unwrap();
            let r = c_theorems(&c).unwrap();
            assert!(r.passed, "{r}");
        }
        let f = RootSystem::new(Kind::F, 4).unwrap();
        let r = f4_theorems(&f).unwrap();
        assert!(r.passed, "{r}");
    }

    #[test]
    fn wrong_kind_rejected() {
        let a = RootSystem::new(Kind::A, 3).unwrap();
        assert!(b_theorems(&a).is_err());
        assert!(theorem_suite(&a).is_none());
    }
}
