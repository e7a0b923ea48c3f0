//! Finite groups from Cayley tables, the center of the group algebra with the
//! Dijkgraaf-Witten trace, and brute-force bundle counts on closed surfaces.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exactq::{q, qr, zero, BasisElement, GradedVectorSpace, MultilinearMap, Rational};

use super::{validate_frobenius, FrobeniusAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("Cayley table must be a nonempty square table")]
    NotSquare,
    #[error("table entry {0} is out of range")]
    OutOfRange(usize),
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("({0}·{1})·{2} ≠ {0}·({1}·{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("{0} names for a group of order {1}")]
    Names(usize, usize),
    #[error("unknown group {0:?} (try z<n>, s3, s4, klein4, z2xz2, trivial)")]
    UnknownName(String),
    #[error("{tuples} tuples exceed the enumeration limit {limit}")]
    TooLarge { tuples: u128, limit: u128 },
    #[error("malformed group file: {0}")]
    Json(String),
}

/// Group law given by a Cayley table `cayley[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    cayley: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

/// Largest number of tuples [`dw_partition_brute`] will enumerate.
pub const ENUMERATION_LIMIT: u128 = 1 << 28;

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(cayley: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = cayley.len();
        if n == 0 || cayley.iter().any(|r| r.len() != n) {
            return Err(GroupError::NotSquare);
        }
        if let Some(&bad) = cayley.iter().flatten().find(|&&x| x >= n) {
            return Err(GroupError::OutOfRange(bad));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| cayley[e][a] == a && cayley[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| cayley[a][b] == identity && cayley[b][a] == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverse.push(inv);
        }
        let names = match names {
            Some(v) if v.len() != n => return Err(GroupError::Names(v.len(), n)),
            Some(v) => v,
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup {
            cayley,
            identity,
            inverse,
            names,
        })
    }

    /// `{"cayley": [[0, 1], [1, 0]], "names": ["e", "s"]}`.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let raw: GroupJson = serde_json::from_str(text).map_err(|e| GroupError::Json(e.to_string()))?;
        Self::from_table(raw.cayley, raw.names)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupJson {
            cayley: self.cayley.clone(),
            names: Some(self.names.clone()),
        })
        .expect("serializable")
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let cayley = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        Self::from_table(cayley, Some(names)).expect("cyclic group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Pairs `(a, b)` indexed `a · |H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order(), other.order());
        let cayley = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let names = (0..n * m)
            .map(|x| format!("({},{})", self.names[x / m], other.names[x % m]))
            .collect();
        Self::from_table(cayley, Some(names)).expect("product of groups")
    }

    pub fn klein_four() -> Self {
        Self::cyclic(2).direct_product(&Self::cyclic(2))
    }

    /// Permutations of `1..=n` in lexicographic one-line order, composed as
    /// functions: `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for v in 1..=n {
                    if !p.contains(&v) {
                        let mut q = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        let index = |p: &[usize]| perms.iter().position(|x| x == p).expect("closed");
        let cayley = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i - 1]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| p.iter().map(|v| v.to_string()).collect::<String>())
            .collect();
        Self::from_table(cayley, Some(names)).expect("symmetric group")
    }

    /// `z<n>` (n ≤ 200), `s<n>` (n ≤ 5), `klein4` / `z2xz2`, `trivial`.
    pub fn builtin(name: &str) -> Result<Self, GroupError> {
        let lower = name.to_ascii_lowercase();
        let unknown = || GroupError::UnknownName(name.to_string());
        match lower.as_str() {
            "trivial" => return Ok(Self::trivial()),
            "klein4" | "z2xz2" | "v4" => return Ok(Self::klein_four()),
            _ => {}
        }
        if let Some(n) = lower.strip_prefix('z').and_then(|d| d.parse::<usize>().ok()) {
            if (1..=200).contains(&n) {
                return Ok(Self::cyclic(n));
            }
        }
        if let Some(n) = lower.strip_prefix('s').and_then(|d| d.parse::<usize>().ok()) {
            if (1..=5).contains(&n) {
                return Ok(Self::symmetric(n));
            }
        }
        Err(unknown())
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    /// Orbits under conjugation, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|g| self.mul(self.mul(g, a), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }
}

/// Center of `ℚ[G]` on the class-sum basis with `θ(Σ λ_g g) = λ_e / |G|`.
/// Each basis vector is named after the least element of its class.
pub fn dw_center_algebra(g: &FiniteGroup) -> FrobeniusAlgebra {
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let n = g.order();
    let mut class_of = vec![0; n];
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            class_of[x] = c;
        }
    }
    let space = Arc::new(
        GradedVectorSpace::new(
            classes
                .iter()
                .map(|c| BasisElement {
                    name: g.name(c[0]).to_string(),
                    degree: 0,
                })
                .collect(),
        )
        .expect("distinct element names"),
    );
    let mut entries = Vec::new();
    for (a, ca) in classes.iter().enumerate() {
        for (b, cb) in classes.iter().enumerate() {
            // C_a C_b = Σ_c N_ab^c C_c with N_ab^c = #{(x, y) : xy = least element of c}
            let mut counts = vec![0i64; k];
            for &x in ca {
                for &y in cb {
                    let z = g.mul(x, y);
                    if classes[class_of[z]][0] == z {
                        counts[class_of[z]] += 1;
                    }
                }
            }
            for (c, &m) in counts.iter().enumerate() {
                if m != 0 {
                    entries.push((vec![a, b], c, q(m)));
                }
            }
        }
    }
    let product = MultilinearMap::new(vec![space.clone(); 2], space.clone(), 0, entries)
        .expect("degree-zero product");
    let e = class_of[g.identity()];
    let unit = (0..k).map(|c| if c == e { q(1) } else { zero() }).collect();
    let trace = (0..k)
        .map(|c| if c == e { qr(1, n as i64) } else { zero() })
        .collect();
    validate_frobenius(space, product, unit, trace).expect("the center of a group algebra is Frobenius")
}

fn tuple_count(g: &FiniteGroup, genus: usize) -> Result<u128, GroupError> {
    let tuples = (g.order() as u128).checked_pow(2 * genus as u32).unwrap_or(u128::MAX);
    if tuples > ENUMERATION_LIMIT {
        return Err(GroupError::TooLarge {
            tuples,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(tuples)
}

/// Number of `(a_{k}, b_{k}, …, a_g, b_g)` whose commutator product, started
/// from `acc`, ends at the identity.
fn count_from(g: &FiniteGroup, acc: usize, pairs_left: usize) -> u64 {
    if pairs_left == 0 {
        return u64::from(acc == g.identity());
    }
    let n = g.order();
    let mut total = 0;
    for a in 0..n {
        for b in 0..n {
            total += count_from(g, g.mul(acc, g.commutator(a, b)), pairs_left - 1);
        }
    }
    total
}

/// `#{(a_1, b_1, …, a_g, b_g) : Π [a_i, b_i] = e} / |G|` by enumerating every
/// tuple, parallel over the first pair.
pub fn dw_partition_brute(g: &FiniteGroup, genus: usize) -> Result<Rational, GroupError> {
    tuple_count(g, genus)?;
    let n = g.order();
    let count: u64 = if genus == 0 {
        1
    } else {
        (0..n * n)
            .into_par_iter()
            .map(|ab| count_from(g, g.commutator(ab / n, ab % n), genus - 1))
            .sum()
    };
    Ok(Rational::new(count.into(), n.into()))
}

/// Single-threaded version of [`dw_partition_brute`].
pub fn dw_partition_sequential(g: &FiniteGroup, genus: usize) -> Result<Rational, GroupError> {
    tuple_count(g, genus)?;
    let count = count_from(g, g.identity(), genus);
    Ok(Rational::new(count.into(), g.order().into()))
}
