//! Finite groups given by multiplication tables: construction, validation,
//! centers, centralizers, conjugacy data, and commuting-subset searches.

use std::collections::BTreeSet;

use serde::Deserialize;
use thiserror::Error;

use crate::clique::{self, AdjMatrix};
use crate::perm::{close_under_composition, Permutation};

/// Default ceiling on the order of a group generated from permutations.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("table is not square: row {row} has length {len}, expected {order}")]
    BadShape { order: usize, row: usize, len: usize },
    #[error("table entry out of range: table[{row}][{col}] = {value} (order {order})")]
    NotClosed {
        order: usize,
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("element 0 is not a two-sided identity: table[{row}][{col}] = {value}")]
    NoIdentity { row: usize, col: usize, value: usize },
    #[error("element {element} has no unique inverse")]
    NoInverse { element: usize },
    #[error("associativity fails at ({i}, {j}, {k}): (ij)k != i(jk)")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("not a permutation of 0..{degree}: {image:?}")]
    NotAPermutation { degree: usize, image: Vec<usize> },
    #[error("generated group exceeds the order cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("a -> a^{t} is not an automorphism of order dividing {m} on Z{n}")]
    InvalidAction { n: usize, m: usize, t: usize },
    #[error("element set invalid: {reason}")]
    BadElementSet { reason: String },
    #[error("catalog entry {name:?} is corrupt: {reason}")]
    CatalogCorrupt { name: String, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
}

/// A finite group as a complete multiplication table over indexed elements.
/// Element 0 is always the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u16>,
}

/// Sorted, duplicate-free element indices of some group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    indices: Vec<usize>,
}

impl ElementSet {
    pub fn new(mut indices: Vec<usize>, order: usize) -> Result<Self, GroupError> {
        indices.sort_unstable();
        for window in indices.windows(2) {
            if window[0] == window[1] {
                return Err(GroupError::BadElementSet {
                    reason: format!("duplicate index {}", window[0]),
                });
            }
        }
        if let Some(&last) = indices.last() {
            if last >= order {
                return Err(GroupError::BadElementSet {
                    reason: format!("index {last} out of range for order {order}"),
                });
            }
        }
        Ok(ElementSet { indices })
    }

    fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        ElementSet { indices }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.binary_search(&index).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }
}

/// Summary invariants of a group.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct GroupStats {
    pub order: usize,
    pub center_size: usize,
    pub class_count: usize,
    /// Set of element orders, ascending.
    pub spectrum: Vec<usize>,
    pub exponent: usize,
    pub is_abelian: bool,
}

/// Ground set for commuting-subset searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliqueGround {
    /// All elements outside the center.
    NonCentral,
    /// All elements except the identity (central elements allowed).
    NonIdentity,
}

impl FiniteGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut power = a;
        let mut n = 1;
        while power != 0 {
            power = self.mul(power, a);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.commutes(a, b)))
    }

    /// Validates the three group laws and that element 0 is the identity.
    /// Tables where some other index acts as the identity are rejected, not
    /// relabeled.
    pub fn from_cayley_table(name: &str, table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let order = table.len();
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::BadShape {
                    order,
                    row,
                    len: entries.len(),
                });
            }
        }
        for (row, entries) in table.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::NotClosed {
                        order,
                        row,
                        col,
                        value,
                    });
                }
            }
        }
        for j in 0..order {
            if table[0][j] != j {
                return Err(GroupError::NoIdentity {
                    row: 0,
                    col: j,
                    value: table[0][j],
                });
            }
            if table[j][0] != j {
                return Err(GroupError::NoIdentity {
                    row: j,
                    col: 0,
                    value: table[j][0],
                });
            }
        }
        for i in 0..order {
            let inverses = (0..order).filter(|&j| table[i][j] == 0).count();
            if inverses != 1 {
                return Err(GroupError::NoInverse { element: i });
            }
        }
        for i in 0..order {
            for j in 0..order {
                let ij = table[i][j];
                for k in 0..order {
                    if table[ij][k] != table[i][table[j][k]] {
                        return Err(GroupError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in table {
            flat.extend(row.iter().map(|&v| v as u16));
        }
        Ok(FiniteGroup {
            name: name.to_owned(),
            order,
            table: flat,
        })
    }

    /// Breadth-first closure of the generators, identity at index 0, Cayley
    /// table assembled from composition. Uses [`DEFAULT_ORDER_CAP`].
    pub fn from_permutation_generators(
        name: &str,
        degree: usize,
        generators: &[Permutation],
    ) -> Result<Self, GroupError> {
        Self::from_permutation_generators_capped(name, degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutation_generators_capped(
        name: &str,
        degree: usize,
        generators: &[Permutation],
        order_cap: usize,
    ) -> Result<Self, GroupError> {
        let elements = close_under_composition(degree, generators, order_cap)?;
        let order = elements.len();
        let mut index = std::collections::HashMap::with_capacity(order);
        for (i, e) in elements.iter().enumerate() {
            index.insert(e.clone(), i);
        }
        let mut table = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                let product = elements[i].compose(&elements[j]);
                table[i * order + j] = index[&product] as u16;
            }
        }
        Ok(FiniteGroup {
            name: name.to_owned(),
            order,
            table,
        })
    }

    pub fn trivial(name: &str) -> Self {
        FiniteGroup {
            name: name.to_owned(),
            order: 1,
            table: vec![0],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = ((i + j) % n) as u16;
            }
        }
        FiniteGroup {
            name: format!("Z{n}"),
            order: n,
            table,
        }
    }

    /// Direct product on pairs ordered lexicographically, (0, 0) first.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order;
        let m = other.order;
        let order = n * m;
        let mut table = vec![0u16; order * order];
        for a1 in 0..n {
            for b1 in 0..m {
                let i = a1 * m + b1;
                for a2 in 0..n {
                    for b2 in 0..m {
                        let j = a2 * m + b2;
                        let product = self.mul(a1, a2) * m + other.mul(b1, b2);
                        table[i * order + j] = product as u16;
                    }
                }
            }
        }
        FiniteGroup {
            name: format!("{}x{}", self.name, other.name),
            order,
            table,
        }
    }

    /// The group `<a, b : a^n = b^m = 1, b^-1 a b = a^t>` on pairs (a^i, b^j),
    /// identity first. Requires t^m = 1 (mod n) and gcd(t, n) = 1.
    pub fn semidirect_product_cyclic(
        n: usize,
        m: usize,
        t: usize,
        name: &str,
    ) -> Result<FiniteGroup, GroupError> {
        assert!(n >= 1 && m >= 1);
        let t = t % n;
        if gcd(t, n) != 1 || pow_mod(t, m, n) != 1 % n {
            return Err(GroupError::InvalidAction { n, m, t });
        }
        // Powers of t modulo n, one per power of b.
        let mut t_pow = vec![1 % n; m];
        for j in 1..m {
            t_pow[j] = t_pow[j - 1] * t % n;
        }
        let order = n * m;
        let mut table = vec![0u16; order * order];
        // With elements written b^j a^i, the relation a^k b = b a^(kt) gives
        // (b^j1 a^i1)(b^j2 a^i2) = b^(j1+j2) a^(i1 t^j2 + i2).
        for i1 in 0..n {
            for j1 in 0..m {
                let x = i1 * m + j1;
                for i2 in 0..n {
                    for j2 in 0..m {
                        let y = i2 * m + j2;
                        let i = (i1 * t_pow[j2] + i2) % n;
                        let j = (j1 + j2) % m;
                        table[x * order + y] = (i * m + j) as u16;
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.to_owned(),
            order,
            table,
        })
    }

    pub fn center(&self) -> ElementSet {
        let center = (0..self.order)
            .filter(|&z| (0..self.order).all(|g| self.commutes(z, g)))
            .collect();
        ElementSet::from_sorted(center)
    }

    pub fn centralizer(&self, x: usize) -> ElementSet {
        assert!(x < self.order, "element index out of range");
        let members = (0..self.order).filter(|&g| self.commutes(g, x)).collect();
        ElementSet::from_sorted(members)
    }

    /// Conjugacy classes as an orbit partition under conjugation, each class
    /// sorted, classes ordered by their least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let inv: Vec<usize> = (0..self.order).map(|g| self.inverse(g)).collect();
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if seen[x] {
                continue;
            }
            let mut class = BTreeSet::new();
            for g in 0..self.order {
                class.insert(self.mul(self.mul(g, x), inv[g]));
            }
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    pub fn stats(&self) -> GroupStats {
        let center_size = self.center().len();
        let class_count = self.conjugacy_classes().len();
        let spectrum: BTreeSet<usize> = (0..self.order).map(|x| self.element_order(x)).collect();
        let exponent = spectrum.iter().fold(1usize, |acc, &k| lcm(acc, k));
        GroupStats {
            order: self.order,
            center_size,
            class_count,
            spectrum: spectrum.into_iter().collect(),
            exponent,
            is_abelian: center_size == self.order,
        }
    }

    /// The quotient G / Z(G) on cosets of the center, identity coset at
    /// index 0, cosets ordered by least member.
    pub fn quotient_by_center(&self) -> FiniteGroup {
        let center = self.center();
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for z in center.iter() {
                coset_of[self.mul(g, z)] = id;
            }
        }
        let order = reps.len();
        let mut table = vec![0u16; order * order];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * order + j] = coset_of[self.mul(a, b)] as u16;
            }
        }
        FiniteGroup {
            name: format!("{}/Z", self.name),
            order,
            table,
        }
    }

    fn clique_ground(&self, ground: CliqueGround) -> Vec<usize> {
        match ground {
            CliqueGround::NonCentral => {
                let center = self.center();
                (0..self.order).filter(|&x| !center.contains(x)).collect()
            }
            CliqueGround::NonIdentity => (1..self.order).collect(),
        }
    }

    fn commuting_adjacency(&self, ground: &[usize]) -> AdjMatrix {
        let mut adj = AdjMatrix::new(ground.len());
        for (i, &x) in ground.iter().enumerate() {
            for (j, &y) in ground.iter().enumerate().skip(i + 1) {
                if self.commutes(x, y) {
                    adj.connect(i, j);
                }
            }
        }
        adj
    }

    /// Searches the chosen ground set for a pairwise-commuting subset of the
    /// given size. `None` means the exhaustive branch-and-bound clique search
    /// proved none exists.
    pub fn find_commuting_subset_in(
        &self,
        ground: CliqueGround,
        size: usize,
    ) -> Option<ElementSet> {
        assert!(size >= 1);
        let base = self.clique_ground(ground);
        let adj = self.commuting_adjacency(&base);
        clique::find_clique(&adj, size).map(|local| {
            ElementSet::from_sorted(local.into_iter().map(|i| base[i]).collect())
        })
    }

    /// Pairwise-commuting subset of non-central elements, per the commuting
    /// graph of the group.
    pub fn find_commuting_subset(&self, size: usize) -> Option<ElementSet> {
        self.find_commuting_subset_in(CliqueGround::NonCentral, size)
    }

    /// `count` pairwise-disjoint commuting subsets of non-central elements,
    /// each of the given size. `None` is an exhaustive negative.
    pub fn find_disjoint_commuting_subsets(
        &self,
        size: usize,
        count: usize,
    ) -> Option<Vec<ElementSet>> {
        assert!(size >= 1 && count >= 1);
        let base = self.clique_ground(CliqueGround::NonCentral);
        let adj = self.commuting_adjacency(&base);
        clique::find_disjoint_cliques(&adj, size, count).map(|cliques| {
            cliques
                .into_iter()
                .map(|c| ElementSet::from_sorted(c.into_iter().map(|i| base[i]).collect()))
                .collect()
        })
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn pow_mod(base: usize, mut exp: usize, modulus: usize) -> usize {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1;
    let mut base = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    result
}

#[derive(Deserialize)]
struct CayleyTableFile {
    name: String,
    order: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
pub(crate) struct PermGroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

/// Parses `{"name": .., "order": n, "table": [[int]]}` (0-based, row = left
/// factor) and validates the group axioms.
pub fn group_from_cayley_json(text: &str) -> Result<FiniteGroup, GroupError> {
    let file: CayleyTableFile =
        serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
    if file.table.len() != file.order {
        return Err(GroupError::BadShape {
            order: file.order,
            row: file.table.len(),
            len: 0,
        });
    }
    FiniteGroup::from_cayley_table(&file.name, &file.table)
}

/// Parses `{"name": .., "degree": d, "generators": [[int]]}` where generator
/// `g` maps point `p` to `g[p]`, and closes under composition.
pub fn group_from_permutations_json(text: &str) -> Result<FiniteGroup, GroupError> {
    let file: PermGroupFile =
        serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
    build_from_perm_file(&file)
}

pub(crate) fn build_from_perm_file(file: &PermGroupFile) -> Result<FiniteGroup, GroupError> {
    let generators = file
        .generators
        .iter()
        .map(|map| Permutation::new(map.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    FiniteGroup::from_permutation_generators(&file.name, file.degree, &generators)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        let b = Permutation::new(vec![1, 0, 2]).unwrap();
        FiniteGroup::from_permutation_generators("S3", 3, &[a, b]).unwrap()
    }

    fn q8() -> FiniteGroup {
        // Left translation by i and j on 1, i, j, k, -1, -i, -j, -k.
        let gi = Permutation::new(vec![1, 4, 3, 6, 5, 0, 7, 2]).unwrap();
        let gj = Permutation::new(vec![2, 7, 4, 1, 6, 3, 0, 5]).unwrap();
        FiniteGroup::from_permutation_generators("Q8", 8, &[gi, gj]).unwrap()
    }

    #[test]
    fn trivial_group_accepted() {
        let g = FiniteGroup::from_cayley_table("1", &[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn z2_table_accepted() {
        let g = FiniteGroup::from_cayley_table("Z2", &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.is_abelian());
    }

    #[test]
    fn idempotent_non_identity_rejected() {
        // table[1][1] = 1 makes 1 idempotent, which only the identity can be.
        let table = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        let err = FiniteGroup::from_cayley_table("bad", &table).unwrap_err();
        assert!(matches!(
            err,
            GroupError::NoInverse { .. } | GroupError::NotAssociative { .. }
        ));
    }

    #[test]
    fn misplaced_identity_rejected() {
        // Z2 with the identity at index 1 instead of 0.
        let table = vec![vec![1, 0], vec![0, 1]];
        let err = FiniteGroup::from_cayley_table("bad", &table).unwrap_err();
        assert!(matches!(err, GroupError::NoIdentity { .. }));
    }

    #[test]
    fn out_of_range_entry_rejected() {
        let table = vec![vec![0, 1], vec![1, 2]];
        let err = FiniteGroup::from_cayley_table("bad", &table).unwrap_err();
        assert!(matches!(err, GroupError::NotClosed { value: 2, .. }));
    }

    #[test]
    fn s3_from_generators() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.center().len(), 1);
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_closure_without_generators() {
        let g = FiniteGroup::from_permutation_generators("1", 1, &[]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn q8_by_left_translation() {
        let g = q8();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().len(), 2);
        let st = g.stats();
        assert_eq!(st.class_count, 5);
        assert_eq!(st.spectrum, vec![1, 2, 4]);
    }

    #[test]
    fn product_with_trivial_is_same_table() {
        let g = s3();
        let p = g.direct_product(&FiniteGroup::trivial("1"));
        assert_eq!(p.order(), 6);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(p.mul(i, j), g.mul(i, j));
            }
        }
    }

    #[test]
    fn klein_four_from_z2_squared() {
        let z2 = FiniteGroup::cyclic(2);
        let v = z2.direct_product(&z2);
        assert_eq!(v.order(), 4);
        for x in 1..4 {
            assert_eq!(v.element_order(x), 2);
        }
    }

    #[test]
    fn d8_times_z2_center() {
        let d8 = FiniteGroup::semidirect_product_cyclic(4, 2, 3, "D8").unwrap();
        let g = d8.direct_product(&FiniteGroup::cyclic(2));
        assert_eq!(g.order(), 16);
        assert_eq!(g.center().len(), 4);
    }

    #[test]
    fn frobenius_20_relations() {
        let g = FiniteGroup::semidirect_product_cyclic(5, 4, 3, "Z5xZ4").unwrap();
        assert_eq!(g.order(), 20);
        // a = (1, 0) at index 1*4 + 0, b = (0, 1) at index 1.
        let a = 4;
        let b = 1;
        assert_eq!(g.element_order(a), 5);
        assert_eq!(g.element_order(b), 4);
        // b^-1 a b = a^3
        let conj = g.mul(g.mul(g.inverse(b), a), b);
        let a3 = g.mul(g.mul(a, a), a);
        assert_eq!(conj, a3);
        assert_eq!(g.center().len(), 1);
    }

    #[test]
    fn semidirect_trivial_twist_is_direct_product() {
        let g = FiniteGroup::semidirect_product_cyclic(6, 4, 1, "Z6xZ4").unwrap();
        assert!(g.is_abelian());
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn semidirect_rejects_bad_action() {
        // t = 2 has multiplicative order 4 mod 5, fine for m = 4; t = 4 has
        // order 2, so m = 3 is invalid.
        assert!(FiniteGroup::semidirect_product_cyclic(5, 4, 2, "x").is_ok());
        assert!(FiniteGroup::semidirect_product_cyclic(5, 3, 4, "x").is_err());
        // gcd(t, n) != 1
        assert!(FiniteGroup::semidirect_product_cyclic(6, 2, 3, "x").is_err());
    }

    #[test]
    fn center_of_s3_is_trivial() {
        let g = s3();
        assert_eq!(g.center().as_slice(), &[0]);
    }

    #[test]
    fn centralizer_of_identity_is_whole_group() {
        let g = s3();
        assert_eq!(g.centralizer(0).len(), 6);
    }

    #[test]
    fn s3_stats() {
        let st = s3().stats();
        assert_eq!(st.class_count, 3);
        assert_eq!(st.spectrum, vec![1, 2, 3]);
        assert_eq!(st.exponent, 6);
        assert!(!st.is_abelian);
    }

    #[test]
    fn abelian_class_count_is_order() {
        let g = FiniteGroup::cyclic(12);
        let st = g.stats();
        assert_eq!(st.class_count, 12);
        assert!(st.is_abelian);
    }

    #[test]
    fn quotient_of_d8_by_center_is_klein() {
        let d8 = FiniteGroup::semidirect_product_cyclic(4, 2, 3, "D8").unwrap();
        let q = d8.quotient_by_center();
        assert_eq!(q.order(), 4);
        let st = q.stats();
        assert_eq!(st.exponent, 2);
    }

    #[test]
    fn quotient_of_abelian_is_trivial() {
        let q = FiniteGroup::cyclic(10).quotient_by_center();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn s3_commuting_subsets() {
        let g = s3();
        assert!(g.find_commuting_subset(2).is_some());
        assert!(g.find_commuting_subset(3).is_none());
    }

    #[test]
    fn class_equation_for_small_groups() {
        for g in [s3(), q8()] {
            let k = g.conjugacy_classes().len();
            let sum: usize = (0..g.order()).map(|x| g.centralizer(x).len()).sum();
            assert_eq!(sum, k * g.order());
        }
    }

    #[test]
    fn cayley_json_round_trip() {
        let text = r#"{"name": "Z2", "order": 2, "table": [[0, 1], [1, 0]]}"#;
        let g = group_from_cayley_json(text).unwrap();
        assert_eq!(g.order(), 2);
        assert!(group_from_cayley_json("{").is_err());
    }

    #[test]
    fn permutation_json_round_trip() {
        let text = r#"{"name": "S3", "degree": 3, "generators": [[1, 2, 0], [1, 0, 2]]}"#;
        let g = group_from_permutations_json(text).unwrap();
        assert_eq!(g.order(), 6);
    }
}
