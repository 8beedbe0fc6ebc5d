//! Permutations of `{0, .., degree-1}` and breadth-first closure of a
//! generating set, used to realize groups from permutation generators.

use std::collections::HashMap;

use crate::group::GroupError;

/// A permutation stored as its image list: point `p` maps to `map[p]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            map: (0..degree).collect(),
        }
    }

    /// Validates that `map` is a bijection on its index range.
    pub fn new(map: Vec<usize>) -> Result<Self, GroupError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &image in &map {
            if image >= n || seen[image] {
                return Err(GroupError::NotAPermutation {
                    degree: n,
                    image: Vec::from(map.as_slice()),
                });
            }
            seen[image] = true;
        }
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.map[point]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// Function composition: `(self.compose(other))(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            map: other.map.iter().map(|&p| self.map[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (p, &image) in self.map.iter().enumerate() {
            inv[image] = p;
        }
        Permutation { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(p, &image)| p == image)
    }
}

/// Breadth-first closure of `generators` under composition, starting from the
/// identity. Elements come back in discovery order, identity first.
pub(crate) fn close_under_composition(
    degree: usize,
    generators: &[Permutation],
    order_cap: usize,
) -> Result<Vec<Permutation>, GroupError> {
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::NotAPermutation {
                degree,
                image: Vec::from(g.as_slice()),
            });
        }
    }

    let identity = Permutation::identity(degree);
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(identity, 0);

    let mut next = 0;
    while next < elements.len() {
        let current = elements[next].clone();
        next += 1;
        for g in generators {
            let product = current.compose(g);
            if !index.contains_key(&product) {
                if elements.len() >= order_cap {
                    return Err(GroupError::OrderCapExceeded { cap: order_cap });
                }
                index.insert(product.clone(), elements.len());
                elements.push(product);
            }
        }
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_operand_first() {
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        let q = Permutation::new(vec![1, 0, 2]).unwrap();
        let pq = p.compose(&q);
        // (p.compose(q))(0) = p(q(0)) = p(1) = 2
        assert_eq!(pq.apply(0), 2);
    }

    #[test]
    fn inverse_round_trips() {
        let p = Permutation::new(vec![3, 0, 2, 1]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
    }

    #[test]
    fn closure_of_three_cycle_and_transposition_is_s3() {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        let b = Permutation::new(vec![1, 0, 2]).unwrap();
        let elements = close_under_composition(3, &[a, b], 100).unwrap();
        assert_eq!(elements.len(), 6);
        assert!(elements[0].is_identity());
    }

    #[test]
    fn closure_respects_order_cap() {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        let b = Permutation::new(vec![1, 0, 2]).unwrap();
        let err = close_under_composition(3, &[a, b], 5).unwrap_err();
        assert!(matches!(err, GroupError::OrderCapExceeded { cap: 5 }));
    }
}
