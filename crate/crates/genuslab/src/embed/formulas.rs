//! Closed-form genus / crosscap values for complete and complete bipartite
//! graphs, and Euler-formula lower bounds.

use thiserror::Error;

use crate::graph::SimpleGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("complete-graph formulas require n >= 3, got {0}")]
    CompleteTooSmall(usize),
    #[error("complete-bipartite formulas require m, n >= 2, got ({0}, {1})")]
    BipartiteTooSmall(usize, usize),
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + if a.rem_euclid(b) != 0 { 1 } else { 0 }
}

/// Genus of K_n for n >= 3: ceil((n-3)(n-4)/12).
pub fn genus_complete(n: usize) -> Result<u32, DomainError> {
    if n < 3 {
        return Err(DomainError::CompleteTooSmall(n));
    }
    let n = n as i64;
    Ok(ceil_div((n - 3) * (n - 4), 12) as u32)
}

/// Genus of K_{m,n} for m, n >= 2: ceil((m-2)(n-2)/4).
pub fn genus_complete_bipartite(m: usize, n: usize) -> Result<u32, DomainError> {
    if m < 2 || n < 2 {
        return Err(DomainError::BipartiteTooSmall(m, n));
    }
    let (m, n) = (m as i64, n as i64);
    Ok(ceil_div((m - 2) * (n - 2), 4) as u32)
}

/// Crosscap of K_n for n >= 3: ceil((n-3)(n-4)/6), except crosscap(K7) = 3.
pub fn crosscap_complete(n: usize) -> Result<u32, DomainError> {
    if n < 3 {
        return Err(DomainError::CompleteTooSmall(n));
    }
    if n == 7 {
        return Ok(3);
    }
    let n = n as i64;
    Ok(ceil_div((n - 3) * (n - 4), 6) as u32)
}

/// Crosscap of K_{m,n} for m, n >= 2: ceil((m-2)(n-2)/2).
pub fn crosscap_complete_bipartite(m: usize, n: usize) -> Result<u32, DomainError> {
    if m < 2 || n < 2 {
        return Err(DomainError::BipartiteTooSmall(m, n));
    }
    let (m, n) = (m as i64, n as i64);
    Ok(ceil_div((m - 2) * (n - 2), 2) as u32)
}

fn component_counts(g: &SimpleGraph) -> Vec<(i64, i64)> {
    g.connected_components()
        .iter()
        .map(|comp| {
            let sub = g.induced_subgraph(comp).unwrap();
            (comp.len() as i64, sub.edge_count() as i64)
        })
        .collect()
}

/// Euler-formula genus lower bound: per connected component with v >= 4,
/// max(0, ceil((e - 3v)/6 + 1)); components are summed (genus is additive
/// over components).
pub fn genus_lower_bound(g: &SimpleGraph) -> u32 {
    component_counts(g)
        .into_iter()
        .map(|(v, e)| {
            if v < 4 {
                0
            } else {
                ceil_div(e - 3 * v + 6, 6).max(0) as u32
            }
        })
        .sum()
}

/// Euler-formula Euler-genus lower bound in non-orientable surfaces: per
/// component with v >= 3, max(0, ceil((e - 3v + 6)/3)); components summed.
/// This bounds the crosscap from below (never applying the disconnected +1).
pub fn crosscap_lower_bound(g: &SimpleGraph) -> u32 {
    component_counts(g)
        .into_iter()
        .map(|(v, e)| {
            if v < 3 {
                0
            } else {
                ceil_div(e - 3 * v + 6, 3).max(0) as u32
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_of_small_complete_graphs() {
        let expected = [(3, 0), (4, 0), (5, 1), (6, 1), (7, 1), (8, 2), (9, 3)];
        for (n, g) in expected {
            assert_eq!(genus_complete(n).unwrap(), g, "K{n}");
        }
        assert!(genus_complete(2).is_err());
    }

    #[test]
    fn crosscap_of_small_complete_graphs() {
        let expected = [(3, 0), (4, 0), (5, 1), (6, 1), (7, 3), (8, 4), (9, 5)];
        for (n, c) in expected {
            assert_eq!(crosscap_complete(n).unwrap(), c, "K{n}");
        }
    }

    #[test]
    fn bipartite_formulas() {
        assert_eq!(genus_complete_bipartite(3, 3).unwrap(), 1);
        assert_eq!(genus_complete_bipartite(4, 4).unwrap(), 1);
        assert_eq!(crosscap_complete_bipartite(3, 3).unwrap(), 1);
        assert_eq!(crosscap_complete_bipartite(3, 6).unwrap(), 2);
        assert!(genus_complete_bipartite(1, 5).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(genus_lower_bound(&SimpleGraph::complete(8)), 2);
        assert_eq!(genus_lower_bound(&SimpleGraph::complete(5)), 1);
        // Any forest: zero.
        let path = SimpleGraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(genus_lower_bound(&path), 0);
        assert_eq!(crosscap_lower_bound(&SimpleGraph::complete(7)), 2);
        assert_eq!(crosscap_lower_bound(&SimpleGraph::complete(6)), 1);
        assert_eq!(crosscap_lower_bound(&SimpleGraph::complete(4)), 0);
    }

    #[test]
    fn lower_bounds_sum_over_components() {
        let k6 = SimpleGraph::complete(6);
        let g = SimpleGraph::disjoint_union(&[k6.clone(), k6.clone(), k6]);
        assert_eq!(genus_lower_bound(&g), 3);
        assert_eq!(crosscap_lower_bound(&g), 3);
    }
}
