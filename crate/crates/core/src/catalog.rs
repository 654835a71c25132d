//! Catalog of named graphs: complete (multi)partite graphs, cycles, paths,
//! stars, matchings, wheels, the Petersen graph, and trees from Prüfer
//! sequences.
//!
//! Two spellings are accepted everywhere a graph name appears: the long form
//! `complete_tripartite(2,2,2)` and shorthands like `K4`, `K4_4`, `K2_2_2`,
//! `P4`, `C5`, `W4` (wheel with a 4-cycle rim), `S3` (star with 3 leaves),
//! `M3` (the matching 3K_2), and `petersen`.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog identifier: {0}")]
    UnknownIdentifier(String),
    #[error("invalid parameter for {name}: {reason}")]
    InvalidParameter { name: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteTripartite(usize, usize, usize),
    Cycle(usize),
    Path(usize),
    /// `Star(n)` is `K_{1,n}`: one hub and `n` leaves.
    Star(usize),
    /// `Matching(m)` is `mK_2`: m disjoint edges.
    Matching(usize),
    /// `Wheel(n)` is a hub joined to every vertex of `C_n`; order `n + 1`.
    Wheel(usize),
    Petersen,
    TreeFromPruefer(Vec<usize>),
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph, CatalogError> {
        let invalid = |name: &str, reason: &str| CatalogError::InvalidParameter {
            name: name.to_string(),
            reason: reason.to_string(),
        };
        match self {
            NamedGraph::Complete(n) => {
                if *n == 0 {
                    return Err(invalid("complete", "need n >= 1"));
                }
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        edges.push((u, v));
                    }
                }
                Ok(Graph::from_edge_list(*n, &edges).unwrap())
            }
            NamedGraph::CompleteBipartite(a, b) => {
                if *a == 0 || *b == 0 {
                    return Err(invalid("complete_bipartite", "need both parts >= 1"));
                }
                complete_multipartite(&[*a, *b])
            }
            NamedGraph::CompleteTripartite(a, b, c) => {
                if *a == 0 || *b == 0 || *c == 0 {
                    return Err(invalid("complete_tripartite", "need all parts >= 1"));
                }
                complete_multipartite(&[*a, *b, *c])
            }
            NamedGraph::Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle", "need n >= 3"));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Ok(Graph::from_edge_list(*n, &edges).unwrap())
            }
            NamedGraph::Path(n) => {
                if *n == 0 {
                    return Err(invalid("path", "need n >= 1"));
                }
                let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                Ok(Graph::from_edge_list(*n, &edges).unwrap())
            }
            NamedGraph::Star(n) => {
                if *n == 0 {
                    return Err(invalid("star", "need n >= 1 leaves"));
                }
                let edges: Vec<_> = (1..=*n).map(|i| (0, i)).collect();
                Ok(Graph::from_edge_list(n + 1, &edges).unwrap())
            }
            NamedGraph::Matching(m) => {
                if *m == 0 {
                    return Err(invalid("matching", "need m >= 1"));
                }
                let edges: Vec<_> = (0..*m).map(|i| (2 * i, 2 * i + 1)).collect();
                Ok(Graph::from_edge_list(2 * m, &edges).unwrap())
            }
            NamedGraph::Wheel(n) => {
                if *n < 3 {
                    return Err(invalid("wheel", "need rim length >= 3"));
                }
                let hub = *n;
                let mut edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                edges.extend((0..*n).map(|i| (i, hub)));
                Ok(Graph::from_edge_list(n + 1, &edges).unwrap())
            }
            NamedGraph::Petersen => {
                // outer 5-cycle, inner 5-cycle with step 2, spokes
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                    edges.push((i, 5 + i));
                }
                Ok(Graph::from_edge_list(10, &edges).unwrap())
            }
            NamedGraph::TreeFromPruefer(seq) => tree_from_pruefer(seq),
        }
    }
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, CatalogError> {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (pi, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(pi).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges).unwrap())
}

/// Standard Prüfer decoding: a sequence of length k over `0..k+2` yields a
/// labeled tree on `k + 2` vertices.
fn tree_from_pruefer(seq: &[usize]) -> Result<Graph, CatalogError> {
    let n = seq.len() + 2;
    for &x in seq {
        if x >= n {
            return Err(CatalogError::InvalidParameter {
                name: "tree_from_pruefer".to_string(),
                reason: format!("entry {x} out of range for order {n}"),
            });
        }
    }
    let mut remaining_degree = vec![1usize; n];
    for &x in seq {
        remaining_degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaf_candidates: std::collections::BTreeSet<usize> = (0..n)
        .filter(|&v| remaining_degree[v] == 1)
        .collect();
    for &x in seq {
        let leaf = *leaf_candidates.iter().next().expect("tree decoding invariant");
        leaf_candidates.remove(&leaf);
        edges.push((leaf, x));
        remaining_degree[x] -= 1;
        if remaining_degree[x] == 1 {
            leaf_candidates.insert(x);
        }
    }
    let mut last = leaf_candidates.into_iter();
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    edges.push((u, v));
    Ok(Graph::from_edge_list(n, &edges).unwrap())
}

/// Parses either the long form (`complete(4)`, `tree_from_pruefer(0,1)`) or a
/// shorthand (`K4`, `K2_2_2`, `P5`, `C6`, `W4`, `S3`, `M3`, `petersen`).
pub fn parse(name: &str) -> Result<NamedGraph, CatalogError> {
    let name = name.trim();
    let unknown = || CatalogError::UnknownIdentifier(name.to_string());
    if let Some((head, rest)) = name.split_once('(') {
        let args_text = rest.strip_suffix(')').ok_or_else(unknown)?;
        let args: Vec<usize> = if args_text.trim().is_empty() {
            Vec::new()
        } else {
            args_text
                .split(',')
                .map(|a| a.trim().parse::<usize>().map_err(|_| unknown()))
                .collect::<Result<_, _>>()?
        };
        return match (head.trim(), args.as_slice()) {
            ("complete", [n]) => Ok(NamedGraph::Complete(*n)),
            ("complete_bipartite", [a, b]) => Ok(NamedGraph::CompleteBipartite(*a, *b)),
            ("complete_tripartite", [a, b, c]) => {
                Ok(NamedGraph::CompleteTripartite(*a, *b, *c))
            }
            ("cycle", [n]) => Ok(NamedGraph::Cycle(*n)),
            ("path", [n]) => Ok(NamedGraph::Path(*n)),
            ("star", [n]) => Ok(NamedGraph::Star(*n)),
            ("matching", [m]) => Ok(NamedGraph::Matching(*m)),
            ("wheel", [n]) => Ok(NamedGraph::Wheel(*n)),
            ("tree_from_pruefer", seq) => Ok(NamedGraph::TreeFromPruefer(seq.to_vec())),
            _ => Err(unknown()),
        };
    }
    if name.eq_ignore_ascii_case("petersen") {
        return Ok(NamedGraph::Petersen);
    }
    if name.is_empty() || !name.is_ascii() {
        return Err(unknown());
    }
    let (letter, rest) = name.split_at(1);
    let parts: Option<Vec<usize>> = rest
        .split('_')
        .map(|p| p.parse::<usize>().ok())
        .collect();
    let parts = parts.filter(|p| !p.is_empty()).ok_or_else(unknown)?;
    match (letter, parts.as_slice()) {
        ("K", [n]) => Ok(NamedGraph::Complete(*n)),
        ("K", [a, b]) => Ok(NamedGraph::CompleteBipartite(*a, *b)),
        ("K", [a, b, c]) => Ok(NamedGraph::CompleteTripartite(*a, *b, *c)),
        ("C", [n]) => Ok(NamedGraph::Cycle(*n)),
        ("P", [n]) => Ok(NamedGraph::Path(*n)),
        ("S", [n]) => Ok(NamedGraph::Star(*n)),
        ("M", [m]) => Ok(NamedGraph::Matching(*m)),
        ("W", [n]) => Ok(NamedGraph::Wheel(*n)),
        _ => Err(unknown()),
    }
}

/// Parse and build in one step.
pub fn named_graph(name: &str) -> Result<Graph, CatalogError> {
    parse(name)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn catalog_examples() {
        let octa = named_graph("complete_tripartite(2,2,2)").unwrap();
        assert_eq!((octa.order(), octa.edge_count()), (6, 12));
        let m3 = named_graph("matching(3)").unwrap();
        assert_eq!((m3.order(), m3.edge_count()), (6, 3));
        assert_eq!(m3.girth(), Girth::Acyclic);
        let w4 = named_graph("wheel(4)").unwrap();
        assert_eq!((w4.order(), w4.edge_count()), (5, 8));
    }

    #[test]
    fn shorthands_match_long_forms() {
        for (short, long) in [
            ("K4", "complete(4)"),
            ("K4_4", "complete_bipartite(4,4)"),
            ("K2_2_2", "complete_tripartite(2,2,2)"),
            ("P4", "path(4)"),
            ("C5", "cycle(5)"),
            ("W4", "wheel(4)"),
            ("M3", "matching(3)"),
            ("S3", "star(3)"),
        ] {
            assert_eq!(named_graph(short).unwrap(), named_graph(long).unwrap());
        }
    }

    #[test]
    fn pruefer_trees() {
        // sequence (0,0) decodes to the star K_{1,3}
        let star = named_graph("tree_from_pruefer(0,0)").unwrap();
        assert_eq!(star.degree(0), 3);
        assert!(star.is_forest());
        // every decoded sequence is a tree
        let t = named_graph("tree_from_pruefer(3,3,3)").unwrap();
        assert_eq!(t.order(), 5);
        assert_eq!(t.edge_count(), 4);
        assert!(t.is_connected());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            named_graph("frobnicate"),
            Err(CatalogError::UnknownIdentifier(_))
        ));
        assert!(matches!(
            named_graph("cycle(2)"),
            Err(CatalogError::InvalidParameter { .. })
        ));
        assert!(matches!(
            named_graph("tree_from_pruefer(9)"),
            Err(CatalogError::InvalidParameter { .. })
        ));
        assert!(named_graph("K0").is_err());
    }

    #[test]
    fn petersen_shape() {
        let p = named_graph("petersen").unwrap();
        assert_eq!((p.order(), p.edge_count()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn w4_is_octahedron_minus_vertex() {
        let w4 = named_graph("W4").unwrap();
        let octa = named_graph("K2_2_2").unwrap();
        let (minus, _) = octa.without_vertex(0);
        assert!(crate::canon::are_isomorphic(&w4, &minus).unwrap());
    }
}
