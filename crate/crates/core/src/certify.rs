//! Three-valued Ramsey size-linearity certification.
//!
//! The verdicts use exactly a fixed, citable fact base:
//!
//! * every forest is size-linear, with the explicit coefficient that the
//!   tree formula gives;
//! * the complete graph on three vertices, and every proper subgraph of the
//!   complete graph on four, is size-linear;
//! * `K_4` is not, and neither is any graph with a subgraph satisfying
//!   `e >= 2v - 2` (the density criterion), since the exponent
//!   `(e-1)/(v-2)` of the local-lemma lower bound then exceeds 2;
//! * verdicts propagate down to subgraphs (linear side) and up to
//!   supergraphs (nonlinear side).
//!
//! Anything the facts do not reach stays `Unknown` — the certifier never
//! guesses.

use crate::canon::{canonical_code, CanonicalCode};
use crate::density::{self, SlackWitness};
use crate::embed::subgraph_embedding;
use crate::graph::Graph;
use crate::graph6;
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertifyError {
    #[error("graph contains an isolated vertex")]
    IsolatedVertex,
    #[error("graph is not a forest")]
    NotForest,
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("exponent undefined for fewer than 3 vertices")]
    TooFewVertices,
}

/// `r(T, K_n) = (v(T) - 1)(n - 1) + 1` for every tree `T`.
pub fn chvatal_tree_ramsey(tree_order: u64, n: u64) -> u64 {
    (tree_order - 1) * (n - 1) + 1
}

/// `r(K_3, H) <= 2 e(H) + 1` for every `H` with no isolated vertices.
pub fn sidorenko_bound(h: &Graph) -> Result<u64, CertifyError> {
    if h.order() == 0 || h.edge_count() == 0 {
        return Err(CertifyError::EmptyGraph);
    }
    if h.has_isolated_vertex() {
        return Err(CertifyError::IsolatedVertex);
    }
    Ok(2 * h.edge_count() as u64 + 1)
}

/// Upper bound for `r(T, H)` with `T` a forest: complete `T` to a spanning
/// tree of the same order, embed `H` in the complete graph on `2 e(H)`
/// vertices, and apply the tree formula:
/// `(v(T) - 1)(2 e(H) - 1) + 1`.
pub fn forest_linear_bound(t: &Graph, h: &Graph) -> Result<u64, CertifyError> {
    if !t.is_forest() {
        return Err(CertifyError::NotForest);
    }
    if t.order() == 0 || h.edge_count() == 0 {
        return Err(CertifyError::EmptyGraph);
    }
    if h.has_isolated_vertex() {
        return Err(CertifyError::IsolatedVertex);
    }
    Ok((t.order() as u64 - 1) * (2 * h.edge_count() as u64 - 1) + 1)
}

/// Exponent `(e(G) - 1)/(v(G) - 2)` of the local-lemma lower bound for
/// `r(G, K_n)`; strictly greater than 2 exactly when `e >= 2v - 2`.
pub fn lll_exponent(g: &Graph) -> Result<Rational, CertifyError> {
    if g.order() < 3 {
        return Err(CertifyError::TooFewVertices);
    }
    if g.edge_count() == 0 {
        return Err(CertifyError::EmptyGraph);
    }
    Ok(Rational::new(
        g.edge_count() as u64 - 1,
        g.order() as u64 - 2,
    ))
}

/// A subgraph witness for the density criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityCertificate {
    /// The witness subgraph, re-indexed to `0..v`.
    #[serde(with = "crate::graph6::serde_graph6")]
    pub witness: Graph,
    /// Map from witness vertices to vertices of the certified graph.
    pub embedding: Vec<usize>,
    /// `e(witness) - (2 v(witness) - 2) >= 0`.
    pub slack: i64,
    /// `(e - 1)/(v - 2)` of the witness; greater than 2 whenever slack >= 0.
    pub lll_exponent: Rational,
}

/// Maximum-slack subgraph witness, or `None` when no subgraph satisfies the
/// density criterion. The witness maximizes `e - 2v`; the minimal-subgraph
/// search shrinks it further when a minimal one is wanted.
pub fn density_certificate(g: &Graph) -> Option<DensityCertificate> {
    let SlackWitness { vertices, slack } = density::max_slack_subgraph(g)?;
    let witness = g.induced(&vertices);
    let lll = lll_exponent(&witness).expect("witness has >= 3 vertices and edges");
    Some(DensityCertificate {
        witness,
        embedding: vertices,
        slack,
        lll_exponent: lll,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RslStatus {
    CertifiedLinear,
    CertifiedNonlinear,
    Unknown,
}

/// One applied rule in a verdict's justification chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    /// Stable rule identifier: `forest`, `subgraph_of_linear_fact`,
    /// `density`, `contains_nonlinear_fact`.
    pub rule: String,
    /// Supporting graph (fact or witness) as graph6, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RslVerdict {
    pub status: RslStatus,
    pub justification: Vec<RuleApplication>,
    /// Explicit coefficient `C` with `r(G, H) <= C e(H)`, emitted only for
    /// the forest rule (`C = 2(v - 1) + 1`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_coefficient: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<DensityCertificate>,
}

#[derive(Clone, Debug)]
pub struct Fact {
    pub graph: Graph,
    pub code: CanonicalCode,
    pub citation: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KbError {
    #[error("fact {graph6} listed as both linear and nonlinear")]
    Contradiction { graph6: String },
    #[error("nonlinear fact {graph6} is a forest, contradicting the forest rule")]
    NonlinearForest { graph6: String },
    #[error("linear fact {graph6} admits a density certificate")]
    LinearButDense { graph6: String },
    #[error("nonlinear fact {nonlinear} embeds into linear fact {linear}")]
    CrossEmbedding { nonlinear: String, linear: String },
    #[error("invalid fact graph: {0}")]
    BadGraph(String),
    #[error("invalid facts file: {0}")]
    BadFile(String),
}

/// The fact base classification runs against. Entries are validated on
/// construction so the linear and nonlinear rules can never both fire.
#[derive(Clone, Debug)]
pub struct KnowledgeBase {
    linear: Vec<Fact>,
    nonlinear: Vec<Fact>,
}

#[derive(Serialize, Deserialize)]
struct FactFileEntry {
    graph6: String,
    status: String,
    citation: String,
}

impl KnowledgeBase {
    /// Exactly the default citable facts: the triangle; every proper
    /// subgraph of the complete graph on four vertices (the nine classes
    /// with at least one edge and no isolated vertices); and `K_4` as
    /// nonlinear. Forests are covered by rule, not enumerated.
    pub fn default_facts() -> Self {
        let efrs = "EFRS: every proper subgraph of K_4 is Ramsey size-linear";
        let linear: Vec<(&str, &str)> = vec![
            ("K2", efrs),
            ("P3", efrs),
            ("K3", "Sidorenko: r(K_3,H) <= 2e(H)+1"),
            ("M2", efrs),
            ("P4", efrs),
            ("S3", efrs),
            ("C4", efrs),
            // triangle with a pendant edge
            ("paw", efrs),
            // K_4 minus one edge
            ("diamond", efrs),
        ];
        let build = |name: &str| -> Graph {
            match name {
                "paw" => Graph::from_edge_list(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap(),
                "diamond" => {
                    Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
                }
                _ => crate::catalog::named_graph(name).unwrap(),
            }
        };
        let linear = linear
            .into_iter()
            .map(|(name, cite)| {
                let graph = build(name);
                Fact {
                    code: canonical_code(&graph).unwrap(),
                    graph,
                    citation: cite.to_string(),
                }
            })
            .collect();
        let k4 = crate::catalog::named_graph("K4").unwrap();
        let nonlinear = vec![Fact {
            code: canonical_code(&k4).unwrap(),
            graph: k4,
            citation: "EFRS: K_4 is not Ramsey size-linear (r(K_4,K_n) grows superquadratically)"
                .to_string(),
        }];
        KnowledgeBase::validated(linear, nonlinear).expect("default facts are consistent")
    }

    /// Builds a knowledge base after checking internal consistency: the two
    /// sides are disjoint, no nonlinear fact is a forest, no linear fact has
    /// a density certificate, and no nonlinear fact embeds into a linear one.
    pub fn validated(linear: Vec<Fact>, nonlinear: Vec<Fact>) -> Result<Self, KbError> {
        for nf in &nonlinear {
            if nf.graph.is_forest() {
                return Err(KbError::NonlinearForest {
                    graph6: graph6::encode(&nf.graph).unwrap_or_default(),
                });
            }
            if linear.iter().any(|lf| lf.code == nf.code) {
                return Err(KbError::Contradiction {
                    graph6: graph6::encode(&nf.graph).unwrap_or_default(),
                });
            }
        }
        for lf in &linear {
            if density::max_slack_subgraph(&lf.graph).is_some() {
                return Err(KbError::LinearButDense {
                    graph6: graph6::encode(&lf.graph).unwrap_or_default(),
                });
            }
            for nf in &nonlinear {
                if subgraph_embedding(&nf.graph, &lf.graph).is_some() {
                    return Err(KbError::CrossEmbedding {
                        nonlinear: graph6::encode(&nf.graph).unwrap_or_default(),
                        linear: graph6::encode(&lf.graph).unwrap_or_default(),
                    });
                }
            }
        }
        Ok(KnowledgeBase { linear, nonlinear })
    }

    /// Parses a facts file (JSON list of `{graph6, status, citation}`) and
    /// merges it with the defaults.
    pub fn with_facts_file(json: &str) -> Result<Self, KbError> {
        let entries: Vec<FactFileEntry> =
            serde_json::from_str(json).map_err(|e| KbError::BadFile(e.to_string()))?;
        let base = KnowledgeBase::default_facts();
        let mut linear = base.linear;
        let mut nonlinear = base.nonlinear;
        for entry in entries {
            let graph =
                graph6::decode(&entry.graph6).map_err(|e| KbError::BadGraph(e.to_string()))?;
            let code = canonical_code(&graph).map_err(|e| KbError::BadGraph(e.to_string()))?;
            let fact = Fact {
                graph,
                code,
                citation: entry.citation,
            };
            match entry.status.as_str() {
                "linear" => linear.push(fact),
                "nonlinear" => nonlinear.push(fact),
                other => {
                    return Err(KbError::BadFile(format!(
                        "status must be \"linear\" or \"nonlinear\", got {other:?}"
                    )))
                }
            }
        }
        KnowledgeBase::validated(linear, nonlinear)
    }

    pub fn linear_facts(&self) -> &[Fact] {
        &self.linear
    }

    pub fn nonlinear_facts(&self) -> &[Fact] {
        &self.nonlinear
    }
}

impl Default for KnowledgeBase {
    fn default() -> Self {
        KnowledgeBase::default_facts()
    }
}

/// Classifies a graph against the knowledge base.
///
/// Linear rules: `G` is a forest, or `G` embeds into a linear fact.
/// Nonlinear rules: `G` has a density certificate, or a nonlinear fact
/// embeds into `G`. A validated knowledge base makes the two sides mutually
/// exclusive; this is asserted, and re-checked exhaustively in the test
/// suites over all small graphs.
pub fn classify(g: &Graph, kb: &KnowledgeBase) -> RslVerdict {
    let mut linear_chain: Vec<RuleApplication> = Vec::new();
    let mut nonlinear_chain: Vec<RuleApplication> = Vec::new();
    let mut linear_coefficient = None;

    if g.is_forest() {
        linear_chain.push(RuleApplication {
            rule: "forest".to_string(),
            reference: None,
        });
        if g.order() >= 1 {
            linear_coefficient = Some(2 * (g.order() as u64 - 1) + 1);
        }
    } else {
        for fact in &kb.linear {
            if subgraph_embedding(g, &fact.graph).is_some() {
                linear_chain.push(RuleApplication {
                    rule: "subgraph_of_linear_fact".to_string(),
                    reference: Some(fact.code.as_str().to_string()),
                });
                break;
            }
        }
    }

    let density = density_certificate(g);
    if let Some(cert) = &density {
        nonlinear_chain.push(RuleApplication {
            rule: "density".to_string(),
            reference: Some(graph6::encode(&cert.witness).unwrap_or_default()),
        });
    }
    for fact in &kb.nonlinear {
        if subgraph_embedding(&fact.graph, g).is_some() {
            nonlinear_chain.push(RuleApplication {
                rule: "contains_nonlinear_fact".to_string(),
                reference: Some(fact.code.as_str().to_string()),
            });
            break;
        }
    }

    assert!(
        linear_chain.is_empty() || nonlinear_chain.is_empty(),
        "knowledge base yielded contradictory justifications"
    );

    if !linear_chain.is_empty() {
        RslVerdict {
            status: RslStatus::CertifiedLinear,
            justification: linear_chain,
            linear_coefficient,
            density: None,
        }
    } else if !nonlinear_chain.is_empty() {
        RslVerdict {
            status: RslStatus::CertifiedNonlinear,
            justification: nonlinear_chain,
            linear_coefficient: None,
            density,
        }
    } else {
        RslVerdict {
            status: RslStatus::Unknown,
            justification: Vec::new(),
            linear_coefficient: None,
            density: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named_graph;

    fn g(name: &str) -> Graph {
        named_graph(name).unwrap()
    }

    #[test]
    fn chvatal_plug_ins() {
        assert_eq!(chvatal_tree_ramsey(3, 3), 5);
        assert_eq!(chvatal_tree_ramsey(4, 3), 7);
        assert_eq!(chvatal_tree_ramsey(1, 5), 1);
    }

    #[test]
    fn sidorenko_plug_ins() {
        assert_eq!(sidorenko_bound(&g("M2")).unwrap(), 5);
        assert_eq!(sidorenko_bound(&g("P4")).unwrap(), 7);
        assert_eq!(sidorenko_bound(&g("K2")).unwrap(), 3);
        let with_isolated = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert_eq!(
            sidorenko_bound(&with_isolated),
            Err(CertifyError::IsolatedVertex)
        );
    }

    #[test]
    fn forest_bound_plug_ins() {
        assert_eq!(forest_linear_bound(&g("P3"), &g("K3")).unwrap(), 11);
        assert_eq!(forest_linear_bound(&g("K2"), &g("K2")).unwrap(), 2);
        assert_eq!(forest_linear_bound(&g("P4"), &g("M2")).unwrap(), 10);
        assert_eq!(
            forest_linear_bound(&g("K3"), &g("K3")),
            Err(CertifyError::NotForest)
        );
    }

    #[test]
    fn exponent_plug_ins() {
        assert_eq!(lll_exponent(&g("K4")).unwrap(), Rational::new(5, 2));
        assert_eq!(lll_exponent(&g("K3_4")).unwrap(), Rational::new(11, 5));
        assert_eq!(lll_exponent(&g("C5")).unwrap(), Rational::new(4, 3));
        assert_eq!(
            lll_exponent(&g("K2")),
            Err(CertifyError::TooFewVertices)
        );
    }

    #[test]
    fn density_certificate_examples() {
        let k4 = density_certificate(&g("K4")).unwrap();
        assert_eq!(k4.slack, 0);
        assert_eq!(k4.witness.order(), 4);
        assert_eq!(k4.lll_exponent, Rational::new(5, 2));
        assert!(density_certificate(&g("P5")).is_none());
        let octa = density_certificate(&g("K2_2_2")).unwrap();
        assert!(octa.slack >= 2);
    }

    #[test]
    fn classify_examples() {
        let kb = KnowledgeBase::default_facts();
        assert_eq!(classify(&g("K4"), &kb).status, RslStatus::CertifiedNonlinear);
        let p5 = classify(&g("P5"), &kb);
        assert_eq!(p5.status, RslStatus::CertifiedLinear);
        assert_eq!(p5.linear_coefficient, Some(9));
        assert_eq!(classify(&g("C5"), &kb).status, RslStatus::Unknown);
        let k5 = classify(&g("K5"), &kb);
        assert_eq!(k5.status, RslStatus::CertifiedNonlinear);
        // both the density rule and the K_4-containment rule apply
        assert_eq!(k5.justification.len(), 2);
        // C_4 is a proper subgraph of K_4
        assert_eq!(classify(&g("C4"), &kb).status, RslStatus::CertifiedLinear);
    }

    #[test]
    fn kb_validation_rejects_bad_facts() {
        let c5 = g("C5");
        let k5 = g("K5");
        let fact = |graph: Graph| Fact {
            code: canonical_code(&graph).unwrap(),
            graph,
            citation: "test".to_string(),
        };
        // a forest can never be a nonlinear fact
        let err = KnowledgeBase::validated(vec![], vec![fact(g("P4"))]);
        assert!(matches!(err, Err(KbError::NonlinearForest { .. })));
        // K_5 contains K_4, so listing it linear contradicts the default
        let base = KnowledgeBase::default_facts();
        let mut linear = base.linear.clone();
        linear.push(fact(k5));
        let err = KnowledgeBase::validated(linear, base.nonlinear.clone());
        assert!(matches!(err, Err(KbError::LinearButDense { .. })));
        // C_5 as a nonlinear fact contradicts nothing structural, so it loads
        let mut nonlinear = base.nonlinear.clone();
        nonlinear.push(fact(c5));
        assert!(KnowledgeBase::validated(base.linear.clone(), nonlinear).is_ok());
    }

    #[test]
    fn facts_file_round_trip() {
        let json = r#"[{"graph6": "Dhc", "status": "nonlinear", "citation": "test entry"}]"#;
        // Dhc is some 5-vertex graph; just exercise the loader paths
        let parsed = KnowledgeBase::with_facts_file(json);
        // whether it validates depends on the decoded graph; a forest must fail
        let forest_json = format!(
            r#"[{{"graph6": {:?}, "status": "nonlinear", "citation": "x"}}]"#,
            graph6::encode(&g("P4")).unwrap()
        );
        assert!(matches!(
            KnowledgeBase::with_facts_file(&forest_json),
            Err(KbError::NonlinearForest { .. })
        ));
        let _ = parsed;
    }
}
