//! Serializable report types shared by the CLI and the examples.
//!
//! Every report carries `schema_version`; the JSON layout is considered
//! stable per version. Complex vectors serialize as arrays of `[re, im]`
//! pairs, matrices as arrays of rows, groups as generator cycle strings plus
//! the order. Field order is declaration order, so a fixed configuration and
//! seed reproduce byte-identical output.

use std::fmt;

use serde::Serialize;

use crate::linalg::C64;
use crate::perm::PermGroup;

pub const SCHEMA_VERSION: &str = "1";

pub fn vector_pairs(v: &[C64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphInfo {
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupInfo {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

impl GroupInfo {
    pub fn from_group(group: &PermGroup) -> Self {
        GroupInfo {
            degree: group.degree(),
            order: group.order().unwrap_or(0),
            generators: group.generators().iter().map(|g| g.to_cycles()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitChainInfo {
    /// 1-based base points.
    pub base: Vec<usize>,
    pub orbit_sizes: Vec<usize>,
    pub final_stabilizer_order: usize,
    pub product: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AutReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub group: GroupInfo,
    pub orbit_stabilizer: OrbitChainInfo,
}

impl fmt::Display for AutReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph: {} ({} vertices, {} edges)",
            self.graph.source, self.graph.vertices, self.graph.edges
        )?;
        writeln!(f, "group order: {}", self.group.order)?;
        writeln!(f, "generators: {}", self.group.generators.join(" ; "))?;
        let mut factors: Vec<String> = self
            .orbit_stabilizer
            .orbit_sizes
            .iter()
            .map(|s| s.to_string())
            .collect();
        if self.orbit_stabilizer.final_stabilizer_order > 1 || factors.is_empty() {
            factors.push(self.orbit_stabilizer.final_stabilizer_order.to_string());
        }
        writeln!(
            f,
            "orbit-stabilizer: base {:?} -> {} = {}",
            self.orbit_stabilizer.base,
            factors.join(" * "),
            self.orbit_stabilizer.product
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenvalueInfo {
    pub value: f64,
    pub multiplicity: usize,
    pub max_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub cluster_tol: f64,
    pub eigenvalues: Vec<EigenvalueInfo>,
}

impl fmt::Display for SpectrumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph: {} ({} vertices, {} edges)",
            self.graph.source, self.graph.vertices, self.graph.edges
        )?;
        writeln!(f, "distinct eigenvalues: {}", self.eigenvalues.len())?;
        for e in &self.eigenvalues {
            writeln!(
                f,
                "  lambda = {:<12} multiplicity {:<3} max residual {:.2e}",
                format!("{:.6}", e.value),
                e.multiplicity,
                e.max_residual
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockInfo {
    pub dim: usize,
    pub iso_class: usize,
    pub hom_self_dim: usize,
    pub basis: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentInfo {
    pub iso_class: usize,
    pub d: usize,
    pub m: usize,
    pub blocks: Vec<BlockInfo>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionScope {
    /// "ambient" or "eigenspace".
    pub scope: String,
    pub eigenvalue: Option<f64>,
    pub dim: usize,
    pub components: Vec<ComponentInfo>,
    pub cross_seed_agrees: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecomposeReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub group: GroupInfo,
    pub seed: u64,
    pub scopes: Vec<DecompositionScope>,
}

impl fmt::Display for DecomposeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph: {} ({} vertices, {} edges); group order {}",
            self.graph.source, self.graph.vertices, self.graph.edges, self.group.order
        )?;
        for s in &self.scopes {
            let label = match s.eigenvalue {
                Some(v) => format!("eigenspace lambda = {v:.6}"),
                None => "ambient space".to_string(),
            };
            writeln!(f, "{label} (dim {}):", s.dim)?;
            for c in &s.components {
                let certs: Vec<String> = c
                    .blocks
                    .iter()
                    .map(|b| b.hom_self_dim.to_string())
                    .collect();
                writeln!(
                    f,
                    "  class {}: d = {}, m = {}  (irreducibility certificates: {})",
                    c.iso_class,
                    c.d,
                    c.m,
                    certs.join(",")
                )?;
            }
            writeln!(
                f,
                "  cross-seed agreement: {}",
                if s.cross_seed_agrees { "yes" } else { "NO" }
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentSpanInfo {
    pub iso_class: usize,
    pub d: usize,
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpanJsonReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub group: GroupInfo,
    pub vector_source: String,
    pub vector: Vec<[f64; 2]>,
    pub dim_closure: usize,
    pub dim_formula: usize,
    pub agrees: bool,
    pub index_bound: Option<usize>,
    pub per_component: Vec<ComponentSpanInfo>,
}

impl fmt::Display for SpanJsonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph: {} ; group order {}",
            self.graph.source, self.group.order
        )?;
        writeln!(f, "vector source: {}", self.vector_source)?;
        writeln!(f, "dim span (closure oracle) = {}", self.dim_closure)?;
        writeln!(
            f,
            "dim span (formula)        = {}  [{}]",
            self.dim_formula,
            if self.agrees { "agrees" } else { "DISAGREES" }
        )?;
        if let Some(bound) = self.index_bound {
            writeln!(
                f,
                "index bound [G : G_v] = {}{}",
                bound,
                if bound == self.dim_closure {
                    "  (bound attained)"
                } else {
                    ""
                }
            )?;
        }
        for c in &self.per_component {
            writeln!(
                f,
                "  class {}: d = {}, m = {}, independent rank n = {}",
                c.iso_class, c.d, c.m, c.n
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalScope {
    pub scope: String,
    pub eigenvalue: Option<f64>,
    pub dim: usize,
    pub symmetric_dim: usize,
    pub asymmetric_dim: usize,
    pub max_value: usize,
    pub capped_classes: Vec<usize>,
    pub symmetric_vector: Vec<[f64; 2]>,
    pub asymmetric_vector: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtremalJsonReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub group: GroupInfo,
    pub seed: u64,
    pub scopes: Vec<ExtremalScope>,
}

impl fmt::Display for ExtremalJsonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "graph: {} ; group order {}",
            self.graph.source, self.group.order
        )?;
        for s in &self.scopes {
            let label = match s.eigenvalue {
                Some(v) => format!("eigenspace lambda = {v:.6}"),
                None => "ambient space".to_string(),
            };
            write!(
                f,
                "{label}: dim {} | min span {} | max span {} (formula {})",
                s.dim, s.symmetric_dim, s.asymmetric_dim, s.max_value
            )?;
            if s.capped_classes.is_empty() {
                writeln!(f)?;
            } else {
                writeln!(f, " | square-capped classes {:?}", s.capped_classes)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceStatements {
    pub automorphism: bool,
    pub adjacency_eigenspaces_invariant: bool,
    pub common_eigenbasis: bool,
    pub permutation_eigenspaces_invariant: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub graph: GraphInfo,
    pub permutation: String,
    pub statements: EquivalenceStatements,
    pub consistent: bool,
    pub all_true: bool,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph: {}", self.graph.source)?;
        writeln!(f, "permutation: {}", self.permutation)?;
        let s = &self.statements;
        writeln!(f, "  1) adjacency-preserving bijection:       {}", s.automorphism)?;
        writeln!(
            f,
            "  2) adjacency eigenspaces invariant:      {}",
            s.adjacency_eigenspaces_invariant
        )?;
        writeln!(
            f,
            "  3) common orthonormal eigenbasis:        {}",
            s.common_eigenbasis
        )?;
        writeln!(
            f,
            "  4) permutation eigenspaces A-invariant:  {}",
            s.permutation_eigenspaces_invariant
        )?;
        writeln!(
            f,
            "verdict: {}",
            if !self.consistent {
                "INCONSISTENT (the four statements disagree)"
            } else if self.all_true {
                "all four statements hold"
            } else {
                "all four statements fail"
            }
        )
    }
}
