//! Command implementations behind the CLI: graph/group loading, tolerance
//! threading, and one function per subcommand producing a serializable
//! report. The binary itself only parses arguments, calls these, and maps
//! errors to exit codes.

use std::fs;
use std::path::PathBuf;

use thiserror::Error;

use crate::graph::{builtin, parse_edge_list, parse_graph6, Graph, GraphError};
use crate::linalg::{
    random_vector_in, symmetric_eig, LinalgError, Spectrum, SplitMix64, Subspace, C64,
};
use crate::perm::{
    automorphism_group, default_base, is_automorphism, orbit_stabilizer_chain, parse_cycles,
    PermError, PermGroup,
};
use crate::rep::{
    canonical_decomposition, decompositions_agree, hom_space, verify_equivalence, RepError,
};
use crate::report::{
    vector_pairs, AutReport, BlockInfo, ComponentInfo, ComponentSpanInfo, DecomposeReport,
    DecompositionScope, EigenvalueInfo, ExtremalJsonReport, ExtremalScope, GraphInfo, GroupInfo,
    OrbitChainInfo, SpanJsonReport, SpectrumReport, EquivalenceStatements, VerifyReport,
    SCHEMA_VERSION,
};
use crate::span::{all_reference_maps, dim_span_formula, extremal_vectors, SpanError};

/// Principal-angle tolerance for the cross-seed self-check.
const CROSS_SEED_ANGLE_TOL: f64 = 1e-7;

#[derive(Debug, Error)]
pub enum CmdError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    PermParse(PermError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("bad vector file: {0}")]
    VectorFile(String),
    #[error("element cap {0} exceeded; raise --cap for this graph")]
    CapExceeded(usize),
    #[error("eigensolver failed to converge")]
    NoConvergence,
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("span analysis defect: {0}")]
    SpanDefect(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CmdError {
    /// Disjoint exit codes per error class. 6 and 7 also cover the
    /// non-error report outcomes handled by the binary (formula/oracle
    /// disagreement, mixed equivalence statements).
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Config(_)
            | CmdError::Graph(_)
            | CmdError::PermParse(_)
            | CmdError::Io { .. }
            | CmdError::VectorFile(_) => 2,
            CmdError::CapExceeded(_) => 3,
            CmdError::NoConvergence => 4,
            CmdError::Decomposition(_) => 5,
            CmdError::SpanDefect(_) => 6,
            CmdError::Internal(_) => 1,
        }
    }
}

impl From<PermError> for CmdError {
    fn from(e: PermError) -> Self {
        match e {
            PermError::CapExceeded(c) => CmdError::CapExceeded(c),
            PermError::NotEnumerated | PermError::SubgroupCheckFailed => {
                CmdError::Internal(e.to_string())
            }
            other => CmdError::PermParse(other),
        }
    }
}

impl From<LinalgError> for CmdError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::NoConvergence => CmdError::NoConvergence,
            other => CmdError::Internal(other.to_string()),
        }
    }
}

impl From<RepError> for CmdError {
    fn from(e: RepError) -> Self {
        match e {
            RepError::DecompositionFailed(m) => CmdError::Decomposition(m),
            RepError::NotInvariant => CmdError::Config(
                "the supplied group does not leave the analyzed subspace invariant".into(),
            ),
            RepError::Perm(p) => p.into(),
            RepError::Linalg(l) => l.into(),
            other => CmdError::Internal(other.to_string()),
        }
    }
}

impl From<SpanError> for CmdError {
    fn from(e: SpanError) -> Self {
        match e {
            SpanError::VectorOutsideAmbient => {
                CmdError::VectorFile("vector lies outside the analyzed space".into())
            }
            SpanError::MissingIntertwiner { .. } => CmdError::Decomposition(e.to_string()),
            SpanError::ConstructionFailed(m) => CmdError::Decomposition(m),
            SpanError::IndexBoundViolated { .. } => CmdError::SpanDefect(e.to_string()),
            SpanError::Rep(r) => r.into(),
            SpanError::Perm(p) => p.into(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum GraphSource {
    Builtin { name: String, k: usize },
    File(PathBuf),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// Where the probe vector of the span command comes from.
#[derive(Debug, Clone)]
pub enum VectorSource {
    File(PathBuf),
    Random,
    Eigen(f64),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub source: GraphSource,
    pub seed: u64,
    pub tol: f64,
    pub cluster_tol: f64,
    pub cap: usize,
    pub format: OutputFormat,
    /// Semicolon-separated cycle strings; analyze the subgroup they generate
    /// instead of the full automorphism group.
    pub group: Option<String>,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CmdError> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(CmdError::Config("--tol must be positive".into()));
        }
        if self.cluster_tol.is_nan() || self.cluster_tol <= 0.0 {
            return Err(CmdError::Config("--cluster-tol must be positive".into()));
        }
        if self.cap == 0 {
            return Err(CmdError::Config("--cap must be at least 1".into()));
        }
        Ok(())
    }
}

pub fn load_graph(cfg: &RunConfig) -> Result<(Graph, GraphInfo), CmdError> {
    let (g, source) = match &cfg.source {
        GraphSource::Builtin { name, k } => {
            let g = builtin(name, *k)?;
            let label = if name == "petersen" {
                name.clone()
            } else {
                format!("{name} {k}")
            };
            (g, label)
        }
        GraphSource::File(path) => {
            let text = fs::read_to_string(path).map_err(|source| CmdError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let has_header = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .is_some_and(|l| l.starts_with("n ") || l == "n");
            let g = if path.extension().is_some_and(|e| e == "g6") {
                parse_graph6(&text)?
            } else if has_header {
                parse_edge_list(&text)?
            } else {
                parse_graph6(&text)?
            };
            (g, path.display().to_string())
        }
    };
    let info = GraphInfo {
        source,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
    };
    Ok((g, info))
}

/// The group under analysis: the full automorphism group, or the closure of
/// the `--group` cycles after checking each really is an automorphism.
pub fn build_group(cfg: &RunConfig, g: &Graph) -> Result<PermGroup, CmdError> {
    match &cfg.group {
        None => Ok(automorphism_group(g, cfg.cap)?),
        Some(spec) => {
            let mut gens = Vec::new();
            for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                let p = parse_cycles(part, g.vertex_count())?;
                if !is_automorphism(g, &p)? {
                    return Err(CmdError::Config(format!(
                        "--group generator {part} is not an automorphism of the graph"
                    )));
                }
                gens.push(p);
            }
            if gens.is_empty() {
                return Err(CmdError::Config("--group contains no cycles".into()));
            }
            Ok(PermGroup::closure(gens, cfg.cap)?)
        }
    }
}

fn spectrum_of(g: &Graph, cfg: &RunConfig) -> Result<Spectrum, CmdError> {
    let a = g.adjacency_matrix();
    Ok(symmetric_eig(
        g.vertex_count(),
        a.entries(),
        cfg.cluster_tol,
        cfg.tol,
    )?)
}

pub fn cmd_aut(cfg: &RunConfig) -> Result<AutReport, CmdError> {
    cfg.validate()?;
    let (g, graph) = load_graph(cfg)?;
    let group = build_group(cfg, &g)?;
    let base = default_base(&group)?;
    let chain = orbit_stabilizer_chain(&group, &base)?;
    if Some(chain.order) != group.order() {
        return Err(CmdError::Internal(format!(
            "orbit-stabilizer product {} disagrees with the enumerated order {:?}",
            chain.order,
            group.order()
        )));
    }
    Ok(AutReport {
        schema_version: SCHEMA_VERSION,
        command: "aut",
        graph,
        group: GroupInfo::from_group(&group),
        orbit_stabilizer: OrbitChainInfo {
            base: chain.factors.iter().map(|f| f.point + 1).collect(),
            orbit_sizes: chain.factors.iter().map(|f| f.orbit_len).collect(),
            final_stabilizer_order: chain.final_order,
            product: chain.order,
        },
    })
}

pub fn cmd_spectrum(cfg: &RunConfig) -> Result<SpectrumReport, CmdError> {
    cfg.validate()?;
    let (g, graph) = load_graph(cfg)?;
    let spectrum = spectrum_of(&g, cfg)?;
    let a = g.adjacency_matrix();
    let am = crate::linalg::CMatrix::from_real(g.vertex_count(), g.vertex_count(), a.entries())?;
    let eigenvalues = spectrum
        .pairs()
        .iter()
        .map(|p| {
            let max_residual = p
                .space
                .basis()
                .iter()
                .map(|q| {
                    let aq = am.mul_vec(q);
                    let lq = crate::linalg::scale_vec(q, C64::new(p.value, 0.0));
                    crate::linalg::norm(&crate::linalg::sub_vec(&aq, &lq))
                })
                .fold(0.0, f64::max);
            EigenvalueInfo {
                value: p.value,
                multiplicity: p.space.dim(),
                max_residual,
            }
        })
        .collect();
    Ok(SpectrumReport {
        schema_version: SCHEMA_VERSION,
        command: "spectrum",
        graph,
        cluster_tol: cfg.cluster_tol,
        eigenvalues,
    })
}

fn decomposition_scope(
    label: &str,
    eigenvalue: Option<f64>,
    space: &Subspace,
    group: &PermGroup,
    cfg: &RunConfig,
) -> Result<DecompositionScope, CmdError> {
    let cd = canonical_decomposition(space, group, cfg.seed, cfg.tol, cfg.cluster_tol)?;
    let mut agree = true;
    for offset in [1, 2] {
        let other = canonical_decomposition(
            space,
            group,
            cfg.seed.wrapping_add(offset),
            cfg.tol,
            cfg.cluster_tol,
        )?;
        agree &= decompositions_agree(&cd, &other, CROSS_SEED_ANGLE_TOL);
    }
    let mut components = Vec::new();
    for comp in &cd.components {
        let mut blocks = Vec::new();
        for b in &comp.blocks {
            let cert = hom_space(&b.basis, &b.basis, group.generators(), cfg.tol)?.len();
            blocks.push(BlockInfo {
                dim: b.dim(),
                iso_class: comp.iso_class,
                hom_self_dim: cert,
                basis: b.basis.basis().iter().map(|v| vector_pairs(v)).collect(),
            });
        }
        components.push(ComponentInfo {
            iso_class: comp.iso_class,
            d: comp.irrep_dim,
            m: comp.multiplicity,
            blocks,
        });
    }
    Ok(DecompositionScope {
        scope: label.to_string(),
        eigenvalue,
        dim: space.dim(),
        components,
        cross_seed_agrees: agree,
    })
}

pub fn cmd_decompose(cfg: &RunConfig) -> Result<DecomposeReport, CmdError> {
    cfg.validate()?;
    let (g, graph) = load_graph(cfg)?;
    let group = build_group(cfg, &g)?;
    let spectrum = spectrum_of(&g, cfg)?;
    let n = g.vertex_count();
    let mut scopes = vec![decomposition_scope(
        "ambient",
        None,
        &Subspace::full(n, cfg.tol),
        &group,
        cfg,
    )?];
    for pair in spectrum.pairs() {
        scopes.push(decomposition_scope(
            "eigenspace",
            Some(pair.value),
            &pair.space,
            &group,
            cfg,
        )?);
    }
    Ok(DecomposeReport {
        schema_version: SCHEMA_VERSION,
        command: "decompose",
        graph,
        group: GroupInfo::from_group(&group),
        seed: cfg.seed,
        scopes,
    })
}

fn parse_vector_file(path: &PathBuf, n: usize) -> Result<Vec<C64>, CmdError> {
    let text = fs::read_to_string(path).map_err(|source| CmdError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CmdError::VectorFile(format!("not valid JSON: {e}")))?;
    let arr = value
        .as_array()
        .ok_or_else(|| CmdError::VectorFile("expected a JSON array".into()))?;
    let mut v = Vec::with_capacity(arr.len());
    for (i, entry) in arr.iter().enumerate() {
        let z = if let Some(x) = entry.as_f64() {
            C64::new(x, 0.0)
        } else if let Some(pair) = entry.as_array() {
            if pair.len() != 2 {
                return Err(CmdError::VectorFile(format!(
                    "entry {i} must be a number or an [re, im] pair"
                )));
            }
            let re = pair[0]
                .as_f64()
                .ok_or_else(|| CmdError::VectorFile(format!("entry {i}: bad real part")))?;
            let im = pair[1]
                .as_f64()
                .ok_or_else(|| CmdError::VectorFile(format!("entry {i}: bad imaginary part")))?;
            C64::new(re, im)
        } else {
            return Err(CmdError::VectorFile(format!(
                "entry {i} must be a number or an [re, im] pair"
            )));
        };
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(CmdError::VectorFile(format!("entry {i} is not finite")));
        }
        v.push(z);
    }
    if v.len() != n {
        return Err(CmdError::VectorFile(format!(
            "vector length {} does not match the graph order {n}",
            v.len()
        )));
    }
    Ok(v)
}

pub fn cmd_span(cfg: &RunConfig, source: &VectorSource) -> Result<SpanJsonReport, CmdError> {
    cfg.validate()?;
    let (g, graph) = load_graph(cfg)?;
    let group = build_group(cfg, &g)?;
    let n = g.vertex_count();
    let cd = canonical_decomposition(
        &Subspace::full(n, cfg.tol),
        &group,
        cfg.seed,
        cfg.tol,
        cfg.cluster_tol,
    )?;
    let maps = all_reference_maps(&cd, group.generators(), cfg.tol)?;

    let mut rng = SplitMix64::new(cfg.seed);
    let (v, source_label) = match source {
        VectorSource::File(path) => (
            parse_vector_file(path, n)?,
            format!("file:{}", path.display()),
        ),
        VectorSource::Random => (rng.complex_vector(n), format!("random (seed {})", cfg.seed)),
        VectorSource::Eigen(lambda) => {
            let spectrum = spectrum_of(&g, cfg)?;
            let a = g.adjacency_matrix();
            let atol = (cfg.cluster_tol * a.frobenius_norm().max(1.0)).max(1e-6);
            let pair = spectrum.find(*lambda, atol).ok_or_else(|| {
                let available: Vec<String> = spectrum
                    .pairs()
                    .iter()
                    .map(|p| format!("{:.6}", p.value))
                    .collect();
                CmdError::Config(format!(
                    "no eigenvalue within {atol:.2e} of {lambda}; available: {}",
                    available.join(", ")
                ))
            })?;
            (
                random_vector_in(&pair.space, &mut rng),
                format!("eigenspace lambda = {:.6} (seed {})", pair.value, cfg.seed),
            )
        }
    };

    let report = dim_span_formula(&v, &cd, &maps, &group, cfg.tol)?;
    Ok(SpanJsonReport {
        schema_version: SCHEMA_VERSION,
        command: "span",
        graph,
        group: GroupInfo::from_group(&group),
        vector_source: source_label,
        vector: vector_pairs(&v),
        dim_closure: report.dim_closure,
        dim_formula: report.dim_formula,
        agrees: report.agrees,
        index_bound: report.index_bound,
        per_component: report
            .per_component
            .iter()
            .map(|c| ComponentSpanInfo {
                iso_class: c.iso_class,
                d: c.irrep_dim,
                m: c.multiplicity,
                n: c.independent_rank,
            })
            .collect(),
    })
}

fn extremal_scope(
    label: &str,
    eigenvalue: Option<f64>,
    space: &Subspace,
    group: &PermGroup,
    cfg: &RunConfig,
) -> Result<ExtremalScope, CmdError> {
    let cd = canonical_decomposition(space, group, cfg.seed, cfg.tol, cfg.cluster_tol)?;
    let maps = all_reference_maps(&cd, group.generators(), cfg.tol)?;
    let entry = extremal_vectors(&cd, &maps, group, cfg.seed, cfg.tol)?;
    Ok(ExtremalScope {
        scope: label.to_string(),
        eigenvalue,
        dim: space.dim(),
        symmetric_dim: entry.symmetric_dim,
        asymmetric_dim: entry.asymmetric_dim,
        max_value: entry.max_value,
        capped_classes: entry.capped_components,
        symmetric_vector: vector_pairs(&entry.symmetric),
        asymmetric_vector: vector_pairs(&entry.asymmetric),
    })
}

pub fn cmd_extremal(cfg: &RunConfig) -> Result<ExtremalJsonReport, CmdError> {
    cfg.validate()?;
    let (g, graph) = load_graph(cfg)?;
    let group = build_group(cfg, &g)?;
    let spectrum = spectrum_of(&g, cfg)?;
    let n = g.vertex_count();
    let mut scopes = vec![extremal_scope(
        "ambient",
        None,
        &Subspace::full(n, cfg.tol),
        &group,
        cfg,
    )?];
    for pair in spectrum.pairs() {
        scopes.push(extremal_scope(
            "eigenspace",
            Some(pair.value),
            &pair.space,
            &group,
            cfg,
        )?);
    }
    Ok(ExtremalJsonReport {
        schema_version: SCHEMA_VERSION,
        command: "extremal",
        graph,
        group: GroupInfo::from_group(&group),
        seed: cfg.seed,
        scopes,
    })
}

pub fn cmd_verify(cfg: &RunConfig, cycles: &str) -> Result<VerifyReport, CmdError> {
    cfg.validate()?;
    let (g, graph) = load_graph(cfg)?;
    let sigma = parse_cycles(cycles, g.vertex_count())?;
    let rep = verify_equivalence(&g, &sigma, cfg.tol, cfg.cluster_tol)?;
    Ok(VerifyReport {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        graph,
        permutation: sigma.to_cycles(),
        statements: EquivalenceStatements {
            automorphism: rep.automorphism,
            adjacency_eigenspaces_invariant: rep.adjacency_eigenspaces_invariant,
            common_eigenbasis: rep.common_eigenbasis,
            permutation_eigenspaces_invariant: rep.permutation_eigenspaces_invariant,
        },
        consistent: rep.consistent(),
        all_true: rep.all_true(),
    })
}

/// Renders a report in the requested format. JSON output is pretty-printed
/// and deterministic for a fixed configuration and seed.
pub fn render<R: serde::Serialize + std::fmt::Display>(
    report: &R,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Text => report.to_string(),
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(name: &str, k: usize) -> RunConfig {
        RunConfig {
            source: GraphSource::Builtin {
                name: name.into(),
                k,
            },
            seed: 0,
            tol: 1e-8,
            cluster_tol: 1e-7,
            cap: 1_000_000,
            format: OutputFormat::Json,
            group: None,
        }
    }

    #[test]
    fn aut_report_petersen() {
        let r = cmd_aut(&cfg("petersen", 0)).unwrap();
        assert_eq!(r.group.order, 120);
        assert_eq!(r.orbit_stabilizer.product, 120);
        let mut factors = r.orbit_stabilizer.orbit_sizes.clone();
        factors.push(r.orbit_stabilizer.final_stabilizer_order);
        let nontrivial: Vec<usize> = factors.into_iter().filter(|&x| x > 1).collect();
        assert_eq!(nontrivial, vec![10, 3, 2, 2]);
    }

    #[test]
    fn aut_report_small() {
        assert_eq!(cmd_aut(&cfg("complete", 4)).unwrap().group.order, 24);
        let p3 = cmd_aut(&cfg("path", 3)).unwrap();
        assert_eq!(p3.group.order, 2);
        assert_eq!(p3.group.generators, vec!["(1,3)".to_string()]);
    }

    #[test]
    fn spectrum_report_petersen() {
        let r = cmd_spectrum(&cfg("petersen", 0)).unwrap();
        let summary: Vec<(i64, usize)> = r
            .eigenvalues
            .iter()
            .map(|e| (e.value.round() as i64, e.multiplicity))
            .collect();
        assert_eq!(summary, vec![(3, 1), (1, 5), (-2, 4)]);
        assert!(r.eigenvalues.iter().all(|e| e.max_residual <= 1e-9));
    }

    #[test]
    fn spectrum_report_cycle4_and_k3() {
        let r = cmd_spectrum(&cfg("cycle", 4)).unwrap();
        let summary: Vec<(i64, usize)> = r
            .eigenvalues
            .iter()
            .map(|e| (e.value.round() as i64, e.multiplicity))
            .collect();
        assert_eq!(summary, vec![(2, 1), (0, 2), (-2, 1)]);
        let r = cmd_spectrum(&cfg("complete", 3)).unwrap();
        let summary: Vec<(i64, usize)> = r
            .eigenvalues
            .iter()
            .map(|e| (e.value.round() as i64, e.multiplicity))
            .collect();
        assert_eq!(summary, vec![(2, 1), (-1, 2)]);
    }

    #[test]
    fn decompose_report_petersen() {
        let r = cmd_decompose(&cfg("petersen", 0)).unwrap();
        let ambient = &r.scopes[0];
        let dm: Vec<(usize, usize)> = ambient.components.iter().map(|c| (c.d, c.m)).collect();
        assert_eq!(dm, vec![(1, 1), (4, 1), (5, 1)]);
        assert!(r.scopes.iter().all(|s| s.cross_seed_agrees));
        // every eigenspace is a single irreducible component
        for s in &r.scopes[1..] {
            assert_eq!(s.components.len(), 1);
            assert_eq!(s.components[0].m, 1);
            assert!(s.components[0].blocks.iter().all(|b| b.hom_self_dim == 1));
        }
    }

    #[test]
    fn decompose_report_empty4() {
        // no edges: the automorphism group is all of S4, the permutation
        // representation splits as trivial + standard
        let r = cmd_decompose(&cfg("empty", 4)).unwrap();
        let ambient = &r.scopes[0];
        let dm: Vec<(usize, usize)> = ambient.components.iter().map(|c| (c.d, c.m)).collect();
        assert_eq!(dm, vec![(1, 1), (3, 1)]);
    }

    #[test]
    fn span_random_and_eigen_sources() {
        let c = cfg("petersen", 0);
        let r = cmd_span(&c, &VectorSource::Random).unwrap();
        assert_eq!(r.dim_closure, 10);
        assert!(r.agrees);

        let r = cmd_span(&c, &VectorSource::Eigen(1.0)).unwrap();
        assert_eq!(r.dim_formula, 5);
        let r = cmd_span(&c, &VectorSource::Eigen(-2.0)).unwrap();
        assert_eq!(r.dim_formula, 4);
        assert!(matches!(
            cmd_span(&c, &VectorSource::Eigen(0.5)),
            Err(CmdError::Config(_))
        ));
    }

    #[test]
    fn extremal_report_values() {
        let r = cmd_extremal(&cfg("petersen", 0)).unwrap();
        assert_eq!(r.scopes[0].max_value, 10);
        assert_eq!(r.scopes[0].asymmetric_dim, 10);
        assert_eq!(r.scopes[0].symmetric_dim, 1);
        let r = cmd_extremal(&cfg("path", 3)).unwrap();
        assert_eq!(r.scopes[0].max_value, 2);
    }

    #[test]
    fn extremal_under_cyclic_subgroup() {
        let mut c = cfg("petersen", 0);
        c.group = Some("(1,4,2,5,3)(6,9,7,10,8)".into());
        let r = cmd_extremal(&c).unwrap();
        assert_eq!(r.group.order, 5);
        // the 5-dimensional eigenspace splits into five eigenlines of the
        // rotation, so the minimal span there is 1
        let v1 = r
            .scopes
            .iter()
            .find(|s| s.eigenvalue.is_some_and(|v| (v - 1.0).abs() < 1e-6))
            .unwrap();
        assert_eq!(v1.symmetric_dim, 1);
        assert_eq!(v1.asymmetric_dim, 5);
    }

    #[test]
    fn verify_report_statements() {
        let c = cfg("petersen", 0);
        let r = cmd_verify(&c, "(3,7)(4,10)(8,9)").unwrap();
        assert!(r.all_true && r.consistent);
        let r = cmd_verify(&c, "(1,2)").unwrap();
        assert!(!r.all_true && r.consistent);
        assert!(matches!(
            cmd_verify(&c, "(1,1)"),
            Err(CmdError::PermParse(_))
        ));
    }

    #[test]
    fn group_option_validates_automorphisms() {
        let mut c = cfg("petersen", 0);
        c.group = Some("(1,2)".into());
        assert!(matches!(cmd_aut(&c), Err(CmdError::Config(_))));
        c.group = Some("(3,7)(4,10)(8,9)".into());
        assert_eq!(cmd_aut(&c).unwrap().group.order, 2);
    }

    #[test]
    fn json_output_is_reproducible() {
        let c = cfg("petersen", 0);
        let a = render(&cmd_span(&c, &VectorSource::Random).unwrap(), OutputFormat::Json);
        let b = render(&cmd_span(&c, &VectorSource::Random).unwrap(), OutputFormat::Json);
        assert_eq!(a, b);
        assert!(a.contains("\"schema_version\": \"1\""));
    }

    #[test]
    fn config_validation() {
        let mut c = cfg("petersen", 0);
        c.tol = 0.0;
        assert!(matches!(cmd_aut(&c), Err(CmdError::Config(_))));
        let mut c = cfg("petersen", 0);
        c.cap = 0;
        assert!(matches!(cmd_aut(&c), Err(CmdError::Config(_))));
    }
}
