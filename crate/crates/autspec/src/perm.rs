//! Permutations, their action on complex vectors, automorphism testing and
//! enumeration, group closure, orbit-stabilizer bookkeeping, and the line
//! stabilizer of a vector.
//!
//! Groups here are desk scale: operations that quantify over the whole group
//! (line stabilizer, averaged projections) require a fully enumerated group
//! and fail loudly with `NotEnumerated` otherwise. Orbit-span closure only
//! ever needs generators.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::Graph;
use crate::linalg::{inner, norm, scale_vec, sub_vec, CMatrix, C64};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("point {point} out of range 1..={n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("malformed cycle notation: {0}")]
    BadCycleSyntax(String),
    #[error("dimension mismatch: permutation degree {degree}, vector length {len}")]
    DimensionMismatch { degree: usize, len: usize },
    #[error("element cap {0} exceeded during enumeration")]
    CapExceeded(usize),
    #[error("group is not enumerated; this operation quantifies over all elements")]
    NotEnumerated,
    #[error("line stabilizer failed the subgroup closure check")]
    SubgroupCheckFailed,
}

/// A permutation of `{0, .., n-1}` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Validates that `images` is a bijection on `{0, .., n-1}`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(PermError::PointOutOfRange { point: v + 1, n });
            }
            if seen[v] {
                return Err(PermError::RepeatedPoint(v + 1));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// Composition `self o other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let mut seen = vec![false; self.degree()];
        let mut ord = 1usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.images[v];
                len += 1;
            }
            ord = ord / gcd(ord, len) * len;
        }
        ord
    }

    /// The coordinate-permuting action: `(sigma v)[i] = v[sigma^{-1}(i)]`,
    /// equivalently `result[sigma(i)] = v[i]`. Norm-preserving by
    /// construction.
    pub fn act(&self, v: &[C64]) -> Result<Vec<C64>, PermError> {
        if v.len() != self.degree() {
            return Err(PermError::DimensionMismatch {
                degree: self.degree(),
                len: v.len(),
            });
        }
        let mut out = vec![C64::new(0.0, 0.0); v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.images[i]] = x;
        }
        Ok(out)
    }

    /// Operator matrix with respect to the standard basis: `P e_i = e_{sigma(i)}`.
    pub fn matrix(&self) -> CMatrix {
        let n = self.degree();
        let mut p = CMatrix::zeros(n, n);
        for i in 0..n {
            p.set(self.images[i], i, C64::new(1.0, 0.0));
        }
        p
    }

    /// Disjoint-cycle notation, 1-based, fixed points omitted, each cycle
    /// rotated to start at its smallest point, cycles sorted by first point.
    /// The identity prints as `()`.
    pub fn to_cycles(&self) -> String {
        let mut seen = vec![false; self.degree()];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v + 1);
                v = self.images[v];
            }
            cycles.push(cyc);
        }
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", inner.join(","))
            })
            .collect()
    }
}

/// Parses 1-based disjoint-cycle notation like `(1,4,2,5,3)(6,9,7,10,8)`.
/// Points not listed are fixed; an empty string or `()` is the identity.
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation, PermError> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut listed = vec![false; n];
    let s = text.trim();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(PermError::BadCycleSyntax(format!(
                "expected '(' but found '{c}'"
            )));
        }
        chars.next();
        let mut body = String::new();
        let mut closed = false;
        for c in chars.by_ref() {
            if c == ')' {
                closed = true;
                break;
            }
            body.push(c);
        }
        if !closed {
            return Err(PermError::BadCycleSyntax("unclosed cycle".into()));
        }
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let points: Result<Vec<usize>, PermError> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| PermError::BadCycleSyntax(format!("bad point '{t}'")))
            })
            .collect();
        let points = points?;
        for &p in &points {
            if p == 0 || p > n {
                return Err(PermError::PointOutOfRange { point: p, n });
            }
            if listed[p - 1] {
                return Err(PermError::RepeatedPoint(p));
            }
            listed[p - 1] = true;
        }
        for k in 0..points.len() {
            let from = points[k] - 1;
            let to = points[(k + 1) % points.len()] - 1;
            images[from] = to;
        }
    }
    Permutation::from_images(images)
}

/// A permutation group given by generators, optionally with a full element
/// enumeration.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Option<Vec<Permutation>>,
}

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        PermGroup {
            degree: n,
            generators: Vec::new(),
            elements: Some(vec![Permutation::identity(n)]),
        }
    }

    /// Wraps generators without enumerating. Orbit-span closure works on
    /// this; whole-group averages do not.
    pub fn from_generators(generators: Vec<Permutation>) -> Self {
        let degree = generators.first().map(|g| g.degree()).unwrap_or(0);
        assert!(
            generators.iter().all(|g| g.degree() == degree),
            "generators must share a degree"
        );
        PermGroup {
            degree,
            generators,
            elements: None,
        }
    }

    /// BFS product closure of the generators, capped at `cap` elements.
    /// Elements come out sorted lexicographically by image array.
    pub fn closure(generators: Vec<Permutation>, cap: usize) -> Result<Self, PermError> {
        let degree = generators.first().map(|g| g.degree()).unwrap_or(0);
        assert!(
            generators.iter().all(|g| g.degree() == degree),
            "generators must share a degree"
        );
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut elements: Vec<Permutation> = Vec::new();
        let mut queue: Vec<Permutation> = vec![Permutation::identity(degree)];
        seen.insert(queue[0].images().to_vec());
        while let Some(cur) = queue.pop() {
            elements.push(cur.clone());
            if elements.len() > cap {
                return Err(PermError::CapExceeded(cap));
            }
            for g in &generators {
                let next = g.compose(&cur);
                if seen.insert(next.images().to_vec()) {
                    queue.push(next);
                }
            }
        }
        elements.sort_unstable();
        Ok(PermGroup {
            degree,
            generators,
            elements: Some(elements),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_enumerated(&self) -> bool {
        self.elements.is_some()
    }

    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(|e| e.len())
    }

    pub fn elements(&self) -> Result<&[Permutation], PermError> {
        self.elements
            .as_deref()
            .ok_or(PermError::NotEnumerated)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        Ok(self.elements()?.binary_search(p).is_ok())
    }
}

/// Adjacency-preservation test: exact 0/1 comparison of `A[sigma(i)][sigma(j)]`
/// against `A[i][j]`, no tolerance involved.
pub fn is_automorphism(g: &Graph, sigma: &Permutation) -> Result<bool, PermError> {
    if sigma.degree() != g.vertex_count() {
        return Err(PermError::DimensionMismatch {
            degree: sigma.degree(),
            len: g.vertex_count(),
        });
    }
    for i in 0..g.vertex_count() {
        for j in (i + 1)..g.vertex_count() {
            if g.has_edge(i, j) != g.has_edge(sigma.apply(i), sigma.apply(j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Full enumeration of the automorphism group by backtracking over vertex
/// images with degree and partial-adjacency pruning. Candidate images are
/// tried in ascending vertex order within the matching degree class, so the
/// output order is deterministic. A small generator set is extracted
/// greedily afterwards.
pub fn automorphism_group(g: &Graph, cap: usize) -> Result<PermGroup, PermError> {
    let n = g.vertex_count();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j)).collect())
        .collect();
    let deg = g.degrees();

    let mut elements: Vec<Permutation> = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn search(
        k: usize,
        n: usize,
        adj: &[Vec<bool>],
        deg: &[usize],
        img: &mut [usize],
        used: &mut [bool],
        out: &mut Vec<Permutation>,
        cap: usize,
    ) -> Result<(), PermError> {
        if k == n {
            if out.len() == cap {
                return Err(PermError::CapExceeded(cap));
            }
            out.push(Permutation::from_images(img.to_vec()).expect("bijection by construction"));
            return Ok(());
        }
        for c in 0..n {
            if used[c] || deg[c] != deg[k] {
                continue;
            }
            if (0..k).any(|j| adj[k][j] != adj[c][img[j]]) {
                continue;
            }
            img[k] = c;
            used[c] = true;
            search(k + 1, n, adj, deg, img, used, out, cap)?;
            img[k] = usize::MAX;
            used[c] = false;
        }
        Ok(())
    }

    search(0, n, &adj, &deg, &mut img, &mut used, &mut elements, cap)?;
    elements.sort_unstable();

    // greedy generator extraction: keep elements whose incremental closure
    // grows the group
    let mut generators: Vec<Permutation> = Vec::new();
    let mut reached: HashSet<Vec<usize>> = HashSet::new();
    reached.insert(Permutation::identity(n).images().to_vec());
    for e in &elements {
        if reached.contains(e.images()) {
            continue;
        }
        generators.push(e.clone());
        let closed = PermGroup::closure(generators.clone(), cap)?;
        reached = closed
            .elements()?
            .iter()
            .map(|p| p.images().to_vec())
            .collect();
        if reached.len() == elements.len() {
            break;
        }
    }

    Ok(PermGroup {
        degree: n,
        generators,
        elements: Some(elements),
    })
}

/// One link of a stabilizer chain: the base point and its orbit size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitFactor {
    pub point: usize,
    pub orbit_len: usize,
}

/// Orbit-stabilizer factorization of the automorphism group order along the
/// given base points (0-based): `|G| = prod |orbit_i| * |final stabilizer|`.
#[derive(Debug, Clone)]
pub struct OrbitStabilizer {
    pub factors: Vec<OrbitFactor>,
    pub final_order: usize,
    pub order: usize,
}

pub fn orbit_stabilizer_order(g: &Graph, base: &[usize]) -> Result<OrbitStabilizer, PermError> {
    let group = automorphism_group(g, 1_000_000)?;
    orbit_stabilizer_chain(&group, base)
}

/// The same factorization for an already enumerated group.
pub fn orbit_stabilizer_chain(
    group: &PermGroup,
    base: &[usize],
) -> Result<OrbitStabilizer, PermError> {
    let mut current: Vec<Permutation> = group.elements()?.to_vec();
    let mut factors = Vec::new();
    for &b in base {
        assert!(b < group.degree(), "base point out of range");
        let mut orbit: HashSet<usize> = HashSet::new();
        for p in &current {
            orbit.insert(p.apply(b));
        }
        factors.push(OrbitFactor {
            point: b,
            orbit_len: orbit.len(),
        });
        current.retain(|p| p.apply(b) == b);
    }
    let final_order = current.len();
    let order = factors.iter().map(|f| f.orbit_len).product::<usize>() * final_order;
    Ok(OrbitStabilizer {
        factors,
        final_order,
        order,
    })
}

/// Greedy default base: repeatedly take the smallest point whose orbit under
/// the current stabilizer is nontrivial, until the stabilizer is trivial.
pub fn default_base(group: &PermGroup) -> Result<Vec<usize>, PermError> {
    let mut current: Vec<Permutation> = group.elements()?.to_vec();
    let mut base = Vec::new();
    while current.len() > 1 {
        let mut picked = None;
        for b in 0..group.degree() {
            if current.iter().any(|p| p.apply(b) != b) {
                picked = Some(b);
                break;
            }
        }
        let b = picked.expect("nontrivial group moves some point");
        base.push(b);
        current.retain(|p| p.apply(b) == b);
    }
    Ok(base)
}

/// The line stabilizer `G[v] = {sigma : sigma v is collinear with v}` and its
/// index in the group. Collinearity is `||sigma v - (<sigma v, v>/<v, v>) v||
/// <= tol * ||v||`; the zero vector is collinear with everything. Verifies
/// that the collected set is closed under composition.
pub fn line_stabilizer(
    group: &PermGroup,
    v: &[C64],
    tol: f64,
) -> Result<(PermGroup, usize), PermError> {
    let elements = group.elements()?;
    let nv = norm(v);
    let stab: Vec<Permutation> = if nv == 0.0 {
        elements.to_vec()
    } else {
        let vv = inner(v, v);
        let mut stab = Vec::new();
        for sigma in elements {
            let w = sigma.act(v)?;
            let c = inner(&w, v) / vv;
            if norm(&sub_vec(&w, &scale_vec(v, c))) <= tol * nv {
                stab.push(sigma.clone());
            }
        }
        stab
    };
    let set: HashSet<Vec<usize>> = stab.iter().map(|p| p.images().to_vec()).collect();
    for a in &stab {
        for b in &stab {
            if !set.contains(a.compose(b).images()) {
                return Err(PermError::SubgroupCheckFailed);
            }
        }
    }
    let index = elements.len() / stab.len();
    let generators = stab.clone();
    Ok((
        PermGroup {
            degree: group.degree(),
            generators,
            elements: Some(stab),
        },
        index,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin;
    use crate::linalg::SplitMix64;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn parse_transposition() {
        let p = parse_cycles("(1,2)", 3).unwrap();
        assert_eq!(p.images(), &[1, 0, 2]);
        assert_eq!(p.to_cycles(), "(1,2)");
    }

    #[test]
    fn parse_petersen_sigma1() {
        let p = parse_cycles("(1,4,2,5,3)(6,9,7,10,8)", 10).unwrap();
        // 1 -> 4, 4 -> 2, 2 -> 5, 5 -> 3, 3 -> 1 (0-based: 0->3, 3->1, ...)
        assert_eq!(p.apply(0), 3);
        assert_eq!(p.apply(3), 1);
        assert_eq!(p.apply(5), 8);
        assert_eq!(p.order(), 5);
        assert_eq!(p.to_cycles(), "(1,4,2,5,3)(6,9,7,10,8)");
    }

    #[test]
    fn parse_rejects_repeats_and_range() {
        assert_eq!(parse_cycles("(1,1)", 3), Err(PermError::RepeatedPoint(1)));
        assert_eq!(
            parse_cycles("(1,5)", 3),
            Err(PermError::PointOutOfRange { point: 5, n: 3 })
        );
        assert!(matches!(
            parse_cycles("1,2)", 3),
            Err(PermError::BadCycleSyntax(_))
        ));
    }

    #[test]
    fn parse_empty_is_identity() {
        assert!(parse_cycles("", 4).unwrap().is_identity());
        assert!(parse_cycles("()", 4).unwrap().is_identity());
        assert_eq!(parse_cycles("()", 4).unwrap().to_cycles(), "()");
    }

    #[test]
    fn act_swaps_coordinates() {
        let p = parse_cycles("(1,2)", 3).unwrap();
        let v = vec![c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)];
        assert_eq!(p.act(&v).unwrap(), vec![c(2.0, 0.0), c(1.0, 0.0), c(3.0, 0.0)]);
        assert!(p.act(&[c(0.0, 0.0)]).is_err());
    }

    #[test]
    fn act_fixes_all_ones() {
        let p = parse_cycles("(1,4,2,5,3)(6,9,7,10,8)", 10).unwrap();
        let ones = vec![c(1.0, 0.0); 10];
        assert_eq!(p.act(&ones).unwrap(), ones);
    }

    #[test]
    fn act_is_a_homomorphism_and_unitary() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..10 {
            let n = 6;
            // random pair of permutations via sorting random keys
            let rand_perm = |rng: &mut SplitMix64| {
                let mut idx: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    let j = rng.next_index(i + 1);
                    idx.swap(i, j);
                }
                Permutation::from_images(idx).unwrap()
            };
            let s = rand_perm(&mut rng);
            let t = rand_perm(&mut rng);
            // integer-valued entries keep every sum exact, so the unitarity
            // identity holds bitwise
            let v: Vec<C64> = (0..n)
                .map(|_| c((rng.next_index(17) as f64) - 8.0, (rng.next_index(17) as f64) - 8.0))
                .collect();
            let u: Vec<C64> = (0..n)
                .map(|_| c((rng.next_index(17) as f64) - 8.0, (rng.next_index(17) as f64) - 8.0))
                .collect();
            let st = s.compose(&t);
            assert_eq!(st.act(&v).unwrap(), s.act(&t.act(&v).unwrap()).unwrap());
            assert_eq!(
                inner(&s.act(&u).unwrap(), &s.act(&v).unwrap()),
                inner(&u, &v)
            );
            let round_trip = s.inverse().act(&s.act(&v).unwrap()).unwrap();
            assert_eq!(round_trip, v);
        }
    }

    #[test]
    fn petersen_automorphism_witnesses() {
        let g = builtin("petersen", 0).unwrap();
        let s1 = parse_cycles("(1,4,2,5,3)(6,9,7,10,8)", 10).unwrap();
        let s2 = parse_cycles("(3,7)(4,10)(8,9)", 10).unwrap();
        assert!(is_automorphism(&g, &s1).unwrap());
        assert!(is_automorphism(&g, &s2).unwrap());
        assert!(!is_automorphism(&g, &parse_cycles("(1,2)", 10).unwrap()).unwrap());
    }

    #[test]
    fn automorphism_commutes_with_adjacency() {
        // sigma in Aut(G) iff P A = A P, checked over exact integers
        let g = builtin("petersen", 0).unwrap();
        let a = g.adjacency_matrix();
        let to_int = |m: &CMatrix| -> Vec<i64> {
            (0..m.rows())
                .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
                .map(|(i, j)| m.get(i, j).re.round() as i64)
                .collect()
        };
        let am = CMatrix::from_real(10, 10, a.entries()).unwrap();
        for text in ["(1,4,2,5,3)(6,9,7,10,8)", "(3,7)(4,10)(8,9)", "(1,2)", "(2,3)(7,8)"] {
            let sigma = parse_cycles(text, 10).unwrap();
            let p = sigma.matrix();
            let commutes = to_int(&p.mul(&am)) == to_int(&am.mul(&p));
            assert_eq!(commutes, is_automorphism(&g, &sigma).unwrap(), "{text}");
        }
    }

    #[test]
    fn petersen_group_order_120() {
        let g = builtin("petersen", 0).unwrap();
        let aut = automorphism_group(&g, 1_000_000).unwrap();
        assert_eq!(aut.order(), Some(120));
        // closure of the extracted generators reproduces the same element set
        let regen = PermGroup::closure(aut.generators().to_vec(), 1_000_000).unwrap();
        assert_eq!(regen.elements().unwrap(), aut.elements().unwrap());
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(
            automorphism_group(&builtin("complete", 4).unwrap(), 1_000_000)
                .unwrap()
                .order(),
            Some(24)
        );
        let p3 = automorphism_group(&builtin("path", 3).unwrap(), 1_000_000).unwrap();
        assert_eq!(p3.order(), Some(2));
        assert_eq!(p3.generators()[0].to_cycles(), "(1,3)");
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            automorphism_group(&builtin("complete", 4).unwrap(), 10),
            Err(PermError::CapExceeded(10))
        ));
        let five_cycle = parse_cycles("(1,2,3,4,5)", 5).unwrap();
        assert!(matches!(
            PermGroup::closure(vec![five_cycle], 3),
            Err(PermError::CapExceeded(3))
        ));
    }

    #[test]
    fn closure_examples() {
        let g = builtin("petersen", 0).unwrap();
        let s1 = parse_cycles("(1,4,2,5,3)(6,9,7,10,8)", 10).unwrap();
        let s2 = parse_cycles("(3,7)(4,10)(8,9)", 10).unwrap();
        let grp = PermGroup::closure(vec![s1, s2], 1_000_000).unwrap();
        assert_eq!(grp.order(), Some(120));
        assert_eq!(
            grp.elements().unwrap(),
            automorphism_group(&g, 1_000_000).unwrap().elements().unwrap()
        );

        assert_eq!(
            PermGroup::closure(vec![Permutation::identity(4)], 100)
                .unwrap()
                .order(),
            Some(1)
        );
        let c5 = parse_cycles("(1,2,3,4,5)", 5).unwrap();
        assert_eq!(PermGroup::closure(vec![c5], 100).unwrap().order(), Some(5));
    }

    #[test]
    fn orbit_stabilizer_petersen_base() {
        let g = builtin("petersen", 0).unwrap();
        // base [1, 6, 2] in 1-based labels
        let os = orbit_stabilizer_order(&g, &[0, 5, 1]).unwrap();
        let orbit_lens: Vec<usize> = os.factors.iter().map(|f| f.orbit_len).collect();
        assert_eq!(orbit_lens, vec![10, 3, 2]);
        assert_eq!(os.final_order, 2);
        assert_eq!(os.order, 120);
    }

    #[test]
    fn orbit_stabilizer_small_graphs() {
        let os = orbit_stabilizer_order(&builtin("complete", 3).unwrap(), &[0]).unwrap();
        assert_eq!(os.factors[0].orbit_len, 3);
        assert_eq!(os.final_order, 2);
        assert_eq!(os.order, 6);

        // path center is fixed, endpoints swap
        let os = orbit_stabilizer_order(&builtin("path", 3).unwrap(), &[1]).unwrap();
        assert_eq!(os.factors[0].orbit_len, 1);
        assert_eq!(os.order, 2);
    }

    #[test]
    fn orbit_stabilizer_matches_enumeration_orders() {
        for (name, k) in [("petersen", 0), ("cycle", 5), ("complete", 4), ("path", 4)] {
            let g = builtin(name, k).unwrap();
            let aut = automorphism_group(&g, 1_000_000).unwrap();
            let base = default_base(&aut).unwrap();
            let os = orbit_stabilizer_chain(&aut, &base).unwrap();
            assert_eq!(Some(os.order), aut.order(), "{name}");
            assert_eq!(os.final_order, 1, "{name} chain runs to triviality");
        }
    }

    #[test]
    fn line_stabilizer_of_fixed_and_zero_vectors() {
        let g = builtin("petersen", 0).unwrap();
        let aut = automorphism_group(&g, 1_000_000).unwrap();
        let ones = vec![c(1.0, 0.0); 10];
        let (stab, index) = line_stabilizer(&aut, &ones, 1e-8).unwrap();
        assert_eq!(stab.order(), Some(120));
        assert_eq!(index, 1);
        let (stab, index) = line_stabilizer(&aut, &[c(0.0, 0.0); 10], 1e-8).unwrap();
        assert_eq!(stab.order(), Some(120));
        assert_eq!(index, 1);
    }

    #[test]
    fn line_stabilizer_index_divides_group_order() {
        let g = builtin("petersen", 0).unwrap();
        let aut = automorphism_group(&g, 1_000_000).unwrap();
        let mut v = vec![c(0.0, 0.0); 10];
        v[0] = c(1.0, 0.0);
        v[1] = c(-1.0, 0.0);
        v[2] = c(0.3, 0.0);
        let (stab, index) = line_stabilizer(&aut, &v, 1e-8).unwrap();
        assert_eq!(index * stab.order().unwrap(), 120);
    }

    #[test]
    fn line_stabilizer_requires_enumeration() {
        let gens = vec![parse_cycles("(1,2)", 3).unwrap()];
        let group = PermGroup::from_generators(gens);
        assert!(matches!(
            line_stabilizer(&group, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)], 1e-8),
            Err(PermError::NotEnumerated)
        ));
    }
}
