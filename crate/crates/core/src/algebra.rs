//! Finite-dimensional algebras given by structure constants, and the
//! `m`-replicated algebra `A^(m)` of a path algebra `A = kQ`.
//!
//! `A^(m)` has layers `0..=m`. Layer `q` holds a copy `A_q` of `A`; for
//! `q ≥ 1` it also holds a copy `Q_q` of the dual bimodule `DA`, sitting
//! between the idempotents of layer `q` (on the left) and layer `q - 1` (on
//! the right). The bimodule structure is `(a·φ·b)(x) = φ(b·x·a)`, which in
//! the dual path basis reads `u·p* = w*` if `p = w·u` and `p*·v = w*` if
//! `p = v·w`. Products of two dual elements vanish.
//!
//! With right modules this puts the `A`-projectives in layer 0 and makes
//! `P_(i,q)` projective-injective for `1 ≤ q ≤ m`, with
//! `dim P_(i,q) = #(paths from i) + #(paths to i)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{add_mod, check_prime, mul_mod, FpMatrix, Subspace};
use crate::quiver::{Path, Quiver};

/// Sparse algebra element: `(basis index, coefficient)` pairs.
pub type AlgElem = Vec<(usize, u32)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ElementKind {
    Path,
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BasisElement {
    pub kind: ElementKind,
    pub path: Path,
    pub layer: usize,
}

impl BasisElement {
    fn new(kind: ElementKind, path: Path, layer: usize) -> Self {
        debug_assert!(kind == ElementKind::Path || layer >= 1);
        BasisElement { kind, path, layer }
    }
}

/// Provenance of an algebra built by [`replicated_algebra`].
#[derive(Clone, Debug)]
pub struct ReplicatedInfo {
    pub quiver: Arc<Quiver>,
    pub level: usize,
}

/// Algebra with an explicit basis and multiplication table.
///
/// Every basis element `b` is homogeneous: `b = e_s · b · e_t` for vertex
/// idempotents `e_s`, `e_t`, recorded as `left(b)` and `right(b)`.
pub struct ScAlgebra {
    id: String,
    prime: u32,
    basis: Vec<BasisElement>,
    table: Vec<AlgElem>,
    left: Vec<usize>,
    right: Vec<usize>,
    vertices: Vec<usize>,
    vertex_layer: Vec<usize>,
    vertex_label: Vec<usize>,
    radical: Vec<usize>,
    generators: Vec<usize>,
    replicated: Option<ReplicatedInfo>,
}

impl fmt::Debug for ScAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScAlgebra({}, dim {})", self.id, self.dim())
    }
}

impl ScAlgebra {
    /// Builds an algebra from a multiplication table `table[i * dim + j]`.
    ///
    /// `vertices` lists the basis indices of the primitive vertex idempotents
    /// and `radical` the basis indices spanning the radical.
    #[allow(clippy::too_many_arguments)]
    pub fn from_table(
        id: impl Into<String>,
        prime: u32,
        basis: Vec<BasisElement>,
        table: Vec<AlgElem>,
        vertices: Vec<usize>,
        vertex_layer: Vec<usize>,
        vertex_label: Vec<usize>,
        radical: Vec<usize>,
    ) -> Result<Self> {
        check_prime(prime)?;
        let dim = basis.len();
        if table.len() != dim * dim {
            return Err(Error::Shape(format!(
                "table of size {} for dimension {dim}",
                table.len()
            )));
        }
        let mut alg = ScAlgebra {
            id: id.into(),
            prime,
            basis,
            table,
            left: vec![usize::MAX; dim],
            right: vec![usize::MAX; dim],
            vertices,
            vertex_layer,
            vertex_label,
            radical,
            generators: Vec::new(),
            replicated: None,
        };
        for b in 0..dim {
            for (v, &e) in alg.vertices.iter().enumerate() {
                let prod = alg.mul(e, b);
                if prod == [(b, 1)] {
                    alg.left[b] = v;
                } else if !prod.is_empty() {
                    return Err(Error::Internal(format!(
                        "basis element {b} is not left-homogeneous"
                    )));
                }
                let prod = alg.mul(b, e);
                if prod == [(b, 1)] {
                    alg.right[b] = v;
                } else if !prod.is_empty() {
                    return Err(Error::Internal(format!(
                        "basis element {b} is not right-homogeneous"
                    )));
                }
            }
            if alg.left[b] == usize::MAX || alg.right[b] == usize::MAX {
                return Err(Error::Internal(format!(
                    "vertex idempotents do not sum to 1 on basis element {b}"
                )));
            }
        }
        alg.generators = alg.compute_generators();
        Ok(alg)
    }

    fn compute_generators(&self) -> Vec<usize> {
        let dim = self.dim();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for &r in &self.radical {
            for &s in &self.radical {
                let prod = self.mul(r, s);
                if !prod.is_empty() {
                    let mut v = vec![0u32; dim];
                    for &(k, c) in prod {
                        v[k] = c;
                    }
                    rows.push(v);
                }
            }
        }
        let mut span = Subspace::span(&FpMatrix::from_row_slices(&rows, dim, self.prime));
        let mut gens = Vec::new();
        for &r in &self.radical {
            let mut e = vec![0u32; dim];
            e[r] = 1;
            if !span.contains(&e) {
                gens.push(r);
                span = span.sum(&Subspace::span(&FpMatrix::from_row_slices(
                    &[e],
                    dim,
                    self.prime,
                )));
            }
        }
        gens
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Product of basis elements `i · j`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.table[i * self.basis.len() + j]
    }

    /// Product of sparse elements.
    pub fn mul_elem(&self, x: &[(usize, u32)], y: &[(usize, u32)]) -> AlgElem {
        let mut acc: HashMap<usize, u32> = HashMap::new();
        for &(i, a) in x {
            for &(j, b) in y {
                for &(k, c) in self.mul(i, j) {
                    let e = acc.entry(k).or_insert(0);
                    *e = add_mod(
                        *e,
                        mul_mod(mul_mod(a, b, self.prime), c, self.prime),
                        self.prime,
                    );
                }
            }
        }
        let mut out: AlgElem = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        out.sort_unstable();
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Basis index of the idempotent of vertex `v`.
    pub fn vertex_idempotent(&self, v: usize) -> usize {
        self.vertices[v]
    }

    pub fn left(&self, b: usize) -> usize {
        self.left[b]
    }

    pub fn right(&self, b: usize) -> usize {
        self.right[b]
    }

    pub fn radical(&self) -> &[usize] {
        &self.radical
    }

    /// Radical elements spanning a complement of `rad²` in `rad`.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn vertex_layer(&self, v: usize) -> usize {
        self.vertex_layer[v]
    }

    /// Quiver vertex underlying algebra vertex `v`.
    pub fn vertex_label(&self, v: usize) -> usize {
        self.vertex_label[v]
    }

    pub fn replicated(&self) -> Option<&ReplicatedInfo> {
        self.replicated.as_ref()
    }

    pub fn level(&self) -> Option<usize> {
        self.replicated.as_ref().map(|r| r.level)
    }

    /// Number of simple modules.
    pub fn grothendieck_rank(&self) -> usize {
        self.vertices.len()
    }

    /// Highest layer index among the vertices.
    pub fn top_layer(&self) -> usize {
        self.vertex_layer.iter().copied().max().unwrap_or(0)
    }

    /// Basis elements `b` with `left(b) = s` and `right(b) = t`.
    pub fn between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.left[b] == s && self.right[b] == t)
            .collect()
    }

    /// Exhaustive associativity check over all basis triples.
    pub fn check_associativity(&self) -> Result<()> {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.mul(i, j).to_vec();
                for k in 0..dim {
                    let lhs = self.mul_elem(&ij, &[(k, 1)]);
                    let jk = self.mul(j, k).to_vec();
                    let rhs = self.mul_elem(&[(i, 1)], &jk);
                    if lhs != rhs {
                        return Err(Error::Internal(format!("({i}·{j})·{k} != {i}·({j}·{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        let dim = self.dim();
        let p = self.prime;
        let to_rows = |idx: &[usize]| {
            let rows: Vec<Vec<u32>> = idx
                .iter()
                .map(|&b| {
                    let mut v = vec![0u32; dim];
                    v[b] = 1;
                    v
                })
                .collect();
            FpMatrix::from_row_slices(&rows, dim, p)
        };
        let mut power = Subspace::span(&to_rows(&self.radical));
        let mut len = 1;
        while power.dim() > 0 {
            let mut rows = Vec::new();
            for i in 0..power.dim() {
                let x: AlgElem = power
                    .basis()
                    .row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (k, c))
                    .collect();
                for &r in &self.radical {
                    let prod = self.mul_elem(&x, &[(r, 1)]);
                    let mut v = vec![0u32; dim];
                    for (k, c) in prod {
                        v[k] = c;
                    }
                    rows.push(v);
                }
            }
            power = Subspace::span(&FpMatrix::from_row_slices(&rows, dim, p));
            len += 1;
        }
        len
    }

    /// The opposite algebra: same basis, `x ∘ y = y · x`.
    pub fn opposite(&self) -> ScAlgebra {
        let dim = self.dim();
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                table[i * dim + j] = self.mul(j, i).to_vec();
            }
        }
        ScAlgebra {
            id: format!("{}^op", self.id),
            prime: self.prime,
            basis: self.basis.clone(),
            table,
            left: self.right.clone(),
            right: self.left.clone(),
            vertices: self.vertices.clone(),
            vertex_layer: self.vertex_layer.clone(),
            vertex_label: self.vertex_label.clone(),
            radical: self.radical.clone(),
            generators: self.generators.clone(),
            replicated: None,
        }
    }
}

/// `u · p* · v` in `DA`, as the path `w` with result `w*`, or `None` for zero.
pub fn dual_action(u: &Path, p: &Path, v: &Path) -> Option<Path> {
    p.strip_suffix(u)?.strip_prefix(v)
}

fn product(x: &BasisElement, y: &BasisElement) -> Option<BasisElement> {
    use ElementKind::*;
    match (x.kind, y.kind) {
        (Path, Path) => (x.layer == y.layer)
            .then(|| x.path.concat(&y.path))
            .flatten()
            .map(|p| BasisElement::new(Path, p, x.layer)),
        (Path, Dual) => (x.layer == y.layer)
            .then(|| y.path.strip_suffix(&x.path))
            .flatten()
            .map(|w| BasisElement::new(Dual, w, y.layer)),
        (Dual, Path) => (y.layer + 1 == x.layer)
            .then(|| x.path.strip_prefix(&y.path))
            .flatten()
            .map(|w| BasisElement::new(Dual, w, x.layer)),
        (Dual, Dual) => None,
    }
}

/// Builds `A^(m)` for the path algebra of `quiver` over `F_prime`.
pub fn replicated_algebra(quiver: &Quiver, m: usize, prime: u32) -> Result<Arc<ScAlgebra>> {
    replicated_algebra_arc(Arc::new(quiver.clone()), m, prime)
}

pub(crate) fn replicated_algebra_arc(
    quiver: Arc<Quiver>,
    m: usize,
    prime: u32,
) -> Result<Arc<ScAlgebra>> {
    check_prime(prime)?;
    let n = quiver.vertex_count();
    let paths = quiver.enumerate_paths();
    let mut basis = Vec::with_capacity((2 * m + 1) * paths.len());
    for q in 0..=m {
        basis.extend(
            paths
                .iter()
                .map(|p| BasisElement::new(ElementKind::Path, p.clone(), q)),
        );
        if q >= 1 {
            basis.extend(
                paths
                    .iter()
                    .map(|p| BasisElement::new(ElementKind::Dual, p.clone(), q)),
            );
        }
    }
    let index: HashMap<&BasisElement, usize> =
        basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let dim = basis.len();
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            if let Some(prod) = product(&basis[i], &basis[j]) {
                table[i * dim + j] = vec![(index[&prod], 1)];
            }
        }
    }
    let mut vertices = Vec::with_capacity(n * (m + 1));
    let mut vertex_layer = Vec::new();
    let mut vertex_label = Vec::new();
    for q in 0..=m {
        for v in 0..n {
            vertices.push(index[&BasisElement::new(ElementKind::Path, Path::trivial(v), q)]);
            vertex_layer.push(q);
            vertex_label.push(v);
        }
    }
    let radical = (0..dim)
        .filter(|&b| basis[b].kind == ElementKind::Dual || !basis[b].path.is_trivial())
        .collect();
    let id = format!("{}^({m})@{prime}", quiver.name());
    let mut alg = ScAlgebra::from_table(
        id,
        prime,
        basis,
        table,
        vertices,
        vertex_layer,
        vertex_label,
        radical,
    )?;
    alg.replicated = Some(ReplicatedInfo { quiver, level: m });
    Ok(Arc::new(alg))
}

/// Algebra vertex index of quiver vertex `v` in layer `q`.
pub fn vertex_index(alg: &ScAlgebra, v: usize, q: usize) -> usize {
    let n = alg
        .replicated()
        .map(|r| r.quiver.vertex_count())
        .expect("replicated algebra");
    q * n + v
}

/// Realizes `small` (= `A^(m)`) as the quotient of `big` (= `A^(m')`) by the
/// idempotents outside layers `offset..=offset + m`, shifting layers by
/// `offset`. With `offset = 0` this is the truncation `A^(m') → A^(m)`.
#[derive(Clone, Debug)]
pub struct LayerEmbedding {
    small: Arc<ScAlgebra>,
    big: Arc<ScAlgebra>,
    offset: usize,
    basis_map: Vec<usize>,
    vertex_map: Vec<usize>,
    killed: Vec<usize>,
}

impl LayerEmbedding {
    pub fn new(small: Arc<ScAlgebra>, big: Arc<ScAlgebra>, offset: usize) -> Result<Self> {
        let (Some(si), Some(bi)) = (small.replicated(), big.replicated()) else {
            return Err(Error::Precondition(
                "layer embeddings need replicated algebras".into(),
            ));
        };
        if si.quiver != bi.quiver || small.prime() != big.prime() {
            return Err(Error::AlgebraMismatch(small.id().into(), big.id().into()));
        }
        if offset + si.level > bi.level {
            return Err(Error::BadEmbedding(si.level, bi.level));
        }
        let index: HashMap<&BasisElement, usize> = big
            .basis()
            .iter()
            .enumerate()
            .map(|(i, b)| (b, i))
            .collect();
        let basis_map = small
            .basis()
            .iter()
            .map(|b| {
                index[&BasisElement {
                    kind: b.kind,
                    path: b.path.clone(),
                    layer: b.layer + offset,
                }]
            })
            .collect();
        let n = si.quiver.vertex_count();
        let vertex_map = (0..small.vertex_count()).map(|v| v + offset * n).collect();
        let killed = (0..big.vertex_count())
            .filter(|&v| {
                let l = big.vertex_layer(v);
                l < offset || l > offset + si.level
            })
            .collect();
        Ok(LayerEmbedding {
            small,
            big,
            offset,
            basis_map,
            vertex_map,
            killed,
        })
    }

    pub fn small(&self) -> &Arc<ScAlgebra> {
        &self.small
    }

    pub fn big(&self) -> &Arc<ScAlgebra> {
        &self.big
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn basis_map(&self) -> &[usize] {
        &self.basis_map
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// Big-algebra vertices whose idempotents generate the kernel ideal.
    pub fn killed_vertices(&self) -> &[usize] {
        &self.killed
    }
}

/// `A^(m) → A^(m')` for `m' > m`, or the identity when `m' = m`.
pub fn truncation_embedding(alg: &Arc<ScAlgebra>, m_big: usize) -> Result<LayerEmbedding> {
    let info = alg
        .replicated()
        .ok_or_else(|| Error::Precondition("not a replicated algebra".into()))?;
    if m_big < info.level {
        return Err(Error::BadEmbedding(info.level, m_big));
    }
    if m_big == info.level {
        return LayerEmbedding::new(alg.clone(), alg.clone(), 0);
    }
    let big = replicated_algebra_arc(info.quiver.clone(), m_big, alg.prime())?;
    LayerEmbedding::new(alg.clone(), big, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_PRIME;

    fn a3() -> Quiver {
        Quiver::linear_a(3)
    }

    #[test]
    fn dimensions_of_replicated_algebras() {
        for (m, dim) in [(0, 6), (1, 18), (2, 30)] {
            let alg = replicated_algebra(&a3(), m, DEFAULT_PRIME).unwrap();
            assert_eq!(alg.dim(), dim);
            assert_eq!(alg.grothendieck_rank(), 3 * (m + 1));
        }
        let point = Quiver::new("A1", 1, vec![]).unwrap();
        assert_eq!(
            replicated_algebra(&point, 5, DEFAULT_PRIME)
                .unwrap()
                .grothendieck_rank(),
            6
        );
    }

    #[test]
    fn associativity_and_dual_products() {
        for q in [a3(), Quiver::kronecker(), Quiver::d4()] {
            for m in 0..=2 {
                let alg = replicated_algebra(&q, m, DEFAULT_PRIME).unwrap();
                assert_eq!(alg.dim(), (2 * m + 1) * q.enumerate_paths().len());
                alg.check_associativity().unwrap();
                for (i, x) in alg.basis().iter().enumerate() {
                    for (j, y) in alg.basis().iter().enumerate() {
                        if x.kind == ElementKind::Dual && y.kind == ElementKind::Dual {
                            assert!(alg.mul(i, j).is_empty());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_action_examples() {
        let q = a3();
        let p = |arrows: Vec<usize>, s: usize, t: usize| Path {
            source: s,
            target: t,
            arrows,
        };
        let (a, b, ab) = (p(vec![0], 0, 1), p(vec![1], 1, 2), p(vec![0, 1], 0, 2));
        assert_eq!(dual_action(&b, &ab, &Path::trivial(0)), Some(a.clone()));
        assert_eq!(dual_action(&a, &ab, &a), None);
        // e_i · p* · e_j = p* iff p ∈ e_j A e_i
        for path in q.enumerate_paths() {
            for i in 0..3 {
                for j in 0..3 {
                    let r = dual_action(&Path::trivial(i), &path, &Path::trivial(j));
                    let expect = path.source == j && path.target == i;
                    assert_eq!(r.is_some(), expect);
                }
            }
        }
    }

    /// Brute force: `(u·p*·v)(x) = p*(v·x·u)` for every path `x`.
    #[test]
    fn dual_action_matches_functional_evaluation() {
        let q = a3();
        let paths = q.enumerate_paths();
        for u in &paths {
            for pp in &paths {
                for v in &paths {
                    let brute: Vec<&Path> = paths
                        .iter()
                        .filter(|x| v.concat(x).and_then(|vx| vx.concat(u)).as_ref() == Some(pp))
                        .collect();
                    let got = dual_action(u, pp, v);
                    match got {
                        Some(w) => assert_eq!(brute, vec![&w]),
                        None => assert!(brute.is_empty()),
                    }
                }
            }
        }
    }

    #[test]
    fn generators_and_loewy_length() {
        let alg = replicated_algebra(&a3(), 1, DEFAULT_PRIME).unwrap();
        // arrows a, b in both layers plus (ab)* in layer 1
        assert_eq!(alg.generators().len(), 5);
        let a = replicated_algebra(&a3(), 0, DEFAULT_PRIME).unwrap();
        assert_eq!(a.loewy_length(), 3);
    }

    #[test]
    fn truncation_embedding_identity_and_error() {
        let alg = replicated_algebra(&a3(), 1, DEFAULT_PRIME).unwrap();
        let id = truncation_embedding(&alg, 1).unwrap();
        assert_eq!(id.basis_map(), (0..18).collect::<Vec<_>>());
        assert!(matches!(
            truncation_embedding(&alg, 0),
            Err(Error::BadEmbedding(1, 0))
        ));
        let up = truncation_embedding(&alg, 2).unwrap();
        assert_eq!(up.big().dim(), 30);
        assert_eq!(up.killed_vertices(), &[6, 7, 8]);
    }
}
