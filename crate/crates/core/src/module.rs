//! Finite-dimensional right modules over an [`ScAlgebra`] and their morphisms.
//!
//! Modules are stored vertex-graded: the basis is a union of bases of the
//! spaces `M·e_v`, and the action of a basis element `b = e_s·b·e_t` is kept
//! as the block `M·e_s → M·e_t`. Morphisms are block-diagonal.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{LayerEmbedding, ScAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, Subspace};

struct ModuleData {
    alg: Arc<ScAlgebra>,
    dims: Vec<usize>,
    offsets: Vec<usize>,
    blocks: Vec<FpMatrix>,
}

/// A right module, cheap to clone.
#[derive(Clone)]
pub struct FDModule(Arc<ModuleData>);

impl fmt::Debug for FDModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FDModule(dim {} over {}, dims {:?})",
            self.dim(),
            self.0.alg.id(),
            self.0.dims
        )
    }
}

fn offsets_of(dims: &[usize]) -> Vec<usize> {
    let mut off = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    off.push(0);
    for &d in dims {
        acc += d;
        off.push(acc);
    }
    off
}

pub(crate) fn same_algebra(a: &ScAlgebra, b: &ScAlgebra) -> Result<()> {
    if std::ptr::eq(a, b) || a.id() == b.id() {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(a.id().into(), b.id().into()))
    }
}

impl FDModule {
    /// Builds a graded module from its action blocks (unchecked shapes are rejected).
    pub fn from_blocks(
        alg: Arc<ScAlgebra>,
        dims: Vec<usize>,
        blocks: Vec<FpMatrix>,
    ) -> Result<Self> {
        if dims.len() != alg.vertex_count() || blocks.len() != alg.dim() {
            return Err(Error::InvalidModule(
                "wrong number of vertex dimensions or action blocks".into(),
            ));
        }
        for (b, blk) in blocks.iter().enumerate() {
            let (s, t) = (alg.left(b), alg.right(b));
            if blk.rows() != dims[s] || blk.cols() != dims[t] {
                return Err(Error::InvalidModule(format!(
                    "block {b} has shape {}x{}",
                    blk.rows(),
                    blk.cols()
                )));
            }
        }
        Ok(Self::from_blocks_unchecked(alg, dims, blocks))
    }

    pub(crate) fn from_blocks_unchecked(
        alg: Arc<ScAlgebra>,
        dims: Vec<usize>,
        blocks: Vec<FpMatrix>,
    ) -> Self {
        let offsets = offsets_of(&dims);
        FDModule(Arc::new(ModuleData {
            alg,
            dims,
            offsets,
            blocks,
        }))
    }

    /// Builds a module from full `d×d` action matrices in an arbitrary basis,
    /// checking the module axioms and regrading the basis by vertices.
    pub fn from_actions(alg: Arc<ScAlgebra>, d: usize, actions: &[FpMatrix]) -> Result<Self> {
        let p = alg.prime();
        if actions.len() != alg.dim() || actions.iter().any(|a| a.rows() != d || a.cols() != d) {
            return Err(Error::InvalidModule(
                "need one d×d matrix per basis element".into(),
            ));
        }
        let mut total = FpMatrix::zeros(d, d, p);
        for v in 0..alg.vertex_count() {
            total = total.add(&actions[alg.vertex_idempotent(v)]);
        }
        if total != FpMatrix::identity(d, p) {
            return Err(Error::InvalidModule(
                "vertex idempotents do not act as the identity".into(),
            ));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let mut rhs = FpMatrix::zeros(d, d, p);
                for &(k, c) in alg.mul(i, j) {
                    rhs.add_scaled(&actions[k], c);
                }
                if actions[i].mul(&actions[j]) != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative on ({i}, {j})"
                    )));
                }
            }
        }
        let mut change = FpMatrix::zeros(0, d, p);
        let mut dims = Vec::with_capacity(alg.vertex_count());
        for v in 0..alg.vertex_count() {
            let sub = Subspace::span(&actions[alg.vertex_idempotent(v)]);
            dims.push(sub.dim());
            change = change.vstack(sub.basis());
        }
        let inv = change
            .inverse()
            .ok_or_else(|| Error::InvalidModule("idempotent images do not span".into()))?;
        let offsets = offsets_of(&dims);
        let blocks = (0..alg.dim())
            .map(|b| {
                let full = change.mul(&actions[b]).mul(&inv);
                let (s, t) = (alg.left(b), alg.right(b));
                full.block(offsets[s], offsets[t], dims[s], dims[t])
            })
            .collect();
        Ok(FDModule(Arc::new(ModuleData {
            alg,
            dims,
            offsets,
            blocks,
        })))
    }

    pub fn zero(alg: Arc<ScAlgebra>) -> Self {
        let dims = vec![0; alg.vertex_count()];
        let p = alg.prime();
        let blocks = (0..alg.dim()).map(|_| FpMatrix::zeros(0, 0, p)).collect();
        Self::from_blocks_unchecked(alg, dims, blocks)
    }

    pub fn algebra(&self) -> &Arc<ScAlgebra> {
        &self.0.alg
    }

    pub fn prime(&self) -> u32 {
        self.0.alg.prime()
    }

    pub fn dim(&self) -> usize {
        *self.0.offsets.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Dimension vector (`dim M·e_v` per vertex).
    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn vertex_dim(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn offset(&self, v: usize) -> usize {
        self.0.offsets[v]
    }

    /// Action block of basis element `b`: `M·e_left(b) → M·e_right(b)`.
    pub fn block(&self, b: usize) -> &FpMatrix {
        &self.0.blocks[b]
    }

    /// Action of a homogeneous element with left vertex `s` and right vertex `t`.
    pub fn act(&self, x: &[(usize, u32)], s: usize, t: usize) -> FpMatrix {
        let mut out = FpMatrix::zeros(self.0.dims[s], self.0.dims[t], self.prime());
        for &(b, c) in x {
            debug_assert_eq!((self.0.alg.left(b), self.0.alg.right(b)), (s, t));
            out.add_scaled(&self.0.blocks[b], c);
        }
        out
    }

    /// Full `d×d` action matrix of basis element `b`.
    pub fn action_matrix(&self, b: usize) -> FpMatrix {
        let alg = &self.0.alg;
        let mut full = FpMatrix::zeros(self.dim(), self.dim(), self.prime());
        full.set_block(
            self.0.offsets[alg.left(b)],
            self.0.offsets[alg.right(b)],
            &self.0.blocks[b],
        );
        full
    }

    /// Layers `q` with `M·e_(i,q) ≠ 0` for some `i`, ascending.
    pub fn support_layers(&self) -> Vec<usize> {
        let alg = &self.0.alg;
        let mut layers: Vec<usize> = (0..alg.vertex_count())
            .filter(|&v| self.0.dims[v] > 0)
            .map(|v| alg.vertex_layer(v))
            .collect();
        layers.sort_unstable();
        layers.dedup();
        layers
    }

    /// Checks multiplicativity on all basis pairs and identity idempotents.
    pub fn validate(&self) -> Result<()> {
        let alg = &self.0.alg;
        let p = self.prime();
        for v in 0..alg.vertex_count() {
            if self.0.blocks[alg.vertex_idempotent(v)] != FpMatrix::identity(self.0.dims[v], p) {
                return Err(Error::InvalidModule(format!(
                    "idempotent of vertex {v} is not the identity"
                )));
            }
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if alg.right(i) != alg.left(j) {
                    continue;
                }
                let lhs = self.0.blocks[i].mul(&self.0.blocks[j]);
                let rhs = self.act(alg.mul(i, j), alg.left(i), alg.right(j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative on ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &FDModule) -> Result<FDModule> {
        same_algebra(&self.0.alg, &other.0.alg)?;
        let alg = self.0.alg.clone();
        let dims: Vec<usize> = self
            .0
            .dims
            .iter()
            .zip(&other.0.dims)
            .map(|(a, b)| a + b)
            .collect();
        let blocks = self
            .0
            .blocks
            .iter()
            .zip(&other.0.blocks)
            .map(|(x, y)| x.block_diag(y))
            .collect();
        Ok(Self::from_blocks_unchecked(alg, dims, blocks))
    }

    pub fn direct_sum_all(alg: &Arc<ScAlgebra>, parts: &[FDModule]) -> Result<FDModule> {
        parts
            .iter()
            .try_fold(FDModule::zero(alg.clone()), |acc, m| acc.direct_sum(m))
    }

    /// Graded submodule spanned by the given per-vertex subspaces.
    pub fn submodule(&self, spaces: &[Subspace]) -> Result<(FDModule, ModMorphism)> {
        let alg = self.0.alg.clone();
        let p = self.prime();
        let dims: Vec<usize> = spaces.iter().map(|s| s.dim()).collect();
        let mut blocks = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let (s, t) = (alg.left(b), alg.right(b));
            let images = spaces[s].basis().mul(&self.0.blocks[b]);
            let mut blk = FpMatrix::zeros(dims[s], dims[t], p);
            for r in 0..images.rows() {
                let c = spaces[t].coords(images.row(r)).ok_or_else(|| {
                    Error::Internal("subspace is not closed under the action".into())
                })?;
                blk.row_mut(r).copy_from_slice(&c);
            }
            blocks.push(blk);
        }
        let sub = Self::from_blocks_unchecked(alg, dims, blocks);
        let incl = ModMorphism::from_parts(
            sub.clone(),
            self.clone(),
            spaces.iter().map(|s| s.basis().clone()).collect(),
        );
        Ok((sub, incl))
    }

    /// Quotient by a graded submodule, with the projection.
    pub fn quotient(&self, spaces: &[Subspace]) -> Result<(FDModule, ModMorphism)> {
        let alg = self.0.alg.clone();
        let p = self.prime();
        let comps: Vec<Vec<usize>> = spaces.iter().map(|s| s.complement_indices()).collect();
        let dims: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        // projection of a vector of M·e_v onto the chosen complement coordinates
        let project = |v: usize, w: &[u32]| -> Vec<u32> {
            let (_, res) = spaces[v].decompose(w);
            comps[v].iter().map(|&j| res[j]).collect()
        };
        let mut blocks = Vec::with_capacity(alg.dim());
        for b in 0..alg.dim() {
            let (s, t) = (alg.left(b), alg.right(b));
            let blk_full = &self.0.blocks[b];
            let mut blk = FpMatrix::zeros(dims[s], dims[t], p);
            for (r, &j) in comps[s].iter().enumerate() {
                let row = project(t, blk_full.row(j));
                blk.row_mut(r).copy_from_slice(&row);
            }
            blocks.push(blk);
        }
        for (b, blk_full) in self.0.blocks.iter().enumerate() {
            let (s, t) = (alg.left(b), alg.right(b));
            let images = spaces[s].basis().mul(blk_full);
            for r in 0..images.rows() {
                if !spaces[t].contains(images.row(r)) {
                    return Err(Error::Internal("quotient by a non-submodule".into()));
                }
            }
        }
        let quot = Self::from_blocks_unchecked(alg.clone(), dims.clone(), blocks);
        let proj_blocks = (0..alg.vertex_count())
            .map(|v| {
                let n = self.0.dims[v];
                let mut m = FpMatrix::zeros(n, dims[v], p);
                for i in 0..n {
                    let mut e = vec![0u32; n];
                    e[i] = 1;
                    m.row_mut(i).copy_from_slice(&project(v, &e));
                }
                m
            })
            .collect();
        let proj = ModMorphism::from_parts(self.clone(), quot.clone(), proj_blocks);
        Ok((quot, proj))
    }

    /// Re-expresses the module in a basis changed by invertible per-vertex matrices
    /// (`new basis rows = change_v · old basis`).
    pub fn conjugate(&self, change: &[FpMatrix]) -> Result<FDModule> {
        let alg = self.0.alg.clone();
        let inv: Vec<FpMatrix> = change
            .iter()
            .map(|c| {
                c.inverse()
                    .ok_or_else(|| Error::InvalidModule("basis change is singular".into()))
            })
            .collect::<Result<_>>()?;
        let blocks = (0..alg.dim())
            .map(|b| {
                change[alg.left(b)]
                    .mul(&self.0.blocks[b])
                    .mul(&inv[alg.right(b)])
            })
            .collect();
        Ok(Self::from_blocks_unchecked(
            alg,
            self.0.dims.clone(),
            blocks,
        ))
    }

    /// The dual module `DM` over the opposite algebra.
    pub fn dual(&self, opposite: Arc<ScAlgebra>) -> Result<FDModule> {
        if opposite.dim() != self.0.alg.dim()
            || opposite.vertex_count() != self.0.alg.vertex_count()
        {
            return Err(Error::AlgebraMismatch(
                self.0.alg.id().into(),
                opposite.id().into(),
            ));
        }
        let blocks = self.0.blocks.iter().map(|b| b.transpose()).collect();
        FDModule::from_blocks(opposite, self.0.dims.clone(), blocks)
    }

    pub fn to_json(&self) -> ModuleJson {
        let alg = &self.0.alg;
        ModuleJson {
            dim: self.dim(),
            algebra: alg.id().to_string(),
            prime: self.prime(),
            vertex_dims: self.0.dims.clone(),
            actions: (0..alg.dim())
                .map(|b| self.action_matrix(b).to_rows())
                .collect(),
        }
    }

    pub fn from_json(alg: Arc<ScAlgebra>, json: &ModuleJson) -> Result<FDModule> {
        same_algebra_id(alg.id(), &json.algebra)?;
        let p = alg.prime();
        let actions: Vec<FpMatrix> = json
            .actions
            .iter()
            .map(|rows| FpMatrix::from_vec(json.dim, json.dim, p, rows.concat()))
            .collect::<Result<_>>()?;
        FDModule::from_actions(alg, json.dim, &actions)
    }
}

fn same_algebra_id(a: &str, b: &str) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(a.into(), b.into()))
    }
}

/// JSON form of a module: dense action matrices mod `p`, one per basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub dim: usize,
    pub algebra: String,
    pub prime: u32,
    pub vertex_dims: Vec<usize>,
    pub actions: Vec<Vec<Vec<u32>>>,
}

/// A module homomorphism, stored as one block per vertex.
#[derive(Clone)]
pub struct ModMorphism {
    source: FDModule,
    target: FDModule,
    blocks: Vec<FpMatrix>,
}

impl fmt::Debug for ModMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModMorphism({} -> {}, rank {})",
            self.source.dim(),
            self.target.dim(),
            self.rank()
        )
    }
}

impl ModMorphism {
    pub(crate) fn from_parts(source: FDModule, target: FDModule, blocks: Vec<FpMatrix>) -> Self {
        debug_assert_eq!(blocks.len(), source.algebra().vertex_count());
        ModMorphism {
            source,
            target,
            blocks,
        }
    }

    /// Checks shapes and the intertwining relation `ρ_M(b)·F = F·ρ_N(b)`.
    pub fn new(source: FDModule, target: FDModule, blocks: Vec<FpMatrix>) -> Result<Self> {
        same_algebra(source.algebra(), target.algebra())?;
        let alg = source.algebra().clone();
        if blocks.len() != alg.vertex_count() {
            return Err(Error::InvalidMorphism(
                "one block per vertex required".into(),
            ));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.rows() != source.vertex_dim(v) || b.cols() != target.vertex_dim(v) {
                return Err(Error::InvalidMorphism(format!("block {v} has wrong shape")));
            }
        }
        let f = ModMorphism {
            source,
            target,
            blocks,
        };
        for &g in alg.generators() {
            let (s, t) = (alg.left(g), alg.right(g));
            if f.source.block(g).mul(&f.blocks[t]) != f.blocks[s].mul(f.target.block(g)) {
                return Err(Error::InvalidMorphism(format!(
                    "does not commute with generator {g}"
                )));
            }
        }
        Ok(f)
    }

    /// Builds a morphism from a full `d_source × d_target` matrix.
    pub fn from_matrix(source: FDModule, target: FDModule, m: &FpMatrix) -> Result<Self> {
        if m.rows() != source.dim() || m.cols() != target.dim() {
            return Err(Error::InvalidMorphism("matrix shape".into()));
        }
        let nv = source.algebra().vertex_count();
        for v in 0..nv {
            for w in 0..nv {
                if v != w
                    && !m
                        .block(
                            source.offset(v),
                            target.offset(w),
                            source.vertex_dim(v),
                            target.vertex_dim(w),
                        )
                        .is_zero()
                {
                    return Err(Error::InvalidMorphism("matrix mixes vertices".into()));
                }
            }
        }
        let blocks = (0..nv)
            .map(|v| {
                m.block(
                    source.offset(v),
                    target.offset(v),
                    source.vertex_dim(v),
                    target.vertex_dim(v),
                )
            })
            .collect();
        ModMorphism::new(source, target, blocks)
    }

    pub fn zero(source: FDModule, target: FDModule) -> Self {
        let p = source.prime();
        let blocks = (0..source.algebra().vertex_count())
            .map(|v| FpMatrix::zeros(source.vertex_dim(v), target.vertex_dim(v), p))
            .collect();
        ModMorphism {
            source,
            target,
            blocks,
        }
    }

    pub fn identity(m: FDModule) -> Self {
        let p = m.prime();
        let blocks = (0..m.algebra().vertex_count())
            .map(|v| FpMatrix::identity(m.vertex_dim(v), p))
            .collect();
        ModMorphism {
            source: m.clone(),
            target: m,
            blocks,
        }
    }

    pub fn source(&self) -> &FDModule {
        &self.source
    }

    pub fn target(&self) -> &FDModule {
        &self.target
    }

    pub fn blocks(&self) -> &[FpMatrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &FpMatrix {
        &self.blocks[v]
    }

    /// Full block-diagonal matrix.
    pub fn matrix(&self) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.source.dim(), self.target.dim(), self.source.prime());
        for (v, b) in self.blocks.iter().enumerate() {
            m.set_block(self.source.offset(v), self.target.offset(v), b);
        }
        m
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModMorphism) -> Result<ModMorphism> {
        if self.target.dims() != next.source.dims() {
            return Err(Error::InvalidMorphism(
                "composition of incompatible maps".into(),
            ));
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&next.blocks)
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(ModMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            blocks,
        })
    }

    pub fn add(&self, other: &ModMorphism) -> ModMorphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        ModMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn scale(&self, s: u32) -> ModMorphism {
        let blocks = self.blocks.iter().map(|a| a.scale(s)).collect();
        ModMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    /// Linear combination `Σ c_i f_i` of maps with common source and target.
    pub fn combination(
        source: &FDModule,
        target: &FDModule,
        maps: &[ModMorphism],
        coeffs: &[u32],
    ) -> ModMorphism {
        let mut acc = ModMorphism::zero(source.clone(), target.clone());
        for (f, &c) in maps.iter().zip(coeffs) {
            for (a, b) in acc.blocks.iter_mut().zip(&f.blocks) {
                a.add_scaled(b, c);
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// Flattened coordinates (vertex blocks in order), used to test linear dependence.
    pub(crate) fn flatten(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| b.data().iter().copied())
            .collect()
    }
}

/// Kernel with its inclusion.
pub fn kernel(f: &ModMorphism) -> Result<(FDModule, ModMorphism)> {
    let spaces: Vec<Subspace> = f
        .blocks
        .iter()
        .map(|b| Subspace::span(&b.kernel_basis()))
        .collect();
    f.source.submodule(&spaces)
}

/// Image as a submodule of the target, with the inclusion.
pub fn image(f: &ModMorphism) -> Result<(FDModule, ModMorphism)> {
    let spaces: Vec<Subspace> = f.blocks.iter().map(Subspace::span).collect();
    f.target.submodule(&spaces)
}

/// Cokernel with its projection.
pub fn cokernel(f: &ModMorphism) -> Result<(FDModule, ModMorphism)> {
    let spaces: Vec<Subspace> = f.blocks.iter().map(Subspace::span).collect();
    f.target.quotient(&spaces)
}

/// Which standard module to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StandardKind {
    Simple,
    Projective,
    Injective,
}

/// `S_v`, `P_v = e_v·Λ` or `I_v = D(Λ·e_v)`.
pub fn standard_module(alg: &Arc<ScAlgebra>, kind: StandardKind, v: usize) -> Result<FDModule> {
    if v >= alg.vertex_count() {
        return Err(Error::InvalidVertex(v));
    }
    Ok(match kind {
        StandardKind::Simple => simple(alg, v),
        StandardKind::Projective => projective(alg, v),
        StandardKind::Injective => injective(alg, v),
    })
}

pub(crate) fn simple(alg: &Arc<ScAlgebra>, v: usize) -> FDModule {
    let p = alg.prime();
    let mut dims = vec![0; alg.vertex_count()];
    dims[v] = 1;
    let blocks = (0..alg.dim())
        .map(|b| {
            let (s, t) = (alg.left(b), alg.right(b));
            if b == alg.vertex_idempotent(v) {
                FpMatrix::identity(1, p)
            } else {
                FpMatrix::zeros(dims[s], dims[t], p)
            }
        })
        .collect();
    FDModule::from_blocks_unchecked(alg.clone(), dims, blocks)
}

/// Basis elements of `e_v·Λ`, grouped by right vertex.
pub(crate) fn projective_basis(alg: &ScAlgebra, v: usize) -> Vec<Vec<usize>> {
    let mut groups = vec![Vec::new(); alg.vertex_count()];
    for b in 0..alg.dim() {
        if alg.left(b) == v {
            groups[alg.right(b)].push(b);
        }
    }
    groups
}

/// Basis elements of `Λ·e_v`, grouped by left vertex (the grading of `D(Λe_v)`).
pub(crate) fn injective_basis(alg: &ScAlgebra, v: usize) -> Vec<Vec<usize>> {
    let mut groups = vec![Vec::new(); alg.vertex_count()];
    for b in 0..alg.dim() {
        if alg.right(b) == v {
            groups[alg.left(b)].push(b);
        }
    }
    groups
}

pub(crate) fn projective(alg: &Arc<ScAlgebra>, v: usize) -> FDModule {
    let p = alg.prime();
    let groups = projective_basis(alg, v);
    let dims: Vec<usize> = groups.iter().map(|g| g.len()).collect();
    let blocks = (0..alg.dim())
        .map(|a| {
            let (s, t) = (alg.left(a), alg.right(a));
            let mut blk = FpMatrix::zeros(dims[s], dims[t], p);
            for (i, &x) in groups[s].iter().enumerate() {
                for &(k, c) in alg.mul(x, a) {
                    let j = groups[t]
                        .iter()
                        .position(|&y| y == k)
                        .expect("product stays in e_vΛ");
                    blk.set(i, j, c);
                }
            }
            blk
        })
        .collect();
    FDModule::from_blocks_unchecked(alg.clone(), dims, blocks)
}

pub(crate) fn injective(alg: &Arc<ScAlgebra>, v: usize) -> FDModule {
    let p = alg.prime();
    let groups = injective_basis(alg, v);
    let dims: Vec<usize> = groups.iter().map(|g| g.len()).collect();
    // (b*·a)(y) = b*(a·y): entry [b][y] = coefficient of b in a·y
    let blocks = (0..alg.dim())
        .map(|a| {
            let (s, t) = (alg.left(a), alg.right(a));
            let mut blk = FpMatrix::zeros(dims[s], dims[t], p);
            for (j, &y) in groups[t].iter().enumerate() {
                for &(k, c) in alg.mul(a, y) {
                    let i = groups[s]
                        .iter()
                        .position(|&x| x == k)
                        .expect("product stays in Λe_v");
                    blk.set(i, j, c);
                }
            }
            blk
        })
        .collect();
    FDModule::from_blocks_unchecked(alg.clone(), dims, blocks)
}

/// The regular module `Λ_Λ = ⊕ P_v`.
pub fn regular_module(alg: &Arc<ScAlgebra>) -> FDModule {
    let parts: Vec<FDModule> = (0..alg.vertex_count())
        .map(|v| projective(alg, v))
        .collect();
    FDModule::direct_sum_all(alg, &parts).expect("same algebra")
}

/// Radical, top and socle of a module.
pub struct RadTopSoc {
    pub radical: (FDModule, ModMorphism),
    pub top: (FDModule, ModMorphism),
    pub socle: (FDModule, ModMorphism),
}

pub(crate) fn radical_spaces(m: &FDModule) -> Vec<Subspace> {
    let alg = m.algebra();
    let p = m.prime();
    (0..alg.vertex_count())
        .map(|t| {
            let mut rows = FpMatrix::zeros(0, m.vertex_dim(t), p);
            for &g in alg.generators() {
                if alg.right(g) == t && m.vertex_dim(alg.left(g)) > 0 {
                    rows = rows.vstack(m.block(g));
                }
            }
            Subspace::span(&rows)
        })
        .collect()
}

pub(crate) fn socle_spaces(m: &FDModule) -> Vec<Subspace> {
    let alg = m.algebra();
    let p = m.prime();
    (0..alg.vertex_count())
        .map(|s| {
            let d = m.vertex_dim(s);
            let mut cols = FpMatrix::zeros(d, 0, p);
            for &g in alg.generators() {
                if alg.left(g) == s && m.vertex_dim(alg.right(g)) > 0 {
                    cols = cols.hstack(m.block(g));
                }
            }
            Subspace::span(&cols.kernel_basis())
        })
        .collect()
}

pub fn rad_top_soc(m: &FDModule) -> Result<RadTopSoc> {
    let rad = radical_spaces(m);
    let soc = socle_spaces(m);
    Ok(RadTopSoc {
        radical: m.submodule(&rad)?,
        top: m.quotient(&rad)?,
        socle: m.submodule(&soc)?,
    })
}

/// Multiplicities of simples in the top.
pub fn top_dims(m: &FDModule) -> Vec<usize> {
    radical_spaces(m)
        .iter()
        .enumerate()
        .map(|(v, s)| m.vertex_dim(v) - s.dim())
        .collect()
}

/// Multiplicities of simples in the socle.
pub fn socle_dims(m: &FDModule) -> Vec<usize> {
    socle_spaces(m).iter().map(|s| s.dim()).collect()
}

impl LayerEmbedding {
    /// Regards a module over the small algebra as a module over the big one,
    /// with the killed idempotents acting by zero.
    pub fn inflate(&self, m: &FDModule) -> Result<FDModule> {
        same_algebra(m.algebra(), self.small())?;
        let big = self.big();
        let p = m.prime();
        let mut dims = vec![0; big.vertex_count()];
        for (v, &bv) in self.vertex_map().iter().enumerate() {
            dims[bv] = m.vertex_dim(v);
        }
        let mut blocks: Vec<Option<FpMatrix>> = vec![None; big.dim()];
        for (b, &bb) in self.basis_map().iter().enumerate() {
            blocks[bb] = Some(m.block(b).clone());
        }
        let blocks = blocks
            .into_iter()
            .enumerate()
            .map(|(b, blk)| {
                blk.unwrap_or_else(|| FpMatrix::zeros(dims[big.left(b)], dims[big.right(b)], p))
            })
            .collect();
        Ok(FDModule::from_blocks_unchecked(big.clone(), dims, blocks))
    }

    /// Restricts a big-algebra module supported on the embedded layers back to
    /// the small algebra.
    pub fn deflate(&self, m: &FDModule) -> Result<FDModule> {
        same_algebra(m.algebra(), self.big())?;
        if self.killed_vertices().iter().any(|&v| m.vertex_dim(v) > 0) {
            return Err(Error::WindowExhausted(format!(
                "support layers {:?} not inside the embedded window",
                m.support_layers()
            )));
        }
        let dims = self
            .vertex_map()
            .iter()
            .map(|&bv| m.vertex_dim(bv))
            .collect();
        let blocks = self
            .basis_map()
            .iter()
            .map(|&bb| m.block(bb).clone())
            .collect();
        Ok(FDModule::from_blocks_unchecked(
            self.small().clone(),
            dims,
            blocks,
        ))
    }

    pub fn inflate_morphism(&self, f: &ModMorphism) -> Result<ModMorphism> {
        let s = self.inflate(f.source())?;
        let t = self.inflate(f.target())?;
        let p = s.prime();
        let mut blocks: Vec<FpMatrix> = (0..self.big().vertex_count())
            .map(|v| FpMatrix::zeros(s.vertex_dim(v), t.vertex_dim(v), p))
            .collect();
        for (v, &bv) in self.vertex_map().iter().enumerate() {
            blocks[bv] = f.block(v).clone();
        }
        Ok(ModMorphism::from_parts(s, t, blocks))
    }

    pub fn deflate_morphism(&self, f: &ModMorphism) -> Result<ModMorphism> {
        let s = self.deflate(f.source())?;
        let t = self.deflate(f.target())?;
        let blocks = self
            .vertex_map()
            .iter()
            .map(|&bv| f.block(bv).clone())
            .collect();
        Ok(ModMorphism::from_parts(s, t, blocks))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{replicated_algebra, vertex_index};
    use crate::linalg::DEFAULT_PRIME;
    use crate::quiver::Quiver;

    fn alg(m: usize) -> Arc<ScAlgebra> {
        replicated_algebra(&Quiver::linear_a(3), m, DEFAULT_PRIME).unwrap()
    }

    #[test]
    fn standard_modules_are_modules() {
        let a = alg(1);
        for v in 0..a.vertex_count() {
            for kind in [
                StandardKind::Simple,
                StandardKind::Projective,
                StandardKind::Injective,
            ] {
                standard_module(&a, kind, v).unwrap().validate().unwrap();
            }
        }
        assert!(matches!(
            standard_module(&a, StandardKind::Simple, 6),
            Err(Error::InvalidVertex(6))
        ));
    }

    #[test]
    fn projective_dimensions_level_zero() {
        let a = alg(0);
        let dims: Vec<usize> = (0..3).map(|v| projective(&a, v).dim()).collect();
        assert_eq!(dims, [3, 2, 1]);
    }

    #[test]
    fn projective_dimensions_duplicated() {
        let a = alg(1);
        // layer 0 holds the A-projectives, layer 1 the projective-injectives
        let bottom: Vec<usize> = (0..3)
            .map(|v| projective(&a, vertex_index(&a, v, 0)).dim())
            .collect();
        let top: Vec<usize> = (0..3)
            .map(|v| projective(&a, vertex_index(&a, v, 1)).dim())
            .collect();
        assert_eq!(bottom, [3, 2, 1]);
        assert_eq!(top, [4, 4, 4]);
        for v in 0..3 {
            let pi = projective(&a, vertex_index(&a, v, 1));
            assert_eq!(socle_dims(&pi).iter().sum::<usize>(), 1);
        }
    }

    #[test]
    fn from_actions_regrades_and_checks() {
        let a = alg(1);
        let p1 = projective(&a, vertex_index(&a, 0, 1));
        let actions: Vec<FpMatrix> = (0..a.dim()).map(|b| p1.action_matrix(b)).collect();
        let back = FDModule::from_actions(a.clone(), p1.dim(), &actions).unwrap();
        assert_eq!(back.dims(), p1.dims());
        let mut bad = actions.clone();
        bad[a.generators()[0]] = FpMatrix::identity(p1.dim(), DEFAULT_PRIME);
        assert!(FDModule::from_actions(a.clone(), p1.dim(), &bad).is_err());
    }

    #[test]
    fn kernel_and_cokernel_of_trivial_maps() {
        let a = alg(0);
        let p1 = projective(&a, 0);
        let s2 = simple(&a, 1);
        let z = ModMorphism::zero(p1.clone(), s2.clone());
        assert_eq!(kernel(&z).unwrap().0.dim(), p1.dim());
        assert_eq!(cokernel(&z).unwrap().0.dim(), s2.dim());
        let id = ModMorphism::identity(p1.clone());
        assert_eq!(kernel(&id).unwrap().0.dim(), 0);
        assert_eq!(cokernel(&id).unwrap().0.dim(), 0);
        assert_eq!(image(&id).unwrap().0.dim(), 3);
    }

    #[test]
    fn rad_top_soc_of_p1() {
        let a = alg(0);
        let p1 = projective(&a, 0);
        let r = rad_top_soc(&p1).unwrap();
        assert_eq!(r.radical.0.dims(), projective(&a, 1).dims());
        assert_eq!(r.top.0.dims(), simple(&a, 0).dims());
        assert_eq!(r.socle.0.dims(), simple(&a, 2).dims());
        let s = simple(&a, 1);
        let r = rad_top_soc(&s).unwrap();
        assert_eq!(
            (r.radical.0.dim(), r.top.0.dim(), r.socle.0.dim()),
            (0, 1, 1)
        );
    }

    #[test]
    fn inflation_round_trip() {
        let a = alg(1);
        let up = crate::algebra::truncation_embedding(&a, 2).unwrap();
        for v in 0..a.vertex_count() {
            let s = simple(&a, v);
            let big = up.inflate(&s).unwrap();
            big.validate().unwrap();
            assert_eq!(up.deflate(&big).unwrap().dims(), s.dims());
        }
    }

    #[test]
    fn json_round_trip() {
        let a = alg(1);
        let m = injective(&a, 2);
        let json = m.to_json();
        let back = FDModule::from_json(a.clone(), &json).unwrap();
        assert_eq!(back.dims(), m.dims());
        assert_eq!(back.to_json(), json);
    }
}
