//! The derived category of a hereditary algebra on stalk objects, and the
//! `m`-cluster category `D^b(A)/F` with `F = τ⁻¹[m]`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{replicated_algebra_arc, ScAlgebra};
use crate::decompose::is_isomorphic;
use crate::error::{Error, Result};
use crate::homology::{ext_dim, hom_dim, ProjectiveResolution};
use crate::linalg::FpMatrix;
use crate::module::{injective, injective_basis, kernel, projective, FDModule, ModMorphism};
use crate::par;
use crate::repetitive::HatWindow;

fn nakayama_block(alg: &ScAlgebra, x: &[(usize, u32)], vg: usize, vj: usize, w: usize) -> FpMatrix {
    // ν(y ↦ x·y): I_vg → I_vj sends b* to (a ↦ coefficient of b in a·x)
    let rows = &injective_basis(alg, vg)[w];
    let cols = &injective_basis(alg, vj)[w];
    let mut blk = FpMatrix::zeros(rows.len(), cols.len(), alg.prime());
    for (c, &a) in cols.iter().enumerate() {
        for (k, coef) in alg.mul_elem(&[(a, 1)], x) {
            if let Some(r) = rows.iter().position(|&b| b == k) {
                blk.set(r, c, coef);
            }
        }
    }
    blk
}

/// Auslander–Reiten translate of a module over a hereditary algebra, via the
/// Nakayama functor on a minimal projective presentation. Projectives go to 0.
pub fn tau_module(n: &FDModule) -> Result<FDModule> {
    let alg = n.algebra().clone();
    let res = ProjectiveResolution::new(n, None)?;
    match res.projective_dimension() {
        Some(0) => return Ok(FDModule::zero(alg)),
        Some(1) => {}
        _ => {
            return Err(Error::Precondition(
                "tau_module needs a module of projective dimension ≤ 1".into(),
            ))
        }
    }
    let (p0, p1) = (res.term(0).to_vec(), res.term(1).to_vec());
    let nu = |vs: &[usize]| {
        let parts: Vec<FDModule> = vs.iter().map(|&v| injective(&alg, v)).collect();
        FDModule::direct_sum_all(&alg, &parts)
    };
    let (src, tgt) = (nu(&p1)?, nu(&p0)?);
    let xs = res.diff_elements(1);
    let blocks = (0..alg.vertex_count())
        .map(|w| {
            let mut blk = FpMatrix::zeros(src.vertex_dim(w), tgt.vertex_dim(w), alg.prime());
            let mut r0 = 0;
            for (g, &vg) in p1.iter().enumerate() {
                let mut c0 = 0;
                for (j, &vj) in p0.iter().enumerate() {
                    let x = &xs[g][j];
                    let nb = nakayama_block(&alg, x, vg, vj, w);
                    if !x.is_empty() {
                        blk.set_block(r0, c0, &nb);
                    }
                    c0 += nb.cols();
                }
                r0 += injective_basis(&alg, vg)[w].len();
            }
            blk
        })
        .collect();
    let map = ModMorphism::new(src, tgt, blocks)?;
    Ok(kernel(&map)?.0)
}

/// Inverse translate `τ⁻ N = D τ_{A^op} D N`.
pub fn tau_inv_module(n: &FDModule, opposite: &Arc<ScAlgebra>) -> Result<FDModule> {
    let dn = n.dual(opposite.clone())?;
    let t = tau_module(&dn)?;
    t.dual(n.algebra().clone())
}

/// Indecomposable `A`-modules with their AR translates and Hom/Ext¹ tables.
pub struct DerivedModel {
    alg: Arc<ScAlgebra>,
    ind: Vec<FDModule>,
    proj: Vec<usize>,
    inj: Vec<usize>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    hom: Vec<Vec<usize>>,
    ext1: Vec<Vec<usize>>,
}

impl fmt::Debug for DerivedModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DerivedModel({}, {} indecomposables)",
            self.alg.id(),
            self.ind.len()
        )
    }
}

/// An indecomposable stalk complex `N[shift]`, `N` given by its index in the model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DbStalk {
    pub module: usize,
    pub shift: i64,
}

/// Canonical representative of an object of the `m`-cluster category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CmObject(pub DbStalk);

impl DerivedModel {
    /// Builds the model of `A = kQ` for a Dynkin quiver by τ⁻-orbits of projectives.
    pub fn new(alg: &Arc<ScAlgebra>) -> Result<Self> {
        let info = alg.replicated().filter(|r| r.level == 0).ok_or_else(|| {
            Error::Precondition("the derived model needs the hereditary algebra A^(0)".into())
        })?;
        let roots = info.quiver.dynkin_components().ok_or(Error::NotDynkin)?;
        let expected: usize = roots.iter().map(|d| d.positive_roots()).sum();
        let op = Arc::new(alg.opposite());
        let n = alg.vertex_count();
        let mut ind: Vec<FDModule> = (0..n).map(|v| projective(alg, v)).collect();
        let mut tau_inv = vec![None; n];
        let mut tau = vec![None; n];
        let mut k = 0;
        while k < ind.len() {
            let next = tau_inv_module(&ind[k], &op)?;
            if !next.is_zero() {
                if ind.len() >= expected {
                    return Err(Error::Internal(
                        "more indecomposables than positive roots".into(),
                    ));
                }
                ind.push(next);
                tau_inv.push(None);
                tau.push(Some(k));
                tau_inv[k] = Some(ind.len() - 1);
            }
            k += 1;
        }
        if ind.len() != expected {
            return Err(Error::Internal(format!(
                "found {} indecomposables, expected {expected}",
                ind.len()
            )));
        }
        let proj = (0..n).collect();
        let mut inj = Vec::with_capacity(n);
        for v in 0..n {
            let iv = injective(alg, v);
            let mut found = None;
            for (i, x) in ind.iter().enumerate() {
                if tau_inv[i].is_none() && is_isomorphic(x, &iv)? {
                    found = Some(i);
                    break;
                }
            }
            inj.push(found.ok_or_else(|| Error::Internal(format!("injective I_{v} not found")))?);
        }
        let rows: Vec<Result<(Vec<usize>, Vec<usize>)>> = par::map(&ind, |x| {
            let mut h = Vec::with_capacity(ind.len());
            let mut e = Vec::with_capacity(ind.len());
            for y in &ind {
                h.push(hom_dim(x, y)?);
                e.push(ext_dim(1, x, y)?);
            }
            Ok((h, e))
        });
        let mut hom = Vec::new();
        let mut ext1 = Vec::new();
        for r in rows {
            let (h, e) = r?;
            hom.push(h);
            ext1.push(e);
        }
        Ok(DerivedModel {
            alg: alg.clone(),
            ind,
            proj,
            inj,
            tau,
            tau_inv,
            hom,
            ext1,
        })
    }

    /// Convenience constructor from a replicated algebra of any level.
    pub fn for_quiver_of(alg: &Arc<ScAlgebra>) -> Result<Self> {
        let info = alg
            .replicated()
            .ok_or_else(|| Error::Precondition("not a replicated algebra".into()))?;
        let a0 = replicated_algebra_arc(info.quiver.clone(), 0, alg.prime())?;
        DerivedModel::new(&a0)
    }

    pub fn algebra(&self) -> &Arc<ScAlgebra> {
        &self.alg
    }

    pub fn indecomposables(&self) -> &[FDModule] {
        &self.ind
    }

    pub fn len(&self) -> usize {
        self.ind.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ind.is_empty()
    }

    pub fn projective_index(&self, v: usize) -> usize {
        self.proj[v]
    }

    pub fn injective_index(&self, v: usize) -> usize {
        self.inj[v]
    }

    pub fn is_projective(&self, i: usize) -> bool {
        self.tau[i].is_none()
    }

    pub fn is_injective(&self, i: usize) -> bool {
        self.tau_inv[i].is_none()
    }

    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    pub fn ext1(&self, i: usize, j: usize) -> usize {
        self.ext1[i][j]
    }

    /// Index of an indecomposable `A`-module.
    pub fn index_of(&self, n: &FDModule) -> Result<usize> {
        for (i, x) in self.ind.iter().enumerate() {
            if x.dims() == n.dims() && is_isomorphic(x, n)? {
                return Ok(i);
            }
        }
        Err(Error::Precondition(
            "module is not an indecomposable A-module".into(),
        ))
    }

    /// `τ` on stalks; `τ(P_v[l]) = I_v[l-1]`.
    pub fn tau(&self, x: DbStalk) -> DbStalk {
        match self.tau[x.module] {
            Some(t) => DbStalk {
                module: t,
                shift: x.shift,
            },
            None => {
                let v = self
                    .proj
                    .iter()
                    .position(|&p| p == x.module)
                    .expect("projective");
                DbStalk {
                    module: self.inj[v],
                    shift: x.shift - 1,
                }
            }
        }
    }

    /// `τ⁻` on stalks; `τ⁻(I_v[l]) = P_v[l+1]`.
    pub fn tau_inv(&self, x: DbStalk) -> DbStalk {
        match self.tau_inv[x.module] {
            Some(t) => DbStalk {
                module: t,
                shift: x.shift,
            },
            None => {
                let v = self
                    .inj
                    .iter()
                    .position(|&p| p == x.module)
                    .expect("injective");
                DbStalk {
                    module: self.proj[v],
                    shift: x.shift + 1,
                }
            }
        }
    }

    /// `dim Hom_{D^b(A)}(X, Y)` for stalks: Hom in equal degrees, Ext¹ one step up.
    pub fn hom_db(&self, x: DbStalk, y: DbStalk) -> usize {
        if y.shift == x.shift {
            self.hom[x.module][y.module]
        } else if y.shift == x.shift + 1 {
            self.ext1[x.module][y.module]
        } else {
            0
        }
    }

    /// `F^z X` with `F = τ⁻¹[m]`.
    pub fn f_power(&self, x: DbStalk, z: i64, m: usize) -> DbStalk {
        let mut cur = x;
        for _ in 0..z.unsigned_abs() {
            cur = if z > 0 {
                let t = self.tau_inv(cur);
                DbStalk {
                    module: t.module,
                    shift: t.shift + m as i64,
                }
            } else {
                let t = self.tau(cur);
                DbStalk {
                    module: t.module,
                    shift: t.shift - m as i64,
                }
            };
        }
        cur
    }

    /// Whether a stalk lies in the fundamental domain `{N[q] : 0 ≤ q < m} ∪ {P_v[m]}`.
    pub fn in_domain(&self, x: DbStalk, m: usize) -> bool {
        let m = m as i64;
        (0..m).contains(&x.shift) || (x.shift == m && self.is_projective(x.module))
    }

    /// The representative of the `F`-orbit of `x` in the fundamental domain.
    pub fn cm_normalize(&self, x: DbStalk, m: usize) -> Result<CmObject> {
        if m == 0 {
            return Err(Error::Precondition(
                "the cluster category needs m ≥ 1".into(),
            ));
        }
        let bound = x.shift.unsigned_abs() as usize / m + 3;
        let mut cur = x;
        for _ in 0..=bound {
            if self.in_domain(cur, m) {
                return Ok(CmObject(cur));
            }
            cur = if cur.shift < 0 {
                self.f_power(cur, 1, m)
            } else {
                self.f_power(cur, -1, m)
            };
        }
        Err(Error::Internal(format!(
            "normalization of {x:?} did not terminate"
        )))
    }

    /// `dim Ext^i_{C_m}(X, Y) = Σ_z dim Hom_D(F^z X, Y[i])`, `|z| ≤ 2`; the
    /// `|z| = 2` terms are checked to vanish.
    pub fn ext_cm(&self, i: usize, x: CmObject, y: CmObject, m: usize) -> Result<usize> {
        let target = DbStalk {
            module: y.0.module,
            shift: y.0.shift + i as i64,
        };
        let mut total = 0;
        for z in -2..=2i64 {
            let d = self.hom_db(self.f_power(x.0, z, m), target);
            if z.abs() == 2 && d != 0 {
                return Err(Error::Internal(format!(
                    "nonvanishing F^{z} term in Ext^{i}({x:?}, {y:?})"
                )));
            }
            total += d;
        }
        Ok(total)
    }

    /// All objects of the fundamental domain: `m·|ind A| + n` of them.
    pub fn cm_objects(&self, m: usize) -> Vec<CmObject> {
        let mut out = Vec::new();
        for q in 0..m as i64 {
            out.extend((0..self.ind.len()).map(|i| {
                CmObject(DbStalk {
                    module: i,
                    shift: q,
                })
            }));
        }
        out.extend(self.proj.iter().map(|&p| {
            CmObject(DbStalk {
                module: p,
                shift: m as i64,
            })
        }));
        out
    }
}

/// `π: mod A^(m) → C_m(A)`: `None` for projective-injectives, otherwise the
/// normalized `N[deg M]`.
pub fn pi(model: &DerivedModel, window: &HatWindow, x: &FDModule) -> Result<Option<CmObject>> {
    let m = window.inner().level().unwrap_or(0);
    match window.degree(x) {
        Err(Error::ProjectiveInjective) => Ok(None),
        Err(e) => Err(e),
        Ok((l, n)) => {
            let idx = model.index_of(&n)?;
            Ok(Some(model.cm_normalize(
                DbStalk {
                    module: idx,
                    shift: l as i64,
                },
                m,
            )?))
        }
    }
}

/// The `m`-cluster category of a Dynkin quiver: objects, Ext tables and
/// the compatibility graph.
pub struct ClusterCategory {
    model: Arc<DerivedModel>,
    m: usize,
    objects: Vec<CmObject>,
    /// `ext[i][x][y] = dim Ext^i(X, Y)` for `0 ≤ i ≤ m`.
    ext: Vec<Vec<Vec<usize>>>,
}

impl fmt::Debug for ClusterCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ClusterCategory(m = {}, {} objects)",
            self.m,
            self.objects.len()
        )
    }
}

impl ClusterCategory {
    pub fn new(model: Arc<DerivedModel>, m: usize) -> Result<Self> {
        let objects = model.cm_objects(m);
        let mut ext = Vec::with_capacity(m + 1);
        for i in 0..=m {
            let rows: Vec<Result<Vec<usize>>> = par::map(&objects, |&x| {
                objects.iter().map(|&y| model.ext_cm(i, x, y, m)).collect()
            });
            ext.push(rows.into_iter().collect::<Result<Vec<_>>>()?);
        }
        Ok(ClusterCategory {
            model,
            m,
            objects,
            ext,
        })
    }

    pub fn model(&self) -> &Arc<DerivedModel> {
        &self.model
    }

    pub fn level(&self) -> usize {
        self.m
    }

    pub fn objects(&self) -> &[CmObject] {
        &self.objects
    }

    pub fn index(&self, x: CmObject) -> Option<usize> {
        self.objects.iter().position(|&o| o == x)
    }

    pub fn ext(&self, i: usize, x: usize, y: usize) -> usize {
        self.ext[i][x][y]
    }

    fn rigid(&self, x: usize) -> bool {
        (1..=self.m).all(|i| self.ext[i][x][x] == 0)
    }

    fn compatible(&self, x: usize, y: usize) -> bool {
        (1..=self.m).all(|i| self.ext[i][x][y] == 0 && self.ext[i][y][x] == 0)
    }

    /// Exceptional and maximal.
    pub fn is_cluster_tilting(&self, set: &[usize]) -> bool {
        let exceptional = set.iter().all(|&x| self.rigid(x))
            && set
                .iter()
                .all(|&x| set.iter().all(|&y| self.compatible(x, y)));
        exceptional
            && (0..self.objects.len())
                .filter(|z| !set.contains(z))
                .all(|z| !(self.rigid(z) && set.iter().all(|&x| self.compatible(x, z))))
    }

    /// All `m`-cluster tilting objects, as sorted index sets, by maximal
    /// clique enumeration on the compatibility graph.
    pub fn cluster_tilting_objects(&self) -> Vec<Vec<usize>> {
        let verts: Vec<usize> = (0..self.objects.len()).filter(|&x| self.rigid(x)).collect();
        let adj: Vec<BTreeSet<usize>> = (0..self.objects.len())
            .map(|x| {
                verts
                    .iter()
                    .copied()
                    .filter(|&y| y != x && self.compatible(x, y))
                    .collect()
            })
            .collect();
        let mut out = Vec::new();
        bron_kerbosch(
            &adj,
            Vec::new(),
            verts.iter().copied().collect(),
            BTreeSet::new(),
            &mut out,
        );
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    /// Complements of an almost complete tilting object, by exhaustive scan.
    pub fn complements(&self, almost: &[usize]) -> Vec<usize> {
        (0..self.objects.len())
            .filter(|z| !almost.contains(z))
            .filter(|&z| {
                let mut s = almost.to_vec();
                s.push(z);
                self.is_cluster_tilting(&s)
            })
            .collect()
    }
}

fn bron_kerbosch(
    adj: &[BTreeSet<usize>],
    r: Vec<usize>,
    mut p: BTreeSet<usize>,
    mut x: BTreeSet<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&&u| adj[u].intersection(&p).count())
        .copied()
        .unwrap();
    let candidates: Vec<usize> = p.difference(&adj[pivot]).copied().collect();
    for v in candidates {
        let mut r2 = r.clone();
        r2.push(v);
        let p2 = p.intersection(&adj[v]).copied().collect();
        let x2 = x.intersection(&adj[v]).copied().collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.remove(&v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::replicated_algebra;
    use crate::linalg::DEFAULT_PRIME;
    use crate::module::simple;
    use crate::quiver::Quiver;

    fn a3_model() -> DerivedModel {
        let a = replicated_algebra(&Quiver::linear_a(3), 0, DEFAULT_PRIME).unwrap();
        DerivedModel::new(&a).unwrap()
    }

    #[test]
    fn tau_of_simple_top() {
        let a = replicated_algebra(&Quiver::linear_a(3), 0, DEFAULT_PRIME).unwrap();
        let t = tau_module(&simple(&a, 0)).unwrap();
        assert!(is_isomorphic(&t, &simple(&a, 1)).unwrap());
        let op = Arc::new(a.opposite());
        let back = tau_inv_module(&t, &op).unwrap();
        assert!(is_isomorphic(&back, &simple(&a, 0)).unwrap());
        assert!(tau_module(&projective(&a, 0)).unwrap().is_zero());
    }

    #[test]
    fn model_of_a3() {
        let model = a3_model();
        assert_eq!(model.len(), 6);
        let x = DbStalk {
            module: model.projective_index(0),
            shift: 0,
        };
        assert_eq!(
            model.tau(x),
            DbStalk {
                module: model.injective_index(0),
                shift: -1
            }
        );
        for i in 0..model.len() {
            let s = DbStalk {
                module: i,
                shift: 5,
            };
            assert_eq!(model.tau_inv(model.tau(s)), s);
            assert_eq!(model.tau(model.tau_inv(s)), s);
        }
    }

    #[test]
    fn hom_db_examples() {
        let a = replicated_algebra(&Quiver::linear_a(3), 0, DEFAULT_PRIME).unwrap();
        let model = DerivedModel::new(&a).unwrap();
        let s1 = model.index_of(&simple(&a, 0)).unwrap();
        let s2 = model.index_of(&simple(&a, 1)).unwrap();
        assert_eq!(
            model.hom_db(
                DbStalk {
                    module: s1,
                    shift: 0
                },
                DbStalk {
                    module: s2,
                    shift: 1
                }
            ),
            1
        );
        assert_eq!(
            model.hom_db(
                DbStalk {
                    module: s1,
                    shift: 0
                },
                DbStalk {
                    module: s2,
                    shift: 2
                }
            ),
            0
        );
        assert_eq!(
            model.hom_db(
                DbStalk {
                    module: s1,
                    shift: 3
                },
                DbStalk {
                    module: s1,
                    shift: 3
                }
            ),
            1
        );
    }

    #[test]
    fn normalization_is_idempotent_and_orbit_invariant() {
        let model = a3_model();
        for m in 1..=2usize {
            for i in 0..model.len() {
                for shift in -(3 * m as i64)..=(3 * m as i64) {
                    let x = DbStalk { module: i, shift };
                    let c = model.cm_normalize(x, m).unwrap();
                    assert_eq!(model.cm_normalize(c.0, m).unwrap(), c);
                    for z in -3..=3 {
                        assert_eq!(model.cm_normalize(model.f_power(x, z, m), m).unwrap(), c);
                    }
                }
            }
        }
    }

    #[test]
    fn cluster_counts_for_a3() {
        let model = Arc::new(a3_model());
        for (m, objects, tilting) in [(1, 9, 14), (2, 15, 55)] {
            let c = ClusterCategory::new(model.clone(), m).unwrap();
            assert_eq!(c.objects().len(), objects);
            let all = c.cluster_tilting_objects();
            assert_eq!(all.len(), tilting);
            assert!(all.iter().all(|t| t.len() == 3));
            for t in &all {
                for k in 0..t.len() {
                    let mut almost = t.clone();
                    almost.remove(k);
                    assert_eq!(c.complements(&almost).len(), m + 1);
                }
            }
        }
    }
}
